#pragma once

#include "liftred/errors.hpp"
#include "liftred/expr/linalg.hpp"
#include "liftred/expr/parse.hpp"
#include "liftred/expr/polynomial.hpp"
#include "liftred/expr/rational.hpp"

#include "liftred/chart/calculus.hpp"
#include "liftred/chart/chart.hpp"
#include "liftred/chart/literal.hpp"
#include "liftred/chart/poisson.hpp"
#include "liftred/chart/symplectic.hpp"
#include "liftred/chart/tensor.hpp"

#include "liftred/tangent/coordinate_map.hpp"
#include "liftred/tangent/derivations.hpp"
#include "liftred/tangent/lifts.hpp"
#include "liftred/tangent/tangent_chart.hpp"

#include "liftred/bialgebra/bialgebra.hpp"

#include "liftred/momentum/hamiltonian.hpp"
#include "liftred/momentum/pgmap.hpp"
#include "liftred/momentum/reduction.hpp"
#include "liftred/momentum/symplectic_action.hpp"

#include "liftred/numeric/oracle.hpp"
#include "liftred/numeric/random.hpp"

#include "liftred/report/check_report.hpp"
#include "liftred/report/report_io.hpp"

#include "liftred/cli/catalog.hpp"
#include "liftred/cli/commands.hpp"
#include "liftred/cli/problem_file.hpp"
