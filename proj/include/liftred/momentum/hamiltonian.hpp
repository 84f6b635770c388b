#pragma once

#include <string>
#include <vector>

#include "liftred/expr/linalg.hpp"
#include "liftred/momentum/pgmap.hpp"
#include "liftred/tangent/coordinate_map.hpp"

namespace liftred {

/// c_i with base form dJ_i, so that c_i = i_T dJ_i = d_T J_i.
inline std::vector<FiberLinearFunction> hamiltonian_comomentum(const MomentumMapData &j) {
    std::vector<FiberLinearFunction> out;
    for (const auto &f : j.components)
        out.push_back({exterior_derivative(DifferentialForm::function(j.chart, j.chart.function(f)))});
    return out;
}

/// PG-map with images dJ_i over the given bialgebra.
inline PGMap hamiltonian_pgmap(const MomentumMapData &j, const LieBialgebra &b) {
    std::vector<DifferentialForm> images;
    for (const auto &c : hamiltonian_comomentum(j)) images.push_back(c.base_form);
    return PGMap(b, j.chart, std::move(images));
}

/// d_T J_i computed as the complete lift of a function against the
/// comomentum of the PG-map with images dJ_i.
inline CheckReport hamiltonian_comomentum_check(const MomentumMapData &j, const LieBialgebra &b) {
    const TangentChart tc = tangent_chart(j.chart);
    const PGMap phi = hamiltonian_pgmap(j, b);
    CheckReport r("hamiltonian-comomentum", "c_x = i_T dJ_x = d_T J_x");
    for (std::size_t i = 0; i < j.components.size(); ++i)
        r.add_residual("c(" + b.names().at(i) + ")",
                       d_T(tc, j.chart.function(j.components[i])) - comomentum(phi, phi.basis_vector(i)).on(tc));
    return r;
}

namespace detail {

inline RationalMatrix jacobian_at(const std::vector<Polynomial> &fs, const std::vector<std::string> &vars,
                                  const Polynomial::Assignment &at) {
    RationalMatrix m(fs.size(), std::vector<Rational>(vars.size()));
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t k = 0; k < vars.size(); ++k) m[i][k] = fs[i].derivative(vars[k]).evaluate(at);
    return m;
}

} // namespace detail

/// Compares T(J⁻¹(0)) with the kernel of d_T J along a parametrized piece of
/// the level set. The forward inclusion is checked symbolically in the
/// parameters; the converse by exact rank tests at the sample points.
inline CheckReport level_set_tangency_check(const MomentumMapData &j, const CoordinateMap &param,
                                            const std::vector<Polynomial::Assignment> &samples) {
    require_same_chart(j.chart, param.target(), "level_set_tangency_check");
    const Chart &m = j.chart;
    const Chart &s = param.source();
    std::vector<Polynomial> jm;
    for (const auto &f : j.components) jm.push_back(m.function(f));
    for (std::size_t i = 0; i < j.components.size(); ++i) {
        const Polynomial restricted = param.pullback(m.function(j.components[i]));
        if (!restricted.is_zero())
            throw ParametrizationNotInLevelSet("J_" + std::to_string(i + 1) + " restricted to the parametrization is " +
                                               restricted.to_string());
    }

    CheckReport r("level-set-tangency", "ker d_T J restricted to J^-1(0) equals T(J^-1(0))");
    const TangentChart tc = tangent_chart(m);
    std::map<std::string, Polynomial, std::less<>> base_subs;
    for (std::size_t k = 0; k < m.dim(); ++k) base_subs.emplace(m.coords()[k], param.components()[k]);

    // Forward: d_T J_i at (x(s), ∂x/∂s_a) vanishes identically in s.
    for (std::size_t a = 0; a < s.dim(); ++a) {
        auto subs = base_subs;
        for (std::size_t k = 0; k < m.dim(); ++k)
            subs.emplace(tc.total.coords()[tc.fiber_index(k)], param.components()[k].derivative(s.coords()[a]));
        for (std::size_t i = 0; i < j.components.size(); ++i) {
            const Polynomial dtj = d_T(tc, m.function(j.components[i]));
            r.add_residual("d_T J_" + std::to_string(i + 1) + "(d/d" + s.coords()[a] + ")",
                           s.function(dtj.compose(subs)));
        }
    }

    // Converse: every vector killed by DJ(x) lies in the span of the pushforwards.
    std::size_t regular_failures = 0, degenerate_failures = 0;
    for (std::size_t n = 0; n < samples.size(); ++n) {
        Polynomial::Assignment x;
        for (std::size_t k = 0; k < m.dim(); ++k) x.emplace(m.coords()[k], param.components()[k].evaluate(samples[n]));
        const RationalMatrix dj = detail::jacobian_at(jm, m.coords(), x);
        const RationalMatrix w = detail::jacobian_at(param.components(), s.coords(), samples[n]);
        const std::size_t rank_w = rank(w);
        bool contained = true;
        for (const auto &v : nullspace(dj, m.dim())) {
            RationalMatrix aug = w;
            for (std::size_t k = 0; k < m.dim(); ++k) aug[k].push_back(v[k]);
            if (rank(aug) != rank_w) contained = false;
        }
        if (contained) continue;
        if (rank(dj) < j.components.size())
            ++degenerate_failures;
        else
            ++regular_failures;
    }
    if (regular_failures > 0)
        r.add_residual("converse", Polynomial::constant(Rational(static_cast<long>(regular_failures))));
    if (degenerate_failures > 0 && r.passed()) {
        r.make_informative();
        r.note("RankDeficient: DJ drops rank at " + std::to_string(degenerate_failures) + " of " +
               std::to_string(samples.size()) + " sample points; 0 is not a regular value there");
    }
    r.note("converse direction checked at " + std::to_string(samples.size()) + " sample points");
    return r;
}

} // namespace liftred
