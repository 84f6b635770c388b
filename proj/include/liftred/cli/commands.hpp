#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "liftred/bialgebra/bialgebra.hpp"
#include "liftred/chart/symplectic.hpp"
#include "liftred/cli/problem_file.hpp"
#include "liftred/momentum/hamiltonian.hpp"
#include "liftred/momentum/reduction.hpp"
#include "liftred/momentum/symplectic_action.hpp"
#include "liftred/numeric/oracle.hpp"
#include "liftred/numeric/random.hpp"
#include "liftred/report/report_io.hpp"
#include "liftred/tangent/lifts.hpp"

namespace liftred {

/// Command-line overrides; they take precedence over the file's oracle block.
struct RunOptions {
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> samples;
    std::optional<Interval> box;
    std::optional<Rational> fd_step;
};

struct RunResult {
    std::vector<CheckReport> reports;
    int exit_code = 0;
};

inline constexpr double kFdTolerance = 1e-6;
inline constexpr unsigned kRandomFormDegree = 3;

inline const std::vector<std::string> &command_names() {
    static const std::vector<std::string> names = {
        "check-poisson", "lift",     "verify-lift", "verify-lemma", "certify-pgmap", "bracket-closure",
        "tangent-generator", "characteristic-identity", "hamiltonian", "symplectic", "all"};
    return names;
}

inline SamplePlan sample_plan(const ProblemFile &pf, const RunOptions &opt) {
    SamplePlan plan;
    if (pf.oracle.samples) plan.count = *pf.oracle.samples;
    if (pf.oracle.seed) plan.seed = *pf.oracle.seed;
    if (pf.oracle.box) plan.box = *pf.oracle.box;
    plan.overrides = pf.oracle.coordinate_boxes;
    if (opt.samples) plan.count = *opt.samples;
    if (opt.seed) plan.seed = *opt.seed;
    if (opt.box) plan.box = *opt.box;
    plan.validate();
    return plan;
}

inline Rational fd_step(const ProblemFile &pf, const RunOptions &opt) {
    if (opt.fd_step) return *opt.fd_step;
    if (pf.oracle.fd_step) return *pf.oracle.fd_step;
    return default_fd_step();
}

/// The file's Poisson structure: the bivector, or the inverse of ω.
inline std::optional<PoissonStructure> problem_poisson(const ProblemFile &pf) {
    if (pf.poisson) return PoissonStructure::verify(*pf.poisson);
    if (pf.symplectic) return SymplecticForm::make(*pf.symplectic).poisson();
    return std::nullopt;
}

namespace detail {

class Runner {
  public:
    Runner(const ProblemFile &pf, const RunOptions &opt) : pf_(pf), plan_(sample_plan(pf, opt)), h_(fd_step(pf, opt)) {}

    std::vector<CheckReport> dispatch(const std::string &command) {
        if (command == "check-poisson") return {check_poisson()};
        if (command == "lift") return {lift()};
        if (command == "verify-lift") return {verify_lift()};
        if (command == "verify-lemma") return {verify_lemma()};
        if (command == "certify-pgmap") return {certify_pgmap(pgmap(), poisson())};
        if (command == "bracket-closure") return {bracket_closure_check(pgmap(), poisson())};
        if (command == "tangent-generator") return {tangent_generator_check(pgmap(), poisson())};
        if (command == "characteristic-identity") return {characteristic_identity_check(pgmap(), poisson())};
        if (command == "hamiltonian") return hamiltonian();
        if (command == "symplectic") return symplectic();
        if (command == "all") return all();
        std::string names;
        for (const auto &n : command_names()) names += (names.empty() ? "" : ", ") + n;
        throw InvalidInput("unknown command '" + command + "'; commands: " + names);
    }

    const SamplePlan &plan() const { return plan_; }

  private:
    const PoissonStructure &poisson_any() {
        if (!pi_) {
            pi_ = problem_poisson(pf_);
            if (!pi_) throw InvalidInput("the problem declares neither 'poisson' nor 'symplectic'");
        }
        return *pi_;
    }

    const PoissonStructure &poisson() {
        const PoissonStructure &pi = poisson_any();
        if (!pi.jacobi_verified()) throw UnverifiedInput("the bivector fails the Jacobi check; run check-poisson");
        return pi;
    }

    PGMap pgmap() const {
        if (!pf_.pgmap) throw InvalidInput("the problem has no pgmap block");
        return PGMap(*pf_.bialgebra, pf_.chart, *pf_.pgmap);
    }

    MomentumMapData momentum() const {
        if (!pf_.momentum) throw InvalidInput("the problem has no momentum block");
        return {pf_.chart, *pf_.momentum};
    }

    CheckReport check_poisson() {
        const PoissonStructure &pi = poisson_any();
        CheckReport r("check-poisson", "[pi, pi] = 0 under the Schouten bracket");
        r.add_residual("[pi,pi]", jacobi_check(pi.bivector()));
        if (pf_.symplectic) r.note("bivector is the inverse of the symplectic form");
        return r;
    }

    CheckReport lift() {
        const PoissonStructure &pi = poisson_any();
        const TangentChart tc = tangent_chart(pf_.chart);
        if (!pi.jacobi_verified()) {
            CheckReport r("lift", "complete lift pi_TM of a Poisson bivector");
            r.add_residual("[pi,pi]", jacobi_check(pi.bivector()));
            r.note("the complete lift is only computed for Poisson bivectors");
            return r;
        }
        CheckReport r("lift", "complete lift pi_TM of a Poisson bivector");
        r.make_informative();
        r.note("pi_TM = " + to_string(complete_lift_bivector(tc, pi).bivector()));
        return r;
    }

    CheckReport verify_lift() {
        const TangentChart tc = tangent_chart(pf_.chart);
        const PoissonStructure &pi = poisson();
        return verify_tangent_lift_identity(tc, pi, complete_lift_bivector(tc, pi));
    }

    CheckReport verify_lemma() {
        const TangentChart tc = tangent_chart(pf_.chart);
        std::mt19937_64 rng(plan_.seed);
        CheckReport r("verify-lemma", "alpha_M o T(theta) = d_T theta for random polynomial 1-forms");
        for (std::size_t k = 0; k < plan_.count; ++k) {
            const DifferentialForm theta = random_form(pf_.chart, 1, rng, kRandomFormDegree);
            const CheckReport one = verify_lemma_alpha_dT(tc, theta);
            for (const auto &res : one.residuals)
                if (!res.zero) r.add_failure("form " + std::to_string(k + 1) + " " + res.name, res.text);
        }
        r.note(std::to_string(plan_.count) + " forms with coefficients of degree <= " +
               std::to_string(kRandomFormDegree) + ", seed " + std::to_string(plan_.seed));
        return r;
    }

    std::vector<CheckReport> hamiltonian() {
        const MomentumMapData j = momentum();
        std::vector<CheckReport> out{hamiltonian_comomentum_check(j, *pf_.bialgebra)};
        if (pf_.level_set) {
            const CoordinateMap param(pf_.level_set->params, pf_.chart, pf_.level_set->components);
            auto points = plan_.points(pf_.level_set->params.coords());
            if (pf_.level_set->params.dim() == 0) points.resize(1);
            out.push_back(level_set_tangency_check(j, param, points));
        }
        return out;
    }

    std::vector<CheckReport> symplectic() {
        if (!pf_.symplectic) throw InvalidInput("the problem has no symplectic form");
        if (!pf_.action) throw InvalidInput("the problem has no action block");
        const SymplecticForm omega = SymplecticForm::make(*pf_.symplectic);
        return {symplectic_pgmap(omega, *pf_.bialgebra, *pf_.action).report,
                cotangent_momentum_relation(omega, *pf_.action)};
    }

    CheckReport generation() {
        const PGMap phi = pgmap();
        const PoissonStructure &pi = poisson();
        CheckReport r("pgmap-generation", "phi(x) = pi^sharp(phi_x) is the stated action generator");
        for (std::size_t i = 0; i < phi.dim(); ++i)
            r.add_residual("X(" + phi.bialgebra().names()[i] + ")",
                           generator(phi, pi, phi.basis_vector(i)) - (*pf_.action)[i]);
        return r;
    }

    CheckReport oracle_fd() {
        std::vector<Polynomial> fs;
        if (pi_)
            for (const auto &[idx, c] : pi_->bivector().components()) fs.push_back(c);
        if (pf_.pgmap)
            for (const auto &im : *pf_.pgmap)
                for (const auto &[idx, c] : im.components()) fs.push_back(c);
        if (pf_.momentum)
            for (const auto &f : *pf_.momentum) fs.push_back(pf_.chart.function(f));
        CheckReport r("oracle-fd", "central differences against symbolic partial derivatives");
        const auto points = plan_.points(pf_.chart.coords());
        double worst = 0.0;
        for (const auto &f : fs)
            for (const auto &pt : points) worst = std::max(worst, fd_derivative_check(f, pt, h_));
        if (worst > kFdTolerance) r.add_failure("fd-relative-error", detail::format_double(worst));
        r.samples.push_back({"fd-relative-error", worst});
        r.note("step " + to_string(h_) + ", tolerance 1e-6 relative, " + std::to_string(fs.size()) + " polynomials");
        return r;
    }

    std::vector<CheckReport> all() {
        std::vector<CheckReport> out;
        const bool has_structure = pf_.poisson || pf_.symplectic;
        bool poisson_ok = false;
        if (has_structure) {
            out.push_back(check_poisson());
            poisson_ok = poisson_any().jacobi_verified();
            if (poisson_ok) {
                out.push_back(lift());
                out.push_back(verify_lift());
            }
        }
        out.push_back(verify_lemma());
        if (pf_.explicit_bialgebra) {
            out.push_back(check_jacobi(*pf_.bialgebra));
            out.push_back(check_cocycle(*pf_.bialgebra));
            out.push_back(check_cojacobi(*pf_.bialgebra));
        }
        const bool inputs_ok = poisson_ok && pf_.bialgebra && pf_.bialgebra->verified();
        if (pf_.pgmap && inputs_ok) {
            const PGMap phi = pgmap();
            const PoissonStructure &pi = poisson();
            out.push_back(certify_pgmap(phi, pi));
            out.push_back(bracket_closure_check(phi, pi));
            out.push_back(tangent_generator_check(phi, pi));
            out.push_back(characteristic_identity_check(phi, pi));
            if (pf_.action) out.push_back(generation());
        } else if (pf_.pgmap) {
            CheckReport skipped("certify-pgmap", "PG-map checks need a verified Poisson structure and bialgebra");
            skipped.make_informative();
            skipped.note("skipped: unverified inputs");
            out.push_back(skipped);
        }
        if (pf_.expected_comomentum) {
            if (!pf_.pgmap) throw InvalidInput("expect_comomentum needs a pgmap block");
            out.push_back(comomentum_expectation_check(pgmap(), *pf_.expected_comomentum));
        }
        if (pf_.momentum)
            for (auto &r : hamiltonian()) out.push_back(std::move(r));
        if (pf_.symplectic && pf_.action)
            for (auto &r : symplectic()) out.push_back(std::move(r));
        out.push_back(oracle_fd());
        return out;
    }

    const ProblemFile &pf_;
    SamplePlan plan_;
    Rational h_;
    std::optional<PoissonStructure> pi_;
};

} // namespace detail

inline int exit_code_for(const std::vector<CheckReport> &reports) {
    for (const auto &r : reports)
        if (r.failed()) return 1;
    return 0;
}

/// Runs a command, attaches sample evidence to pass/fail reports and orders
/// the reports by check id. Library errors propagate to the caller.
inline RunResult run(const std::string &command, const ProblemFile &pf, const RunOptions &opt = {}) {
    detail::Runner runner(pf, opt);
    RunResult out;
    out.reports = runner.dispatch(command);
    for (auto &r : out.reports)
        if (r.verdict != Verdict::informative && r.samples.empty()) attach_sample_evidence(r, runner.plan());
    std::stable_sort(out.reports.begin(), out.reports.end(),
                     [](const CheckReport &a, const CheckReport &b) { return a.id < b.id; });
    out.exit_code = exit_code_for(out.reports);
    return out;
}

} // namespace liftred
