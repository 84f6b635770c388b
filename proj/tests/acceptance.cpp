// Acceptance gate: one PASS/FAIL line per criterion. Exits 0 when every
// failure is listed in kUnattainable (with its reason), nonzero otherwise.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "support.hpp"

using namespace liftred;
using namespace liftred::testing;

namespace {

// Pinned tolerances.
constexpr double kSampledTolerance = 0.0;  // exact-zero identities must sample to exactly 0.0
constexpr double kFdRelTolerance = 1e-6;   // central differences, relative to max(|f'|, 1)
constexpr std::size_t kSamplePoints = 100;
constexpr std::uint64_t kSeed = 20160425;
constexpr double kLiftSeconds = 1.0;       // per structure, criterion 1
constexpr double kAlphaSeconds = 5.0;      // all 50 forms, criterion 2

// Criteria that cannot pass as stated; the binary still prints FAIL for them.
const std::map<int, std::string> kUnattainable = {
    {6, "the closure residual {c_i,c_j} - c_[e_i,e_j] contains no cobracket constant, so no gamma perturbation "
        "can make it nonzero"},
};

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Exact-zero reports and LHS/RHS pairs gathered along the way for criterion 11.
std::vector<CheckReport> g_zero_reports;

struct SidePair {
    std::string name;
    std::vector<std::string> coords;
    std::map<MultiIndex, Polynomial> lhs, rhs;
};
std::vector<SidePair> g_pairs;

void keep(const CheckReport &r) {
    if (r.passed()) g_zero_reports.push_back(r);
}

template <class Kind> std::map<MultiIndex, Polynomial> comps(const AlternatingField<Kind> &t) {
    std::map<MultiIndex, Polynomial> out;
    for (const auto &[idx, c] : t.components()) out.emplace(idx, c);
    return out;
}

std::map<MultiIndex, Polynomial> comps(const Polynomial &p) { return {{MultiIndex{}, p}}; }

template <class T> void keep_pair(std::string name, const Chart &c, const T &lhs, const T &rhs) {
    g_pairs.push_back({std::move(name), c.coords(), comps(lhs), comps(rhs)});
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

PGMap problem_pgmap(const ProblemFile &pf) { return PGMap(*pf.bialgebra, pf.chart, *pf.pgmap); }

std::string replace_once(std::string text, const std::string &from, const std::string &to) {
    const auto at = text.find(from);
    if (at == std::string::npos) throw InvalidInput("catalog text changed; cannot find '" + from + "'");
    return text.replace(at, from.size(), to);
}

Outcome criterion1() {
    const Chart r4("R4", {"q1", "p1", "q2", "p2"});
    const std::vector<std::pair<std::string, PoissonStructure>> cases = {
        {"canonical R2", canonical_plane()},
        {"canonical R4", PoissonStructure::verify(parse_multivector("e_q1^e_p1 + e_q2^e_p2", r4))},
        {"so(3)*", so3_poisson()},
        {"q e_q^e_p", PoissonStructure::verify(parse_multivector("q*e_q^e_p", plane()))},
    };
    Outcome o;
    double slowest = 0.0;
    for (const auto &[name, pi] : cases) {
        const auto t0 = std::chrono::steady_clock::now();
        const TangentChart tc = tangent_chart(pi.chart());
        const PoissonStructure lifted = complete_lift_bivector(tc, pi);
        const CheckReport r = verify_tangent_lift_identity(tc, pi, lifted);
        const double secs = seconds_since(t0);
        slowest = std::max(slowest, secs);
        keep(r);
        const bool ok = r.passed() && lifted.jacobi_verified() && fiber_degree(tc, lifted.bivector()) <= 1 &&
                        secs < kLiftSeconds;
        if (!ok) {
            o.pass = false;
            o.detail += name + " failed; ";
        }
    }
    o.detail += "4 structures, identity residuals zero, lifts Poisson and fiber-linear, slowest " + fmt(slowest) + " s";
    return o;
}

Outcome criterion2() {
    const Chart r1("R1", {"q"});
    const std::vector<const Chart *> charts = {&r1, &plane(), &so3_chart()};
    std::mt19937_64 rng(kSeed + 2);
    const auto t0 = std::chrono::steady_clock::now();
    std::size_t failures = 0;
    for (int n = 0; n < 50; ++n) {
        const Chart &c = *charts[n % 3];
        const CheckReport r = verify_lemma_alpha_dT(tangent_chart(c), random_form(c, 1, rng, 3));
        keep(r);
        if (!r.passed()) ++failures;
    }
    const double secs = seconds_since(t0);
    return {failures == 0 && secs < kAlphaSeconds,
            "50 random 1-forms on dims 1-3, " + std::to_string(failures) + " nonzero residuals, " + fmt(secs) + " s"};
}

Outcome criterion3() {
    const Chart &c = so3_chart();
    const TangentChart tc = tangent_chart(c);
    std::mt19937_64 rng(kSeed + 3);
    CheckReport r("derivation-laws", "i_T, d_T Leibniz and Cartan");
    std::size_t alternating_failures = 0;
    for (int n = 0; n < 100; ++n) {
        // i_T: degrees (1,1), (1,2), (2,1).
        const std::size_t k = 1 + n % 2, l = k == 1 ? 1 + (n / 2) % 2 : 1;
        const auto a = random_form(c, k, rng, 2), b = random_form(c, l, rng, 2);
        const DifferentialForm lhs = i_T(tc, wedge(a, b));
        const DifferentialForm rhs =
            wedge(i_T(tc, a), base_pullback(tc, b)) + sign_pow(k) * wedge(base_pullback(tc, a), i_T(tc, b));
        r.add_residual("iT pair " + std::to_string(n), lhs - rhs);
        if (n < 5) keep_pair("iT Leibniz " + std::to_string(n), tc.total, lhs, rhs);
    }
    for (int n = 0; n < 100; ++n) {
        // d_T: degrees with k + l <= 3, functions included.
        const std::size_t k = n % 3, l = (n / 3) % (4 - k);
        const auto a = random_form(c, k, rng, 2), b = random_form(c, l, rng, 2);
        const DifferentialForm lhs = d_T(tc, wedge(a, b));
        const DifferentialForm first = wedge(d_T(tc, a), base_pullback(tc, b));
        const DifferentialForm second = wedge(base_pullback(tc, a), d_T(tc, b));
        r.add_residual("dT pair " + std::to_string(n), lhs - (first + second));
        if (!(lhs - (first + sign_pow(k) * second)).is_zero()) ++alternating_failures;
    }
    for (int n = 0; n < 100; ++n) {
        const std::size_t k = n % 4;
        const auto w = random_form(c, k, rng, 3);
        DifferentialForm cartan = i_T(tc, exterior_derivative(w));
        if (k > 0) cartan += exterior_derivative(i_T(tc, w));
        r.add_residual("Cartan form " + std::to_string(n), d_T(tc, w) - cartan);
        if (n < 5) keep_pair("Cartan " + std::to_string(n), tc.total, d_T(tc, w), cartan);
    }
    keep(r);
    return {r.passed(), "100 i_T pairs, 100 d_T pairs (degree-0 rule, + sign), 100 Cartan forms; " +
                            std::to_string(r.nonzero_residuals().size()) +
                            " nonzero residuals; the (-1)^k sign variant of the d_T rule fails on " +
                            std::to_string(alternating_failures) + "/100 pairs"};
}

Outcome criterion4() {
    Outcome o;
    std::size_t entries = 0;
    for (const auto &name : catalog_names()) {
        const ProblemFile pf = catalog(name);
        if (!pf.pgmap) continue;
        ++entries;
        const PGMap phi = problem_pgmap(pf);
        const PoissonStructure pi = *problem_poisson(pf);
        const CheckReport cert = certify_pgmap(phi, pi);
        const CheckReport r = tangent_generator_check(phi, pi);
        keep(cert);
        keep(r);
        if (!cert.passed() || !r.passed()) {
            o.pass = false;
            o.detail += name + " failed; ";
        }
        if (name == "so3-coadjoint")
            for (std::size_t i = 0; i < phi.dim(); ++i)
                keep_pair("tangent generator so3 e" + std::to_string(i + 1), tangent_chart(pf.chart).total,
                          tangent_generator(phi, pi, phi.basis_vector(i)),
                          tangent_generator_direct(phi, pi, phi.basis_vector(i)));
    }
    std::mt19937_64 rng(kSeed + 4);
    std::size_t random_failures = 0;
    for (int n = 0; n < 20; ++n) {
        const PGMap phi = hamiltonian_pgmap(random_so3_momentum(rng), so3_bialgebra());
        const CheckReport cert = certify_pgmap(phi, so3_poisson());
        const CheckReport r = tangent_generator_check(phi, so3_poisson());
        keep(cert);
        keep(r);
        if (!cert.passed() || !r.passed()) ++random_failures;
    }
    o.pass = o.pass && random_failures == 0;
    o.detail += std::to_string(entries) + " catalog PG-maps and 20 random certified so(3)* maps, " +
                std::to_string(random_failures) + " random failures";
    return o;
}

Outcome criterion5() {
    const ProblemFile pf = catalog("canonical-r2-rotation");
    const PGMap phi = problem_pgmap(pf);
    const PoissonStructure pi = *problem_poisson(pf);
    const TangentChart tc = tangent_chart(pf.chart);
    const Multivector lifted = tangent_generator(phi, pi, {Rational(1)});
    const Polynomial c = comomentum(phi, {Rational(1)}).on(tc);
    const Multivector hamiltonian = hamiltonian_vf(complete_lift_bivector(tc, pi), c);
    CheckReport r("rotation-hamiltonian", "tangent generator is Hamiltonian for c");
    r.add_residual("X^T - X_c", lifted - hamiltonian);
    keep(r);
    keep_pair("rotation X^T vs X_c", tc.total, lifted, hamiltonian);
    return {r.passed() && !lifted.is_zero(), "X^T = X_c with c = " + c.to_string() + ", residual " +
                                                 r.residuals[0].text};
}

Outcome criterion6() {
    Outcome o;
    std::size_t entries = 0;
    for (const auto &name : catalog_names()) {
        const ProblemFile pf = catalog(name);
        if (!pf.pgmap) continue;
        ++entries;
        const CheckReport r = bracket_closure_check(problem_pgmap(pf), *problem_poisson(pf));
        keep(r);
        if (!r.passed()) {
            o.pass = false;
            o.detail += name + " closure failed; ";
        }
    }
    o.detail += "closure zero on " + std::to_string(entries) + " catalog entries";

    // Negative control as stated: double the cobracket constant of the affine entry.
    const ProblemFile gamma = parse_problem(
        replace_once(catalog_text("affine-bialgebra"), "d(e2) = 1 e1^e2", "d(e2) = 2 e1^e2"), "perturbed gamma");
    const PGMap gphi = problem_pgmap(gamma);
    const PoissonStructure gpi = *problem_poisson(gamma);
    const CheckReport gclosure = bracket_closure_check(gphi, gpi);
    const bool gamma_control = gclosure.failed();
    o.pass = o.pass && gamma_control;
    o.detail += "; perturbed-gamma closure residual " + std::string(gamma_control ? "nonzero" : "zero");
    o.detail += " (certify-pgmap on it: " + std::string(to_string(certify_pgmap(gphi, gpi).verdict)) + ")";

    // Closure does catch a perturbed bracket constant; reported, not counted.
    const ProblemFile bracket = parse_problem(
        replace_once(catalog_text("dressing-linearized"), "bracket { [e1,e2] = e2 }", "bracket { [e1,e2] = 2*e2 }"), "perturbed bracket");
    const CheckReport bclosure = bracket_closure_check(problem_pgmap(bracket), *problem_poisson(bracket));
    const auto bad = bclosure.nonzero_residuals();
    o.detail += "; perturbed bracket constant gives " +
                (bad.empty() ? std::string("zero residual") : bad[0]->name + " = " + bad[0]->text);
    return o;
}

Outcome criterion7() {
    const ProblemFile affine = catalog("affine-bialgebra");
    const CheckReport good = characteristic_identity_check(problem_pgmap(affine), *problem_poisson(affine));
    keep(good);
    const PGMap pdq(LieBialgebra::abelian({"e1"}), plane(), forms(plane(), {"p*dq"}));
    const CheckReport bad = characteristic_identity_check(pdq, canonical_plane());
    const auto named = bad.nonzero_residuals();
    return {good.passed() && bad.failed(),
            "affine entry " + std::string(to_string(good.verdict)) + "; p dq counterexample " +
                std::string(to_string(bad.verdict)) + (named.empty() ? "" : " at " + named[0]->name)};
}

Outcome criterion8() {
    Outcome o;
    std::size_t maps = 0;
    for (const auto &name : catalog_names()) {
        const ProblemFile pf = catalog(name);
        if (!pf.momentum) continue;
        ++maps;
        const MomentumMapData j{pf.chart, *pf.momentum};
        const CheckReport r = hamiltonian_comomentum_check(j, *pf.bialgebra);
        keep(r);
        if (!r.passed()) {
            o.pass = false;
            o.detail += name + " failed; ";
        }
        if (name == "canonical-r2-rotation") {
            const TangentChart tc = tangent_chart(pf.chart);
            const PGMap phi = hamiltonian_pgmap(j, *pf.bialgebra);
            keep_pair("rotation d_T J vs c", tc.total, d_T(tc, pf.chart.function(j.components[0])),
                      comomentum(phi, phi.basis_vector(0)).on(tc));
        }
    }
    std::mt19937_64 rng(kSeed + 8);
    for (int n = 0; n < 10; ++n) {
        ++maps;
        const CheckReport r = hamiltonian_comomentum_check(random_so3_momentum(rng), so3_bialgebra());
        keep(r);
        o.pass = o.pass && r.passed();
    }

    const ProblemFile pf = catalog("hamiltonian-level-set");
    const CoordinateMap param(pf.level_set->params, pf.chart, pf.level_set->components);
    SamplePlan plan;
    plan.count = kSamplePoints;
    plan.seed = kSeed;
    const CheckReport ls =
        level_set_tangency_check({pf.chart, *pf.momentum}, param, plan.points(pf.level_set->params.coords()));
    keep(ls);
    o.pass = o.pass && ls.passed();
    o.detail += "d_T J = c on " + std::to_string(maps) + " momentum maps; level set p = 0 tangency " +
                std::string(to_string(ls.verdict)) + " at " + std::to_string(kSamplePoints) + " points";
    return o;
}

Outcome criterion9() {
    const ProblemFile pf = catalog("canonical-r2-rotation");
    const SymplecticForm omega = SymplecticForm::make(*pf.symplectic);
    Outcome o;
    for (const auto &[name, x] : std::vector<std::pair<std::string, std::string>>{
             {"rotation", "q*e_p - p*e_q"}, {"translation", "e_q"}}) {
        const CheckReport r = cotangent_momentum_relation(omega, {parse_multivector(x, pf.chart, 1)});
        keep(r);
        o.pass = o.pass && r.passed();
        o.detail += name + " " + std::string(to_string(r.verdict)) + " (" + r.id + "); ";
    }
    o.detail += "omega = dp^dq";
    return o;
}

Outcome criterion10() {
    const ProblemFile pf = catalog("dressing-linearized");
    const PGMap phi = problem_pgmap(pf);
    const TangentChart tc = tangent_chart(pf.chart);
    CheckReport r("dressing-projection", "c = fiber projection");
    std::string shown;
    for (std::size_t i = 0; i < phi.dim(); ++i) {
        const Polynomial c = comomentum(phi, phi.basis_vector(i)).on(tc);
        r.add_residual("c(" + phi.bialgebra().names()[i] + ")", c - tc.total.coordinate(tc.fiber_index(i)));
        shown += (shown.empty() ? "" : ", ") + c.to_string();
    }
    keep(r);
    return {r.passed(), "c = (" + shown + ")"};
}

double max_side_gap(const SidePair &p, const std::vector<Polynomial::Assignment> &points) {
    double worst = 0.0;
    for (const auto &pt : points) {
        std::map<MultiIndex, double> l, r;
        for (const auto &[idx, c] : p.lhs) l[idx] = to_double(c.evaluate(pt));
        for (const auto &[idx, c] : p.rhs) r[idx] = to_double(c.evaluate(pt));
        for (const auto &[idx, x] : l) worst = std::max(worst, std::abs(x - (r.count(idx) ? r[idx] : 0.0)));
        for (const auto &[idx, x] : r)
            if (!l.count(idx)) worst = std::max(worst, std::abs(x));
    }
    return worst;
}

Outcome criterion11() {
    SamplePlan plan;
    plan.count = kSamplePoints;
    plan.seed = kSeed;
    Outcome o;
    std::size_t residuals = 0;
    double worst = 0.0;
    for (const auto &r : g_zero_reports)
        for (const auto &res : r.residuals) {
            ++residuals;
            worst = std::max(worst, sample_residual(res, plan));
        }
    double worst_gap = 0.0;
    for (const auto &p : g_pairs) worst_gap = std::max(worst_gap, max_side_gap(p, plan.points(p.coords)));
    o.pass = worst <= kSampledTolerance && worst_gap <= kSampledTolerance;

    std::mt19937_64 rng(kSeed + 11);
    const Chart r1("R1", {"q"});
    const std::vector<const Chart *> charts = {&r1, &plane(), &so3_chart()};
    double fd = 0.0;
    for (int n = 0; n < 100; ++n) {
        const Chart &c = *charts[n % 3];
        const Polynomial f = random_polynomial(c, rng, 4);
        for (const auto &pt : plan.points(c.coords())) fd = std::max(fd, fd_derivative_check(f, pt, default_fd_step()));
    }
    o.pass = o.pass && fd <= kFdRelTolerance;
    o.detail = std::to_string(residuals) + " zero residuals sample to max " + fmt(worst) + "; " +
               std::to_string(g_pairs.size()) + " LHS/RHS pairs differ by max " + fmt(worst_gap) +
               "; fd relative error max " + fmt(fd) + " over 100 polynomials";
    return o;
}

Outcome criterion12() {
    const Chart m("M", {"x", "y", "z"});
    const Multivector bad = parse_multivector("y*e_x^e_y + x*e_y^e_z", m);
    CheckReport r("check-poisson", "[pi, pi] = 0");
    r.add_residual("[pi,pi]", jacobi_check(bad));
    const auto named = r.nonzero_residuals();
    const bool detected = r.failed() && named.size() == 1 && !PoissonStructure::verify(bad).jacobi_verified();

    std::mt19937_64 rng(kSeed + 12);
    std::size_t planar_nonzero = 0;
    for (int n = 0; n < 100; ++n)
        if (!jacobi_check(random_multivector(plane(), 2, rng, 4)).is_zero()) ++planar_nonzero;
    return {detected && planar_nonzero == 0,
            "R3 residual " + (named.empty() ? std::string("none") : named[0]->name + " = " + named[0]->text) +
                "; 100 random planar bivectors, " + std::to_string(planar_nonzero) + " nonzero"};
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"tangent-lift identity", criterion1},
        {"alpha_M o T(theta) = d_T theta", criterion2},
        {"derivation laws", criterion3},
        {"tangent generator cross-check", criterion4},
        {"Hamiltonian tangent generator", criterion5},
        {"bracket closure", criterion6},
        {"characteristic identity", criterion7},
        {"Hamiltonian comomentum and level set", criterion8},
        {"cotangent momentum relation", criterion9},
        {"dressing comomentum", criterion10},
        {"oracle consistency", criterion11},
        {"negative Jacobi control", criterion12},
    };
    std::set<int> failed;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int n = static_cast<int>(i + 1);
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) failed.insert(n);
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << n << " (" << criteria[i].first << "): " << o.detail
                  << "\n";
    }

    int status = 0;
    for (int n : failed) {
        auto it = kUnattainable.find(n);
        if (it == kUnattainable.end()) {
            status = 1;
        } else {
            std::cout << "note: criterion " << n << " is unattainable as stated: " << it->second << "\n";
        }
    }
    for (const auto &[n, why] : kUnattainable)
        if (!failed.count(n)) {
            std::cout << "note: criterion " << n << " was expected to fail but passed; update kUnattainable\n";
            status = 1;
        }
    std::cout << (criteria.size() - failed.size()) << "/" << criteria.size() << " criteria pass\n";
    return status;
}
