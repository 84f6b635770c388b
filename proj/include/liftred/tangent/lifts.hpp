#pragma once

#include "liftred/chart/poisson.hpp"
#include "liftred/report/check_report.hpp"
#include "liftred/tangent/coordinate_map.hpp"
#include "liftred/tangent/derivations.hpp"

namespace liftred {

/// Tulczyjew isomorphism α_M : TT*M → T*TM, (q, p, q̇, ṗ) ↦ (q, q̇, ṗ, p).
inline CoordinateMap tulczyjew_alpha(const TangentChart &tc) {
    const auto bc = bundle_charts(tc);
    const std::size_t n = tc.dim();
    const Chart &src = bc.tt_star;
    std::vector<Polynomial> comps(4 * n);
    for (std::size_t i = 0; i < n; ++i) {
        comps[i] = src.coordinate(i);
        comps[n + i] = src.coordinate(2 * n + i);
        comps[2 * n + i] = src.coordinate(3 * n + i);
        comps[3 * n + i] = src.coordinate(n + i);
    }
    return CoordinateMap(src, bc.t_star_t, std::move(comps));
}

/// α_M⁻¹ : T*TM → TT*M, (q, v, a, b) ↦ (q, b, v, a).
inline CoordinateMap tulczyjew_alpha_inverse(const TangentChart &tc) {
    const auto bc = bundle_charts(tc);
    const std::size_t n = tc.dim();
    const Chart &src = bc.t_star_t;
    std::vector<Polynomial> comps(4 * n);
    for (std::size_t i = 0; i < n; ++i) {
        comps[i] = src.coordinate(i);
        comps[n + i] = src.coordinate(3 * n + i);
        comps[2 * n + i] = src.coordinate(n + i);
        comps[3 * n + i] = src.coordinate(2 * n + i);
    }
    return CoordinateMap(src, bc.tt_star, std::move(comps));
}

/// Canonical involution k_M : TTM → TTM, (q, v, q̇, v̇) ↦ (q, q̇, v, v̇).
inline CoordinateMap canonical_involution(const TangentChart &tc) {
    const auto bc = bundle_charts(tc);
    const std::size_t n = tc.dim();
    const Chart &c = bc.tt;
    std::vector<Polynomial> comps(4 * n);
    for (std::size_t i = 0; i < n; ++i) {
        comps[i] = c.coordinate(i);
        comps[n + i] = c.coordinate(2 * n + i);
        comps[2 * n + i] = c.coordinate(n + i);
        comps[3 * n + i] = c.coordinate(3 * n + i);
    }
    return CoordinateMap(c, c, std::move(comps));
}

/// The bundle map π♯ : T*X → TX of a bivector on X, given the cotangent chart
/// (x, p) and tangent chart (x, ẋ) of X.
inline CoordinateMap sharp_map(const Multivector &pi, const Chart &cotangent, const Chart &tangent) {
    const Chart &x = pi.chart();
    const std::size_t m = x.dim();
    if (cotangent.dim() != 2 * m || tangent.dim() != 2 * m) throw DimensionMismatch("sharp_map: bundle charts must double the dimension");
    std::vector<Polynomial> comps(2 * m);
    for (std::size_t j = 0; j < m; ++j) {
        comps[j] = cotangent.coordinate(j);
        Polynomial v = cotangent.zero();
        for (std::size_t i = 0; i < m; ++i) {
            const Polynomial e = pi.at({i, j});
            if (!e.is_zero()) v += cotangent.function(e) * cotangent.coordinate(m + i);
        }
        comps[m + j] = v;
    }
    return CoordinateMap(cotangent, tangent, std::move(comps));
}

/// X^c = X^i ∂_{q_i} + v^k ∂_k X^i ∂_{v_i}, the coordinate form of k_M ∘ TX.
inline Multivector complete_lift_vf(const TangentChart &tc, const Multivector &x) {
    require_same_chart(tc.base, x.chart(), "complete_lift_vf");
    if (x.degree() != 1) throw DegreeError("complete_lift_vf needs a vector field");
    Multivector out(tc.total, 1);
    for (const auto &[idx, c] : x.components()) {
        out.add(idx, c);
        const DifferentialForm dc = exterior_derivative(DifferentialForm::function(tc.base, c));
        out.add({tc.fiber_index(idx[0])}, i_T(tc, dc).scalar());
    }
    return out;
}

/// Complete lift of a bivector without the Poisson precondition:
///   π^{ij} (∂_{q_i}∧∂_{v_j} + ∂_{v_i}∧∂_{q_j}) + (v^k ∂_k π^{ij}) ∂_{v_i}∧∂_{v_j}.
inline Multivector complete_lift_raw(const TangentChart &tc, const Multivector &pi) {
    require_same_chart(tc.base, pi.chart(), "complete_lift_bivector");
    if (pi.degree() != 2) throw DegreeError("complete_lift_bivector needs a bivector");
    Multivector out(tc.total, 2);
    for (const auto &[idx, c] : pi.components()) {
        const std::size_t i = idx[0], j = idx[1];
        out.add({i, tc.fiber_index(j)}, c);
        out.add({tc.fiber_index(i), j}, c);
        out.add({tc.fiber_index(i), tc.fiber_index(j)}, d_T(tc, c));
    }
    return out;
}

/// The linear Poisson structure π_TM with π♯_TM ∘ α_M = k_M ∘ Tπ♯.
inline PoissonStructure complete_lift_bivector(const TangentChart &tc, const PoissonStructure &pi) {
    if (!pi.jacobi_verified()) throw NotPoisson("complete lift requested for a bivector that fails Jacobi");
    return PoissonStructure::verify(complete_lift_raw(tc, pi.bivector()));
}

/// Highest total degree in the fiber coordinates over all components.
template <class Kind> std::uint64_t fiber_degree(const TangentChart &tc, const AlternatingField<Kind> &t) {
    const auto fibers = tc.fiber_names();
    std::uint64_t d = 0;
    for (const auto &[idx, c] : t.components()) d = std::max(d, c.degree_in(fibers));
    return d;
}

/// Compares π♯_TM ∘ α_M with k_M ∘ Tπ♯ as maps TT*M → TTM.
inline CheckReport verify_tangent_lift_identity(const TangentChart &tc, const Multivector &pi, const Multivector &pi_tm) {
    require_same_chart(tc.base, pi.chart(), "verify_tangent_lift_identity");
    require_same_chart(tc.total, pi_tm.chart(), "verify_tangent_lift_identity");
    const auto bc = bundle_charts(tc);
    const CoordinateMap t_sharp = tangent_map(sharp_map(pi, bc.cotangent, tc.total), bc.tt_star, bc.tt);
    const CoordinateMap rhs = compose(canonical_involution(tc), t_sharp);
    const CoordinateMap lhs = compose(sharp_map(pi_tm, bc.t_star_t, bc.tt), tulczyjew_alpha(tc));
    std::vector<Polynomial> diff;
    for (std::size_t i = 0; i < lhs.components().size(); ++i) diff.push_back(lhs.components()[i] - rhs.components()[i]);
    CheckReport r("verify-lift", "pi_TM^sharp o alpha_M = k_M o T(pi^sharp) on TT*M");
    r.add_residual("lhs-rhs", bc.tt.coords(), diff);
    return r;
}

inline CheckReport verify_tangent_lift_identity(const TangentChart &tc, const PoissonStructure &pi,
                                                const PoissonStructure &pi_tm) {
    return verify_tangent_lift_identity(tc, pi.bivector(), pi_tm.bivector());
}

/// α_M ∘ Tθ versus d_T θ, both as maps TM → T*TM.
inline CheckReport verify_lemma_alpha_dT(const TangentChart &tc, const DifferentialForm &theta) {
    require_same_chart(tc.base, theta.chart(), "verify_lemma_alpha_dT");
    if (theta.degree() != 1) throw DegreeError("verify_lemma_alpha_dT needs a 1-form");
    const auto bc = bundle_charts(tc);
    const std::size_t n = tc.dim();

    std::vector<Polynomial> section(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        section[i] = tc.base.coordinate(i);
        section[n + i] = theta.component({i});
    }
    const CoordinateMap theta_map(tc.base, bc.cotangent, std::move(section));
    const CoordinateMap lhs = compose(tulczyjew_alpha(tc), tangent_map(theta_map, tc.total, bc.tt_star));

    const DifferentialForm lifted = d_T(tc, theta);
    std::vector<Polynomial> rhs(4 * n);
    for (std::size_t i = 0; i < 2 * n; ++i) {
        rhs[i] = tc.total.coordinate(i);
        rhs[2 * n + i] = lifted.component({i});
    }
    std::vector<Polynomial> diff;
    for (std::size_t i = 0; i < 4 * n; ++i) diff.push_back(lhs.components()[i] - rhs[i]);
    CheckReport r("verify-lemma", "alpha_M o T(theta) = d_T theta");
    r.add_residual("theta=" + to_string(theta), bc.t_star_t.coords(), diff);
    return r;
}

} // namespace liftred
