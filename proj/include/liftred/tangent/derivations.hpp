#pragma once

#include "liftred/chart/calculus.hpp"
#include "liftred/tangent/tangent_chart.hpp"

namespace liftred {

/// τ*: the same components, read on TM (only base differentials appear).
template <class Kind>
AlternatingField<Kind> base_pullback(const TangentChart &tc, const AlternatingField<Kind> &w) {
    require_same_chart(tc.base, w.chart(), "base_pullback");
    AlternatingField<Kind> out(tc.total, w.degree());
    for (const auto &[idx, c] : w.components()) out.add(idx, c);
    return out;
}

/// Tangent derivation of degree −1: zero on functions, θ ↦ Σ_j θ_j(q) v^j on
/// 1-forms, extended by i_T(ω₁∧ω₂) = i_Tω₁ ∧ τ*ω₂ + (−1)^k τ*ω₁ ∧ i_Tω₂.
/// On a monomial f dq^{i1}∧…∧dq^{ik} this is Σ_s (−1)^s f v^{i_s} dq^{…î_s…}.
inline DifferentialForm i_T(const TangentChart &tc, const DifferentialForm &w) {
    require_same_chart(tc.base, w.chart(), "i_T");
    if (w.degree() == 0) return DifferentialForm(tc.total, 0);
    DifferentialForm out(tc.total, w.degree() - 1);
    for (const auto &[idx, c] : w.components()) {
        for (std::size_t s = 0; s < idx.size(); ++s) {
            MultiIndex rest = idx;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(s));
            Polynomial t = c * tc.total.coordinate(tc.fiber_index(idx[s]));
            out.add(std::move(rest), s % 2 == 0 ? t : -t);
        }
    }
    return out;
}

/// Degree-0 tangent derivation d_T = i_T d + d i_T (the complete lift of forms).
inline DifferentialForm d_T(const TangentChart &tc, const DifferentialForm &w) {
    if (w.degree() == 0) return i_T(tc, exterior_derivative(w));
    return i_T(tc, exterior_derivative(w)) + exterior_derivative(i_T(tc, w));
}

/// d_T of a function: Σ v^i ∂_i f.
inline Polynomial d_T(const TangentChart &tc, const Polynomial &f) {
    return d_T(tc, DifferentialForm::function(tc.base, f)).scalar();
}

} // namespace liftred
