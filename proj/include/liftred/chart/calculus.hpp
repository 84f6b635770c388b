#pragma once

#include "liftred/chart/tensor.hpp"

namespace liftred {

/// Exterior product; a∧b = (-1)^{|a||b|} b∧a. Degrees above the chart
/// dimension give the zero field of that degree.
template <class Kind>
AlternatingField<Kind> wedge(const AlternatingField<Kind> &a, const AlternatingField<Kind> &b) {
    require_same_chart(a.chart(), b.chart(), "wedge");
    AlternatingField<Kind> out(a.chart(), a.degree() + b.degree());
    if (out.degree() > a.chart().dim()) return out;
    for (const auto &[ia, ca] : a.components()) {
        for (const auto &[ib, cb] : b.components()) {
            MultiIndex idx = ia;
            idx.insert(idx.end(), ib.begin(), ib.end());
            out.add(std::move(idx), ca * cb);
        }
    }
    return out;
}

inline DifferentialForm exterior_derivative(const DifferentialForm &w) {
    const Chart &chart = w.chart();
    DifferentialForm out(chart, w.degree() + 1);
    for (const auto &[idx, c] : w.components()) {
        for (std::size_t j = 0; j < chart.dim(); ++j) {
            Polynomial dc = c.derivative(chart.coords()[j]);
            if (dc.is_zero()) continue;
            MultiIndex jdx{j};
            jdx.insert(jdx.end(), idx.begin(), idx.end());
            out.add(std::move(jdx), dc);
        }
    }
    return out;
}

/// X(f) for a vector field X.
inline Polynomial directional_derivative(const Multivector &x, const Polynomial &f) {
    if (x.degree() != 1) throw DegreeError("directional derivative needs a vector field");
    const Chart &chart = x.chart();
    Polynomial g = chart.function(f);
    Polynomial out = chart.zero();
    for (const auto &[idx, c] : x.components()) out += c * g.derivative(chart.coords()[idx[0]]);
    return out;
}

/// <α, X> for a 1-form α and vector field X.
inline Polynomial pairing(const DifferentialForm &alpha, const Multivector &x) {
    require_same_chart(alpha.chart(), x.chart(), "pairing");
    if (alpha.degree() != 1 || x.degree() != 1) throw DegreeError("pairing needs a 1-form and a vector field");
    Polynomial out = alpha.chart().zero();
    for (const auto &[idx, c] : alpha.components()) out += c * x.component(idx);
    return out;
}

/// i_X ω; a derivation of degree -1. Contracting a function is an error.
inline DifferentialForm interior_product(const Multivector &x, const DifferentialForm &w) {
    require_same_chart(x.chart(), w.chart(), "interior_product");
    if (x.degree() != 1) throw DegreeError("interior product needs a vector field");
    if (w.degree() == 0) throw DegreeError("interior product of a function");
    DifferentialForm out(w.chart(), w.degree() - 1);
    for (const auto &[idx, c] : w.components()) {
        for (std::size_t pos = 0; pos < idx.size(); ++pos) {
            Polynomial xi = x.component({idx[pos]});
            if (xi.is_zero()) continue;
            MultiIndex rest = idx;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
            Polynomial term = xi * c;
            out.add(std::move(rest), pos % 2 == 0 ? term : -term);
        }
    }
    return out;
}

/// L_X ω = i_X dω + d i_X ω; on functions L_X f = X(f).
inline DifferentialForm lie_derivative(const Multivector &x, const DifferentialForm &w) {
    require_same_chart(x.chart(), w.chart(), "lie_derivative");
    if (w.degree() == 0) return DifferentialForm::function(w.chart(), directional_derivative(x, w.scalar()));
    return interior_product(x, exterior_derivative(w)) + exterior_derivative(interior_product(x, w));
}

namespace detail {

// Multivectors as functions of odd fiber symbols ξ_i; this is the right
// derivative with respect to ξ_i.
inline Multivector odd_right_derivative(const Multivector &a, std::size_t i) {
    Multivector out(a.chart(), a.degree() - 1);
    for (const auto &[idx, c] : a.components()) {
        auto it = std::find(idx.begin(), idx.end(), i);
        if (it == idx.end()) continue;
        const auto pos = static_cast<std::size_t>(it - idx.begin());
        MultiIndex rest = idx;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
        const bool odd = (idx.size() - 1 - pos) % 2 == 1;
        out.add(std::move(rest), odd ? -c : c);
    }
    return out;
}

inline Multivector coordinate_partial(const Multivector &a, std::size_t i) {
    const std::string &x = a.chart().coords()[i];
    return a.map_coefficients([&](const Polynomial &c) { return c.derivative(x); });
}

} // namespace detail

/// Schouten–Nijenhuis bracket, coordinate formula
///   [A,B] = Σ_i ∂A/∂ξ_i · ∂B/∂x^i − (−1)^{(a−1)(b−1)} ∂B/∂ξ_i · ∂A/∂x^i
/// with right derivatives in the odd symbols. Restricts to the Lie bracket
/// on vector fields and to [X,f] = X(f).
inline Multivector schouten_bracket(const Multivector &a, const Multivector &b) {
    require_same_chart(a.chart(), b.chart(), "schouten_bracket");
    if (a.degree() == 0 && b.degree() == 0) throw DegreeError("Schouten bracket of two functions");
    const Chart &chart = a.chart();
    Multivector out(chart, a.degree() + b.degree() - 1);
    const bool flip = ((a.degree() + 1) * (b.degree() + 1)) % 2 == 1; // parity of (a-1)(b-1)
    for (std::size_t i = 0; i < chart.dim(); ++i) {
        if (a.degree() > 0) out += wedge(detail::odd_right_derivative(a, i), detail::coordinate_partial(b, i));
        if (b.degree() > 0) {
            Multivector t = wedge(detail::odd_right_derivative(b, i), detail::coordinate_partial(a, i));
            if (flip)
                out += t;
            else
                out -= t;
        }
    }
    return out;
}

/// Lie derivative of a multivector field: L_X A = [X, A].
inline Multivector lie_derivative(const Multivector &x, const Multivector &a) {
    if (x.degree() != 1) throw DegreeError("lie derivative along a non-vector field");
    return schouten_bracket(x, a);
}

} // namespace liftred
