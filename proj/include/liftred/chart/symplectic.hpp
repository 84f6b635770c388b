#pragma once

#include <optional>

#include "liftred/chart/poisson.hpp"
#include "liftred/expr/linalg.hpp"

namespace liftred {

/// Closed nondegenerate 2-form with its inverse bivector. The component
/// matrices are mutually inverse, Σ_j ω_{ij} π^{jk} = δ_i^k, which makes
/// π♯(i_X ω) = X: a symplectic action is generated by φ̃ = i_X ω.
class SymplecticForm {
  public:
    /// Without `inverse` the component matrix of ω must be constant.
    static SymplecticForm make(DifferentialForm two_form, std::optional<Multivector> inverse = std::nullopt) {
        if (two_form.degree() != 2) throw DegreeError("a symplectic form has degree 2");
        if (!exterior_derivative(two_form).is_zero()) throw InvalidInput("symplectic form is not closed");
        const Chart &chart = two_form.chart();
        const std::size_t n = chart.dim();
        if (!inverse) {
            RationalMatrix m(n, std::vector<Rational>(n));
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    const Polynomial e = two_form.at({i, j});
                    if (!e.is_constant())
                        throw InvalidInput("non-constant symplectic matrix needs an explicit inverse bivector");
                    m[i][j] = e.constant_term();
                }
            }
            auto inv = liftred::inverse(m);
            if (!inv) throw InvalidInput("symplectic form is degenerate");
            Multivector p(chart, 2);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) p.add({i, j}, chart.constant((*inv)[i][j]));
            inverse = std::move(p);
        }
        require_same_chart(chart, inverse->chart(), "symplectic inverse");
        if (inverse->degree() != 2) throw DegreeError("inverse of a symplectic form is a bivector");
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                Polynomial s = chart.zero();
                for (std::size_t j = 0; j < n; ++j) s += two_form.at({i, j}) * inverse->at({j, k});
                if (!(s == chart.constant(i == k ? 1 : 0)))
                    throw InvalidInput("supplied bivector is not the inverse of the symplectic form");
            }
        }
        return SymplecticForm(std::move(two_form), std::move(*inverse));
    }

    const DifferentialForm &two_form() const { return form_; }
    const Multivector &inverse_bivector() const { return inverse_; }
    const Chart &chart() const { return form_.chart(); }

    PoissonStructure poisson() const { return PoissonStructure::verify(inverse_); }

  private:
    SymplecticForm(DifferentialForm f, Multivector p) : form_(std::move(f)), inverse_(std::move(p)) {}

    DifferentialForm form_;
    Multivector inverse_;
};

/// ω♭(X) = i_X ω.
inline DifferentialForm flat(const SymplecticForm &omega, const Multivector &x) {
    return interior_product(x, omega.two_form());
}

} // namespace liftred
