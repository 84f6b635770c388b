#pragma once

#include "liftred/chart/calculus.hpp"

namespace liftred {

// Sign conventions used throughout the library:
//   π(α, β)  = Σ_{i<j} π^{ij} (α_i β_j − α_j β_i)
//   π♯(α)    = π(α, ·), so (π♯α)^j = Σ_i α_i π^{ij}
//   {f, g}   = π(df, dg)
//   X_f      = π♯(df), hence X_f(g) = {f, g}
//   [α, β]_π = L_{π♯α} β − L_{π♯β} α − d π(α, β)

/// A bivector together with the outcome of its Jacobi check.
class PoissonStructure {
  public:
    /// Runs jacobi_check and records the verdict; never throws on failure.
    static PoissonStructure verify(Multivector bivector);
    /// Wraps a bivector without checking it (flag false).
    static PoissonStructure unverified(Multivector bivector) {
        check_degree(bivector);
        return PoissonStructure(std::move(bivector), false);
    }

    const Multivector &bivector() const { return bivector_; }
    const Chart &chart() const { return bivector_.chart(); }
    bool jacobi_verified() const { return verified_; }

    /// Full antisymmetric component π^{ij}.
    Polynomial entry(std::size_t i, std::size_t j) const { return bivector_.at({i, j}); }

  private:
    PoissonStructure(Multivector b, bool v) : bivector_(std::move(b)), verified_(v) {}
    static void check_degree(const Multivector &b) {
        if (b.degree() != 2) throw DegreeError("a Poisson structure is a bivector");
    }

    Multivector bivector_;
    bool verified_ = false;
};

/// The trivector [π, π]; π is Poisson iff it vanishes identically.
inline Multivector jacobi_check(const Multivector &pi) {
    if (pi.degree() != 2) throw DegreeError("jacobi_check needs a bivector");
    return schouten_bracket(pi, pi);
}

inline PoissonStructure PoissonStructure::verify(Multivector bivector) {
    check_degree(bivector);
    const bool ok = jacobi_check(bivector).is_zero();
    return PoissonStructure(std::move(bivector), ok);
}

/// π(α, β) for 1-forms α, β.
inline Polynomial bivector_pairing(const Multivector &pi, const DifferentialForm &alpha,
                                   const DifferentialForm &beta) {
    require_same_chart(pi.chart(), alpha.chart(), "bivector pairing");
    require_same_chart(pi.chart(), beta.chart(), "bivector pairing");
    Polynomial out = pi.chart().zero();
    for (const auto &[idx, c] : pi.components()) {
        const Polynomial t = alpha.component({idx[0]}) * beta.component({idx[1]}) -
                             alpha.component({idx[1]}) * beta.component({idx[0]});
        out += c * t;
    }
    return out;
}

inline Multivector sharp(const Multivector &pi, const DifferentialForm &alpha) {
    require_same_chart(pi.chart(), alpha.chart(), "sharp");
    if (alpha.degree() != 1) throw DegreeError("sharp needs a 1-form");
    Multivector out(pi.chart(), 1);
    for (const auto &[idx, c] : pi.components()) {
        const std::size_t i = idx[0], j = idx[1];
        out.add({j}, alpha.component({i}) * c);
        out.add({i}, -(alpha.component({j}) * c));
    }
    return out;
}

inline Multivector sharp(const PoissonStructure &pi, const DifferentialForm &alpha) {
    return sharp(pi.bivector(), alpha);
}

inline Polynomial poisson_bracket(const Multivector &pi, const Polynomial &f, const Polynomial &g) {
    const Chart &c = pi.chart();
    return bivector_pairing(pi, exterior_derivative(DifferentialForm::function(c, f)),
                            exterior_derivative(DifferentialForm::function(c, g)));
}

inline Polynomial poisson_bracket(const PoissonStructure &pi, const Polynomial &f, const Polynomial &g) {
    return poisson_bracket(pi.bivector(), f, g);
}

inline Multivector hamiltonian_vf(const Multivector &pi, const Polynomial &f) {
    return sharp(pi, exterior_derivative(DifferentialForm::function(pi.chart(), f)));
}

inline Multivector hamiltonian_vf(const PoissonStructure &pi, const Polynomial &f) {
    return hamiltonian_vf(pi.bivector(), f);
}

inline DifferentialForm koszul_bracket(const Multivector &pi, const DifferentialForm &alpha,
                                       const DifferentialForm &beta) {
    if (alpha.degree() != 1 || beta.degree() != 1) throw DegreeError("Koszul bracket acts on 1-forms");
    return lie_derivative(sharp(pi, alpha), beta) - lie_derivative(sharp(pi, beta), alpha) -
           exterior_derivative(DifferentialForm::function(pi.chart(), bivector_pairing(pi, alpha, beta)));
}

inline DifferentialForm koszul_bracket(const PoissonStructure &pi, const DifferentialForm &alpha,
                                       const DifferentialForm &beta) {
    return koszul_bracket(pi.bivector(), alpha, beta);
}

/// Linear Poisson structure {x_i, x_j} = Σ_k c^k_{ij} x_k on the dual of a Lie
/// algebra; `constants[k][i][j]` = c^k_{ij}.
inline Multivector lie_poisson_bivector(const Chart &chart,
                                        const std::vector<std::vector<std::vector<Rational>>> &constants) {
    const std::size_t n = chart.dim();
    if (constants.size() != n) throw DimensionMismatch("structure constants do not match chart dimension");
    Multivector out(chart, 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Polynomial c = chart.zero();
            for (std::size_t k = 0; k < n; ++k)
                if (constants[k][i][j] != 0) c += chart.coordinate(k) * constants[k][i][j];
            out.add({i, j}, c);
        }
    }
    return out;
}

} // namespace liftred
