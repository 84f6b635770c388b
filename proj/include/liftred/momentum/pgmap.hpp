#pragma once

#include <string>
#include <vector>

#include "liftred/bialgebra/bialgebra.hpp"
#include "liftred/chart/poisson.hpp"
#include "liftred/report/check_report.hpp"
#include "liftred/tangent/derivations.hpp"

namespace liftred {

inline constexpr const char *kInfinitesimalOnly =
    "only infinitesimal identities are checked; group equivariance, freeness and properness are not represented";

/// Linear map g → Ω¹(M) given by its values on the basis of g.
class PGMap {
  public:
    PGMap(LieBialgebra bialgebra, Chart chart, std::vector<DifferentialForm> images)
        : bialgebra_(std::move(bialgebra)), chart_(std::move(chart)), images_(std::move(images)) {
        if (images_.size() != bialgebra_.dim())
            throw DimensionMismatch("PG-map needs one image per basis element");
        for (const auto &im : images_) {
            require_same_chart(chart_, im.chart(), "PG-map image");
            if (im.degree() != 1) throw DegreeError("PG-map images are 1-forms");
        }
    }

    const LieBialgebra &bialgebra() const { return bialgebra_; }
    const Chart &chart() const { return chart_; }
    const std::vector<DifferentialForm> &images() const { return images_; }
    std::size_t dim() const { return images_.size(); }

    /// φ̃_ξ = Σ ξ_i φ̃_i.
    DifferentialForm combination(const std::vector<Rational> &xi) const {
        if (xi.size() != dim()) throw DimensionMismatch("coefficient vector length does not match algebra dimension");
        DifferentialForm out(chart_, 1);
        for (std::size_t i = 0; i < dim(); ++i)
            if (xi[i] != 0) out = out + xi[i] * images_[i];
        return out;
    }

    std::vector<Rational> basis_vector(std::size_t i) const {
        std::vector<Rational> e(dim(), Rational(0));
        e.at(i) = 1;
        return e;
    }

  private:
    LieBialgebra bialgebra_;
    Chart chart_;
    std::vector<DifferentialForm> images_;
};

/// The function i_T θ on TM, stored through θ.
struct FiberLinearFunction {
    DifferentialForm base_form;

    Polynomial on(const TangentChart &tc) const { return i_T(tc, base_form).scalar(); }

    friend FiberLinearFunction operator+(const FiberLinearFunction &a, const FiberLinearFunction &b) {
        return {a.base_form + b.base_form};
    }
};

struct MomentumMapData {
    Chart chart;
    std::vector<Polynomial> components;
};

inline void require_verified(const PGMap &phi, const PoissonStructure &pi) {
    require_same_chart(phi.chart(), pi.chart(), "PG-map and Poisson structure");
    if (!pi.jacobi_verified()) throw UnverifiedInput("Poisson structure has not passed the Jacobi check");
    if (!phi.bialgebra().verified()) throw UnverifiedInput("bialgebra has not passed its Jacobi/cocycle/co-Jacobi checks");
}

/// Σ_{j<k} γ^{jk}_i φ̃_j ∧ φ̃_k.
inline DifferentialForm cobracket_image(const PGMap &phi, std::size_t i) {
    const auto &g = phi.bialgebra().cobracket()[i];
    DifferentialForm out(phi.chart(), 2);
    for (std::size_t j = 0; j < phi.dim(); ++j)
        for (std::size_t k = j + 1; k < phi.dim(); ++k)
            if (g[j][k] != 0) out = out + g[j][k] * wedge(phi.images()[j], phi.images()[k]);
    return out;
}

/// φ̃_{[e_i, e_j]}.
inline DifferentialForm bracket_image(const PGMap &phi, std::size_t i, std::size_t j) {
    const auto &b = phi.bialgebra();
    return phi.combination(b.bracket(phi.basis_vector(i), phi.basis_vector(j)));
}

inline CheckReport certify_pgmap(const PGMap &phi, const PoissonStructure &pi) {
    require_verified(phi, pi);
    CheckReport r("certify-pgmap", "phi_[x,y] = [phi_x, phi_y]_pi and d phi_x = (phi ^ phi)(delta x)");
    const auto &names = phi.bialgebra().names();
    for (std::size_t i = 0; i < phi.dim(); ++i)
        for (std::size_t j = i + 1; j < phi.dim(); ++j)
            r.add_residual("axiom-i(" + names[i] + "," + names[j] + ")",
                           bracket_image(phi, i, j) - koszul_bracket(pi, phi.images()[i], phi.images()[j]));
    for (std::size_t i = 0; i < phi.dim(); ++i)
        r.add_residual("axiom-ii(" + names[i] + ")", exterior_derivative(phi.images()[i]) - cobracket_image(phi, i));
    return r;
}

/// φ(ξ) = π♯(φ̃_ξ).
inline Multivector generator(const PGMap &phi, const PoissonStructure &pi, const std::vector<Rational> &xi) {
    require_same_chart(phi.chart(), pi.chart(), "generator");
    return sharp(pi, phi.combination(xi));
}

inline FiberLinearFunction comomentum(const PGMap &phi, const std::vector<Rational> &xi) {
    return {phi.combination(xi)};
}

} // namespace liftred
