#pragma once

#include "liftred/momentum/pgmap.hpp"
#include "liftred/tangent/lifts.hpp"

namespace liftred {

/// {c_i, c_j}_TM − c_{[e_i,e_j]} for i<j. Zero residuals say the ideal
/// generated by the c_i is closed under the lifted bracket, i.e. c⁻¹(0) is
/// coisotropic.
inline CheckReport bracket_closure_check(const PGMap &phi, const PoissonStructure &pi) {
    require_verified(phi, pi);
    const TangentChart tc = tangent_chart(phi.chart());
    const PoissonStructure pi_tm = complete_lift_bivector(tc, pi);
    CheckReport r("bracket-closure", "{c_x, c_y}_TM = c_[x,y] with c_x = i_T phi_x");
    std::vector<Polynomial> c;
    for (std::size_t i = 0; i < phi.dim(); ++i) c.push_back(comomentum(phi, phi.basis_vector(i)).on(tc));
    const auto &names = phi.bialgebra().names();
    for (std::size_t i = 0; i < phi.dim(); ++i) {
        for (std::size_t j = i + 1; j < phi.dim(); ++j) {
            const Polynomial target = i_T(tc, bracket_image(phi, i, j)).scalar();
            r.add_residual("{c_" + names[i] + ",c_" + names[j] + "}", poisson_bracket(pi_tm, c[i], c[j]) - target);
        }
    }
    r.note(kInfinitesimalOnly);
    return r;
}

/// X_{c_ξ} + π♯_TM(i_T dφ̃_ξ) under the lifted structure.
inline Multivector tangent_generator(const PGMap &phi, const PoissonStructure &pi, const std::vector<Rational> &xi) {
    require_verified(phi, pi);
    const TangentChart tc = tangent_chart(phi.chart());
    const PoissonStructure pi_tm = complete_lift_bivector(tc, pi);
    const DifferentialForm theta = phi.combination(xi);
    return hamiltonian_vf(pi_tm, i_T(tc, theta).scalar()) + sharp(pi_tm, i_T(tc, exterior_derivative(theta)));
}

/// Complete lift of φ(ξ).
inline Multivector tangent_generator_direct(const PGMap &phi, const PoissonStructure &pi,
                                            const std::vector<Rational> &xi) {
    require_verified(phi, pi);
    return complete_lift_vf(tangent_chart(phi.chart()), generator(phi, pi, xi));
}

/// Both tangent-generator formulas on every basis element; when all images
/// are closed, also their agreement with the Hamiltonian field of c_i.
inline CheckReport tangent_generator_check(const PGMap &phi, const PoissonStructure &pi) {
    require_verified(phi, pi);
    const TangentChart tc = tangent_chart(phi.chart());
    const PoissonStructure pi_tm = complete_lift_bivector(tc, pi);
    CheckReport r("tangent-generator", "X_{c_x} + pi_TM^sharp(i_T d phi_x) = k_M o T(phi(x))");
    bool closed = true;
    for (const auto &im : phi.images()) closed = closed && exterior_derivative(im).is_zero();
    const auto &names = phi.bialgebra().names();
    for (std::size_t i = 0; i < phi.dim(); ++i) {
        const auto e = phi.basis_vector(i);
        const Multivector lifted = tangent_generator(phi, pi, e);
        r.add_residual("formula-direct(" + names[i] + ")", lifted - tangent_generator_direct(phi, pi, e));
        if (closed)
            r.add_residual("hamiltonian(" + names[i] + ")",
                           lifted - hamiltonian_vf(pi_tm, comomentum(phi, e).on(tc)));
    }
    if (!closed) r.note("some images are not closed; the Hamiltonian branch is not applicable");
    r.note(kInfinitesimalOnly);
    return r;
}

/// i_T dφ̃_i − Σ_{j<k} γ^{jk}_i (c_j τ*φ̃_k − c_k τ*φ̃_j).
inline CheckReport characteristic_identity_check(const PGMap &phi, const PoissonStructure &pi) {
    require_verified(phi, pi);
    const TangentChart tc = tangent_chart(phi.chart());
    std::vector<Polynomial> c;
    std::vector<DifferentialForm> pulled;
    for (std::size_t i = 0; i < phi.dim(); ++i) {
        c.push_back(comomentum(phi, phi.basis_vector(i)).on(tc));
        pulled.push_back(base_pullback(tc, phi.images()[i]));
    }
    CheckReport r("characteristic-identity", "i_T d phi_i = sum_{j<k} gamma^{jk}_i (c_j phi_k - c_k phi_j)");
    const auto &names = phi.bialgebra().names();
    for (std::size_t i = 0; i < phi.dim(); ++i) {
        DifferentialForm rhs(tc.total, 1);
        const auto &g = phi.bialgebra().cobracket()[i];
        for (std::size_t j = 0; j < phi.dim(); ++j)
            for (std::size_t k = j + 1; k < phi.dim(); ++k)
                if (g[j][k] != 0) rhs = rhs + g[j][k] * (c[j] * pulled[k] - c[k] * pulled[j]);
        r.add_residual("identity(" + names[i] + ")", i_T(tc, exterior_derivative(phi.images()[i])) - rhs);
    }
    r.note(kInfinitesimalOnly);
    return r;
}

/// Component-wise comparison of c_i with expected functions on TM.
inline CheckReport comomentum_expectation_check(const PGMap &phi, const std::vector<Polynomial> &expected) {
    if (expected.size() != phi.dim()) throw DimensionMismatch("one expected comomentum component per basis element");
    const TangentChart tc = tangent_chart(phi.chart());
    CheckReport r("comomentum-expected", "c_x = i_T phi_x against the stated components");
    const auto &names = phi.bialgebra().names();
    for (std::size_t i = 0; i < phi.dim(); ++i)
        r.add_residual("c(" + names[i] + ")",
                       comomentum(phi, phi.basis_vector(i)).on(tc) - tc.total.function(expected[i]));
    return r;
}

} // namespace liftred
