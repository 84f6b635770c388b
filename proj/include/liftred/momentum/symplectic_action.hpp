#pragma once

#include <string>
#include <vector>

#include "liftred/chart/literal.hpp"
#include "liftred/chart/symplectic.hpp"
#include "liftred/momentum/pgmap.hpp"
#include "liftred/tangent/coordinate_map.hpp"

namespace liftred {

struct SymplecticPGMap {
    PGMap pgmap;
    CheckReport report;
};

/// Throws NotSymplecticAction for the first generator with L_X ω ≠ 0.
inline void require_symplectic_action(const SymplecticForm &omega, const std::vector<Multivector> &generators) {
    for (std::size_t i = 0; i < generators.size(); ++i) {
        require_same_chart(omega.chart(), generators[i].chart(), "symplectic action");
        if (generators[i].degree() != 1) throw DegreeError("action generators are vector fields");
        const DifferentialForm lie = lie_derivative(generators[i], omega.two_form());
        if (!lie.is_zero())
            throw NotSymplecticAction("generator " + std::to_string(i + 1) + " does not preserve the symplectic form", i,
                                      to_string(lie));
    }
}

/// φ̃_i = i_{X_i} ω. The report certifies dφ̃_i = 0, π♯φ̃_i = X_i, and that
/// c_i = i_T φ̃_i is fiber-linear.
inline SymplecticPGMap symplectic_pgmap(const SymplecticForm &omega, const LieBialgebra &b,
                                        const std::vector<Multivector> &generators) {
    if (generators.size() != b.dim()) throw DimensionMismatch("one action generator per basis element");
    require_symplectic_action(omega, generators);
    std::vector<DifferentialForm> images;
    for (const auto &x : generators) images.push_back(flat(omega, x));
    PGMap phi(b, omega.chart(), images);

    CheckReport r("symplectic-pgmap", "L_X omega = 0 gives d(i_X omega) = 0; phi_x = i_X omega generates X");
    const TangentChart tc = tangent_chart(omega.chart());
    const auto fibers = tc.fiber_names();
    for (std::size_t i = 0; i < generators.size(); ++i) {
        const std::string n = b.names()[i];
        r.add_residual("d phi(" + n + ")", exterior_derivative(images[i]));
        r.add_residual("sharp phi(" + n + ") - X(" + n + ")", sharp(omega.inverse_bivector(), images[i]) - generators[i]);
        const Polynomial c = comomentum(phi, phi.basis_vector(i)).on(tc);
        if (!c.is_zero() && c.degree_in(fibers) != 1) r.add_residual("fiber-linearity(" + n + ")", c);
    }
    return {std::move(phi), std::move(r)};
}

inline SymplecticPGMap symplectic_pgmap(const SymplecticForm &omega, const std::vector<Multivector> &generators) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < generators.size(); ++i) names.push_back("e" + std::to_string(i + 1));
    return symplectic_pgmap(omega, LieBialgebra::abelian(std::move(names)), generators);
}

/// Bundle map ω♭ : TM → T*M, (q, v) ↦ (q, i_v ω).
inline CoordinateMap flat_map(const SymplecticForm &omega, const TangentChart &tc, const Chart &cotangent) {
    const std::size_t n = tc.dim();
    std::vector<Polynomial> comps(2 * n);
    for (std::size_t k = 0; k < n; ++k) {
        comps[k] = tc.total.coordinate(k);
        Polynomial p = tc.total.zero();
        for (std::size_t j = 0; j < n; ++j)
            p += tc.total.function(omega.two_form().at({j, k})) * tc.total.coordinate(tc.fiber_index(j));
        comps[n + k] = p;
    }
    return CoordinateMap(tc.total, cotangent, std::move(comps));
}

/// j_X(α) = α(X) on T*M.
inline Polynomial cotangent_momentum(const Multivector &x, const Chart &cotangent) {
    const std::size_t n = x.chart().dim();
    Polynomial out = cotangent.zero();
    for (std::size_t i = 0; i < n; ++i)
        out += cotangent.function(x.component({i})) * cotangent.coordinate(n + i);
    return out;
}

/// c_ξ + j_ξ ∘ ω♭ for each generator. If that fails but c_ξ − j_ξ ∘ ω♭
/// vanishes for every generator, the opposite sign is reported instead.
inline CheckReport cotangent_momentum_relation(const SymplecticForm &omega, const std::vector<Multivector> &generators) {
    require_symplectic_action(omega, generators);
    const TangentChart tc = tangent_chart(omega.chart());
    const auto bc = bundle_charts(tc);
    const CoordinateMap fm = flat_map(omega, tc, bc.cotangent);
    std::vector<Polynomial> plus, minus;
    for (const auto &x : generators) {
        const Polynomial c = i_T(tc, flat(omega, x)).scalar();
        const Polynomial j = fm.pullback(cotangent_momentum(x, bc.cotangent));
        plus.push_back(c + j);
        minus.push_back(c - j);
    }
    bool minus_holds = true;
    for (const auto &m : minus) minus_holds = minus_holds && m.is_zero();
    bool plus_holds = true;
    for (const auto &p : plus) plus_holds = plus_holds && p.is_zero();

    CheckReport r("cotangent-momentum", "c_x = -j_x o omega_flat with j_x(alpha) = alpha(X_x)");
    const bool use_minus = !plus_holds && minus_holds;
    for (std::size_t i = 0; i < generators.size(); ++i)
        r.add_residual(std::string(use_minus ? "c - j o flat" : "c + j o flat") + "(X" + std::to_string(i + 1) + ")",
                       use_minus ? minus[i] : plus[i]);
    r.note(use_minus ? "sign variant: c = +j o omega_flat" : "sign variant: c = -j o omega_flat");
    r.note(kInfinitesimalOnly);
    return r;
}

} // namespace liftred
