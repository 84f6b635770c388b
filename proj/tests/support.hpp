#pragma once

// Builders shared by the unit tests and the acceptance binary.

#include <random>

#include "liftred/liftred.hpp"

namespace liftred::testing {

inline int sign_pow(std::size_t e) { return e % 2 == 0 ? 1 : -1; }

inline Tensor3 antisymmetric(std::size_t n, std::initializer_list<std::tuple<std::size_t, std::size_t, std::size_t, int>> entries) {
    Tensor3 t = zero_tensor3(n);
    for (const auto &[k, i, j, v] : entries) {
        t[k][i][j] = v;
        t[k][j][i] = -v;
    }
    return t;
}

inline LieBialgebra so3_bialgebra() {
    return LieBialgebra::make({"e1", "e2", "e3"}, antisymmetric(3, {{2, 0, 1, 1}, {0, 1, 2, 1}, {1, 2, 0, 1}}),
                              zero_tensor3(3));
}

inline const Chart &so3_chart() {
    static const Chart c("so3*", {"x", "y", "z"});
    return c;
}

inline PoissonStructure so3_poisson() {
    return PoissonStructure::verify(parse_multivector("x*e_y^e_z + y*e_z^e_x + z*e_x^e_y", so3_chart()));
}

inline const Chart &plane() {
    static const Chart c("R2", {"q", "p"});
    return c;
}

inline PoissonStructure canonical_plane() { return PoissonStructure::verify(parse_multivector("e_q^e_p", plane())); }

/// Rational rotation (I − A)⁻¹(I + A) for a random rational skew matrix A.
inline RationalMatrix cayley_rotation(std::mt19937_64 &rng) {
    const Rational a = random_rational(rng, 3), b = random_rational(rng, 3), c = random_rational(rng, 3);
    const RationalMatrix skew = {{0, -c, b}, {c, 0, -a}, {-b, a, 0}};
    RationalMatrix minus(3, std::vector<Rational>(3)), plus(3, std::vector<Rational>(3));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            const Rational id = i == j ? 1 : 0;
            minus[i][j] = id - skew[i][j];
            plus[i][j] = id + skew[i][j];
        }
    const RationalMatrix inv = *inverse(minus);
    RationalMatrix r(3, std::vector<Rational>(3, Rational(0)));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k) r[i][j] += inv[i][k] * plus[k][j];
    return r;
}

/// J = R x + a on so(3)* with a rational rotation R; a PG-map with images dJ_i
/// over so(3) with zero cobracket.
inline MomentumMapData random_so3_momentum(std::mt19937_64 &rng) {
    const RationalMatrix r = cayley_rotation(rng);
    const Chart &c = so3_chart();
    std::vector<Polynomial> comps;
    for (std::size_t i = 0; i < 3; ++i) {
        Polynomial j = c.constant(random_rational(rng));
        for (std::size_t k = 0; k < 3; ++k) j += c.coordinate(k) * r[i][k];
        comps.push_back(j);
    }
    return {c, comps};
}

inline PGMap exact_pgmap(const LieBialgebra &b, const Chart &c, const std::vector<std::string> &potentials) {
    std::vector<DifferentialForm> images;
    for (const auto &f : potentials)
        images.push_back(exterior_derivative(DifferentialForm::function(c, parse_poly(f, c.coords()))));
    return PGMap(b, c, images);
}

inline std::vector<DifferentialForm> forms(const Chart &c, std::initializer_list<const char *> texts) {
    std::vector<DifferentialForm> out;
    for (const char *t : texts) out.push_back(parse_form(t, c));
    return out;
}

} // namespace liftred::testing
