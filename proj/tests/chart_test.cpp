#include <gtest/gtest.h>

#include <random>

#include "liftred/chart/literal.hpp"
#include "liftred/chart/poisson.hpp"
#include "liftred/chart/symplectic.hpp"
#include "liftred/numeric/random.hpp"

using namespace liftred;

namespace {

const Chart R2("R2", {"q", "p"});
const Chart XY("XY", {"x", "y"});
const Chart R3("R3", {"x", "y", "z"});
const Chart R4("R4", {"a", "b", "c", "d"});

DifferentialForm F(const std::string &s, const Chart &c = R2) { return parse_form(s, c); }
Multivector V(const std::string &s, const Chart &c = R2) { return parse_multivector(s, c); }
Polynomial P(const std::string &s, const Chart &c = R2) { return parse_poly(s, c.coords()); }
DifferentialForm d(const Polynomial &f, const Chart &c) { return exterior_derivative(DifferentialForm::function(c, f)); }

Multivector so3() { return V("x*e_y^e_z + y*e_z^e_x + z*e_x^e_y", R3); }

// Lie bracket of vector fields by its defining action on functions.
Polynomial lie_bracket_on(const Multivector &x, const Multivector &y, const Polynomial &f) {
    return directional_derivative(x, directional_derivative(y, f)) - directional_derivative(y, directional_derivative(x, f));
}

// Jacobiator {f,{g,h}} + cyclic.
Polynomial jacobiator(const Multivector &pi, const Polynomial &f, const Polynomial &g, const Polynomial &h) {
    return poisson_bracket(pi, f, poisson_bracket(pi, g, h)) + poisson_bracket(pi, g, poisson_bracket(pi, h, f)) +
           poisson_bracket(pi, h, poisson_bracket(pi, f, g));
}

int sign_pow(std::size_t e) { return e % 2 == 0 ? 1 : -1; }

} // namespace

TEST(Chart, RejectsDuplicateCoordinates) { EXPECT_THROW(Chart("bad", {"q", "q"}), NameCollision); }

TEST(Literal, RoundTripAndErrors) {
    const DifferentialForm w = F("(q + p)*dq^dp");
    EXPECT_EQ(w.degree(), 2u);
    EXPECT_EQ(F(to_string(w)), w);
    EXPECT_EQ(F("dp^dq"), -F("dq^dp"));
    EXPECT_EQ(to_string(V("q*e_p - e_q")), to_string(V("-e_q + q*e_p")));
    EXPECT_THROW(F("e_q"), KindMismatch);
    EXPECT_THROW(V("dq"), KindMismatch);
    EXPECT_THROW(F("dq + dq^dp"), DegreeError);
    EXPECT_THROW(F("dr"), UnknownSymbol);
    EXPECT_THROW(F("dq dp"), SyntaxError);
    EXPECT_TRUE(parse_form("0", R2, 2).is_zero());
    EXPECT_EQ(parse_form("0", R2, 2).degree(), 2u);
}

TEST(Wedge, WorkedExamples) {
    const DifferentialForm w = wedge(F("dq"), F("dp"));
    ASSERT_EQ(w.components().size(), 1u);
    EXPECT_EQ(w.at({0, 1}), R2.constant(1));
    EXPECT_TRUE(wedge(F("dq"), F("dq")).is_zero());
    EXPECT_EQ(wedge(F("q*dq"), F("p*dp")), F("q*p*dq^dp"));
}

TEST(Wedge, GradedCommutativeAndAssociative) {
    std::mt19937_64 rng(21);
    for (int n = 0; n < 60; ++n) {
        const std::size_t ka = n % 3, kb = (n / 3) % 3, kc = (n / 9) % 2;
        const auto a = random_form(R4, ka, rng, 2), b = random_form(R4, kb, rng, 2), c = random_form(R4, kc, rng, 2);
        EXPECT_EQ(wedge(a, b), sign_pow(ka * kb) * wedge(b, a));
        EXPECT_EQ(wedge(wedge(a, b), c), wedge(a, wedge(b, c)));
    }
}

TEST(ExteriorDerivative, WorkedExamples) {
    EXPECT_EQ(d(P("q*p"), R2), F("p*dq + q*dp"));
    EXPECT_EQ(exterior_derivative(F("q*dp")), F("dq^dp"));
    EXPECT_TRUE(exterior_derivative(F("dq^dp")).is_zero());
}

TEST(ExteriorDerivative, SquaresToZero) {
    std::mt19937_64 rng(22);
    for (std::size_t k = 0; k <= 4; ++k)
        for (int n = 0; n < 20; ++n) EXPECT_TRUE(exterior_derivative(exterior_derivative(random_form(R4, k, rng, 4))).is_zero());
}

TEST(ExteriorDerivative, LeibnizOverWedge) {
    std::mt19937_64 rng(23);
    for (int n = 0; n < 40; ++n) {
        const std::size_t k = n % 3;
        const auto a = random_form(R3, k, rng, 3), b = random_form(R3, 1, rng, 3);
        EXPECT_EQ(exterior_derivative(wedge(a, b)),
                  wedge(exterior_derivative(a), b) + sign_pow(k) * wedge(a, exterior_derivative(b)));
    }
}

TEST(InteriorProduct, WorkedExamples) {
    EXPECT_EQ(interior_product(V("e_q"), F("dq^dp")), F("dp"));
    EXPECT_TRUE(interior_product(V("e_p"), F("dq")).is_zero());
    EXPECT_EQ(interior_product(V("q*e_q"), F("q*dq")).scalar(), P("q^2"));
    EXPECT_THROW(interior_product(V("e_q"), DifferentialForm::function(R2, P("q"))), DegreeError);
}

TEST(LieDerivative, WorkedExamples) {
    EXPECT_EQ(lie_derivative(V("e_q"), F("q*dq")), F("dq"));
    EXPECT_EQ(lie_derivative(V("q*e_p"), DifferentialForm::function(R2, P("p"))).scalar(), P("q"));
    EXPECT_TRUE(lie_derivative(V("e_q"), V("e_p")).is_zero());
}

TEST(LieDerivative, CartanFormula) {
    std::mt19937_64 rng(24);
    for (int n = 0; n < 40; ++n) {
        const auto x = random_multivector(R3, 1, rng, 2);
        const auto w = random_form(R3, 1 + n % 3, rng, 2);
        EXPECT_EQ(lie_derivative(x, w),
                  interior_product(x, exterior_derivative(w)) + exterior_derivative(interior_product(x, w)));
    }
}

TEST(Schouten, WorkedExamples) {
    EXPECT_TRUE(schouten_bracket(V("e_q^e_p"), V("e_q^e_p")).is_zero());
    EXPECT_TRUE(schouten_bracket(V("e_q"), V("e_p")).is_zero());
    EXPECT_THROW(schouten_bracket(Multivector::function(R2, P("q")), Multivector::function(R2, P("p"))), DegreeError);
}

TEST(Schouten, RotationBracketMatchesHandOracle) {
    // Oracle: [X,Y] f = X(Y f) − Y(X f) on each coordinate.
    const Multivector x = V("x*e_y - y*e_x", XY), y = V("e_x", XY);
    const Multivector b = schouten_bracket(x, y);
    for (std::size_t i = 0; i < 2; ++i)
        EXPECT_EQ(b.component({i}), lie_bracket_on(x, y, XY.coordinate(i))) << XY.coords()[i];
    EXPECT_EQ(b, V("-e_y", XY));
}

TEST(Schouten, LieBracketOnRandomFields) {
    std::mt19937_64 rng(25);
    for (int n = 0; n < 40; ++n) {
        const auto x = random_multivector(R3, 1, rng, 3), y = random_multivector(R3, 1, rng, 3);
        const auto f = random_polynomial(R3, rng, 3);
        EXPECT_EQ(directional_derivative(schouten_bracket(x, y), f), lie_bracket_on(x, y, f));
        EXPECT_EQ(schouten_bracket(x, Multivector::function(R3, f)).scalar(), directional_derivative(x, f));
    }
}

TEST(Schouten, GradedAntisymmetry) {
    std::mt19937_64 rng(26);
    for (int n = 0; n < 60; ++n) {
        const std::size_t a = 1 + n % 3, b = (n / 3) % 3;
        const auto A = random_multivector(R4, a, rng, 2), B = random_multivector(R4, b, rng, 2);
        EXPECT_EQ(schouten_bracket(A, B), -sign_pow((a + 1) * (b + 1)) * schouten_bracket(B, A)) << a << " " << b;
    }
}

TEST(Schouten, GradedLeibniz) {
    // [A, B∧C] = [A,B]∧C + (−1)^{(|A|−1)|B|} B∧[A,C]
    std::mt19937_64 rng(27);
    for (int n = 0; n < 60; ++n) {
        const std::size_t a = 1 + n % 2, b = (n / 2) % 2, c = 1 + (n / 4) % 2;
        const auto A = random_multivector(R4, a, rng, 2), B = random_multivector(R4, b, rng, 2),
                   C = random_multivector(R4, c, rng, 2);
        const Multivector lhs = schouten_bracket(A, wedge(B, C));
        const Multivector rhs =
            wedge(schouten_bracket(A, B), C) + sign_pow((a - 1) * b) * wedge(B, schouten_bracket(A, C));
        EXPECT_EQ(lhs, rhs) << a << " " << b << " " << c;
    }
}

TEST(Jacobi, WorkedExamples) {
    EXPECT_TRUE(jacobi_check(V("e_q^e_p")).is_zero());
    EXPECT_TRUE(jacobi_check(V("q*e_q^e_p")).is_zero());
    EXPECT_TRUE(jacobi_check(so3()).is_zero());
    EXPECT_THROW(jacobi_check(V("e_q")), DegreeError);
}

TEST(Jacobi, NonPoissonTrivectorMatchesJacobiator) {
    const Multivector pi = V("y*e_x^e_y + x*e_y^e_z", R3);
    const Multivector t = jacobi_check(pi);
    EXPECT_EQ(t, V("-2*x*e_x^e_y^e_z", R3));
    // The Jacobiator on coordinates is −x; [π,π] carries twice it.
    const Polynomial j = jacobiator(pi, R3.coordinate(0), R3.coordinate(1), R3.coordinate(2));
    EXPECT_EQ(j, P("-x", R3));
    EXPECT_EQ(t.at({0, 1, 2}), j * Rational(2));
    EXPECT_FALSE(PoissonStructure::verify(pi).jacobi_verified());
}

TEST(Jacobi, TrivectorTracksJacobiatorOnRandomBivectors) {
    std::mt19937_64 rng(28);
    for (int n = 0; n < 40; ++n) {
        const auto pi = random_multivector(R3, 2, rng, 2);
        const Polynomial j = jacobiator(pi, R3.coordinate(0), R3.coordinate(1), R3.coordinate(2));
        EXPECT_EQ(jacobi_check(pi).at({0, 1, 2}), j * Rational(2));
    }
}

TEST(Jacobi, EveryPlanarBivectorIsPoisson) {
    std::mt19937_64 rng(29);
    for (int n = 0; n < 50; ++n) EXPECT_TRUE(jacobi_check(random_multivector(R2, 2, rng, 4)).is_zero());
}

TEST(Jacobi, LiePoissonFromStructureConstants) {
    std::vector<std::vector<std::vector<Rational>>> c(3, std::vector<std::vector<Rational>>(3, std::vector<Rational>(3)));
    auto set = [&](std::size_t k, std::size_t i, std::size_t j) {
        c[k][i][j] = 1;
        c[k][j][i] = -1;
    };
    set(2, 0, 1);
    set(0, 1, 2);
    set(1, 2, 0);
    const Multivector pi = lie_poisson_bivector(R3, c);
    EXPECT_EQ(pi, so3());
    EXPECT_EQ(poisson_bracket(pi, R3.coordinate(0), R3.coordinate(1)), P("z", R3));
}

TEST(Sharp, WorkedExamples) {
    EXPECT_EQ(sharp(V("e_q^e_p"), F("dq")), V("e_p"));
    EXPECT_TRUE(sharp(V("e_q^e_p"), parse_form("0", R2, 1)).is_zero());
    EXPECT_EQ(sharp(so3(), F("dx", R3)), V("z*e_y - y*e_z", R3));
}

TEST(Sharp, MatchesMatrixApplication) {
    std::mt19937_64 rng(30);
    for (int n = 0; n < 30; ++n) {
        const auto pi = random_multivector(R3, 2, rng, 2);
        const auto alpha = random_form(R3, 1, rng, 2);
        const Multivector s = sharp(pi, alpha);
        for (std::size_t j = 0; j < 3; ++j) {
            Polynomial expect = R3.zero();
            for (std::size_t i = 0; i < 3; ++i) expect += alpha.component({i}) * pi.at({i, j});
            EXPECT_EQ(s.component({j}), expect);
        }
    }
}

TEST(PoissonBracket, WorkedExamples) {
    const Multivector pi = V("e_q^e_p");
    EXPECT_EQ(poisson_bracket(pi, P("q"), P("p")), R2.constant(1));
    const Polynomial f = P("q^3*p + p^2");
    EXPECT_TRUE(poisson_bracket(pi, f, f).is_zero());
    EXPECT_EQ(poisson_bracket(so3(), P("x", R3), P("y", R3)), P("z", R3));
}

TEST(PoissonBracket, JacobiIdentityForVerifiedStructures) {
    std::mt19937_64 rng(31);
    const std::vector<Multivector> structures = {V("e_q^e_p"), V("q*e_q^e_p"), so3()};
    for (const auto &pi : structures) {
        ASSERT_TRUE(PoissonStructure::verify(pi).jacobi_verified());
        for (int n = 0; n < 20; ++n) {
            const Chart &c = pi.chart();
            EXPECT_TRUE(jacobiator(pi, random_polynomial(c, rng, 2), random_polynomial(c, rng, 2),
                                   random_polynomial(c, rng, 2))
                            .is_zero());
        }
    }
}

TEST(PoissonBracket, AgreesWithSharp) {
    std::mt19937_64 rng(32);
    for (int n = 0; n < 40; ++n) {
        const auto pi = random_multivector(R3, 2, rng, 2);
        const auto f = random_polynomial(R3, rng, 3), g = random_polynomial(R3, rng, 3);
        EXPECT_EQ(poisson_bracket(pi, f, g), pairing(d(g, R3), sharp(pi, d(f, R3))));
        EXPECT_EQ(poisson_bracket(pi, f, g), directional_derivative(hamiltonian_vf(pi, f), g));
    }
}

TEST(HamiltonianField, WorkedExamples) {
    const Multivector pi = V("e_q^e_p");
    EXPECT_EQ(hamiltonian_vf(pi, P("q")), V("e_p"));
    EXPECT_TRUE(hamiltonian_vf(pi, P("7/3")).is_zero());
    EXPECT_EQ(hamiltonian_vf(pi, P("1/2*q^2 + 1/2*p^2")), V("q*e_p - p*e_q"));
}

TEST(Koszul, WorkedExamples) {
    const Multivector pi = V("e_q^e_p");
    EXPECT_TRUE(koszul_bracket(pi, F("dq"), F("dp")).is_zero());
    EXPECT_TRUE(koszul_bracket(pi, F("q*dp + p^2*dq"), F("q*dp + p^2*dq")).is_zero());
    EXPECT_EQ(koszul_bracket(so3(), F("dx", R3), F("dy", R3)), F("dz", R3));
}

TEST(Koszul, ExactFormsBracketToDifferentialOfPoissonBracket) {
    std::mt19937_64 rng(33);
    const std::vector<Multivector> structures = {so3(), random_multivector(R3, 2, rng, 2)};
    for (const auto &pi : structures)
        for (int n = 0; n < 20; ++n) {
            const auto f = random_polynomial(R3, rng, 3), g = random_polynomial(R3, rng, 3);
            EXPECT_EQ(koszul_bracket(pi, d(f, R3), d(g, R3)), d(poisson_bracket(pi, f, g), R3));
        }
}

TEST(Koszul, Antisymmetric) {
    std::mt19937_64 rng(34);
    for (int n = 0; n < 30; ++n) {
        const auto a = random_form(R3, 1, rng, 2), b = random_form(R3, 1, rng, 2);
        EXPECT_EQ(koszul_bracket(so3(), a, b), -koszul_bracket(so3(), b, a));
    }
}

TEST(Symplectic, InverseConvention) {
    // Ω·P = I: dp^dq inverts to e_q^e_p, dq^dp to e_p^e_q.
    const SymplecticForm a = SymplecticForm::make(F("dp^dq"));
    EXPECT_EQ(a.inverse_bivector(), V("e_q^e_p"));
    const SymplecticForm b = SymplecticForm::make(F("dq^dp"));
    EXPECT_EQ(b.inverse_bivector(), V("e_p^e_q"));
    EXPECT_TRUE(b.poisson().jacobi_verified());
    EXPECT_EQ(flat(b, V("e_q")), F("dp"));
}

TEST(Symplectic, Rejections) {
    EXPECT_THROW(SymplecticForm::make(F("dq")), DegreeError);
    EXPECT_THROW(SymplecticForm::make(parse_form("0", R2, 2)), InvalidInput);
    EXPECT_THROW(SymplecticForm::make(F("q*dq^dp")), InvalidInput);
    EXPECT_THROW(SymplecticForm::make(F("x*dy^dz", R3)), InvalidInput);
    EXPECT_THROW(SymplecticForm::make(F("dq^dp"), V("e_q^e_p")), InvalidInput);
}

TEST(ChartMismatch, MixingChartsThrows) {
    EXPECT_THROW(F("dq") + F("dx", XY), ChartMismatch);
    EXPECT_THROW(wedge(F("dq"), F("dx", XY)), ChartMismatch);
}
