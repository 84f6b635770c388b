#pragma once

#include <string>
#include <vector>

#include "liftred/errors.hpp"
#include "liftred/expr/rational.hpp"
#include "liftred/report/check_report.hpp"

namespace liftred {

/// Rank-3 array of rationals indexed [a][b][c].
using Tensor3 = std::vector<std::vector<std::vector<Rational>>>;

inline Tensor3 zero_tensor3(std::size_t n) {
    return Tensor3(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0))));
}

/// Finite-dimensional Lie bialgebra in a basis e_1..e_n.
///   bracket:   [e_i, e_j] = Σ_k c^k_{ij} e_k,          stored as bracket()[k][i][j]
///   cobracket: δ(e_i) = Σ_{j<k} γ^{jk}_i e_j ∧ e_k,    stored as cobracket()[i][j][k]
/// Both arrays are antisymmetric in their last two indices. The Jacobi,
/// cocycle and co-Jacobi checks run at construction; `verified()` records
/// whether all three passed.
class LieBialgebra {
  public:
    LieBialgebra() = default;

    static LieBialgebra make(std::vector<std::string> names, Tensor3 bracket, Tensor3 cobracket) {
        const std::size_t n = names.size();
        auto check_shape = [n](const Tensor3 &t, const char *what) {
            if (t.size() != n) throw DimensionMismatch(std::string(what) + " has wrong dimension");
            for (const auto &m : t) {
                if (m.size() != n) throw DimensionMismatch(std::string(what) + " has wrong dimension");
                for (const auto &row : m)
                    if (row.size() != n) throw DimensionMismatch(std::string(what) + " has wrong dimension");
            }
        };
        check_shape(bracket, "bracket constants");
        check_shape(cobracket, "cobracket constants");
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    if (bracket[a][i][j] != -bracket[a][j][i])
                        throw InvalidInput("bracket constants are not antisymmetric: c^" + names[a] + "_{" + names[i] +
                                           "," + names[j] + "}");
                    if (cobracket[a][i][j] != -cobracket[a][j][i])
                        throw InvalidInput("cobracket constants are not antisymmetric in δ(" + names[a] + ")");
                }
            }
        }
        LieBialgebra b;
        b.names_ = std::move(names);
        b.bracket_ = std::move(bracket);
        b.cobracket_ = std::move(cobracket);
        b.verified_ = b.compute_jacobi().passed() && b.compute_cocycle().passed() && b.dual().compute_jacobi().passed();
        return b;
    }

    /// Abelian algebra with zero cobracket.
    static LieBialgebra abelian(std::vector<std::string> names) {
        const std::size_t n = names.size();
        return make(std::move(names), zero_tensor3(n), zero_tensor3(n));
    }

    std::size_t dim() const { return names_.size(); }
    const std::vector<std::string> &names() const { return names_; }
    const Tensor3 &bracket() const { return bracket_; }
    const Tensor3 &cobracket() const { return cobracket_; }
    bool verified() const { return verified_; }

    std::size_t index_of(const std::string &name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        throw UnknownSymbol(name);
    }

    /// [ξ, η] for coefficient vectors.
    std::vector<Rational> bracket(const std::vector<Rational> &x, const std::vector<Rational> &y) const {
        check_vector(x);
        check_vector(y);
        std::vector<Rational> out(dim(), Rational(0));
        for (std::size_t k = 0; k < dim(); ++k)
            for (std::size_t i = 0; i < dim(); ++i)
                for (std::size_t j = 0; j < dim(); ++j)
                    if (bracket_[k][i][j] != 0) out[k] += bracket_[k][i][j] * x[i] * y[j];
        return out;
    }

    /// Dual bialgebra (g*, δ*): the cobracket becomes the bracket and vice versa.
    LieBialgebra dual() const {
        LieBialgebra d;
        for (const auto &n : names_) d.names_.push_back(n + "*");
        d.bracket_ = cobracket_;
        d.cobracket_ = bracket_;
        d.verified_ = verified_;
        return d;
    }

    /// Σ_cyc [[e_i,e_j],e_k] for i<j<k, one residual per triple.
    CheckReport compute_jacobi() const {
        CheckReport r("bialgebra-jacobi", "[[x,y],z] + [[y,z],x] + [[z,x],y] = 0 on basis triples");
        const std::size_t n = dim();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                for (std::size_t k = j + 1; k < n; ++k) {
                    std::vector<Polynomial> comps;
                    for (std::size_t l = 0; l < n; ++l) {
                        Rational s = 0;
                        for (std::size_t m = 0; m < n; ++m)
                            s += bracket_[m][i][j] * bracket_[l][m][k] + bracket_[m][j][k] * bracket_[l][m][i] +
                                 bracket_[m][k][i] * bracket_[l][m][j];
                        comps.push_back(Polynomial::constant(s));
                    }
                    r.add_residual("jacobi(" + names_[i] + "," + names_[j] + "," + names_[k] + ")", names_, comps);
                }
            }
        }
        return r;
    }

    /// δ([e_a,e_b]) − ad_{e_a} δ(e_b) + ad_{e_b} δ(e_a) for a<b.
    CheckReport compute_cocycle() const {
        CheckReport r("bialgebra-cocycle", "delta([x,y]) = ad_x delta(y) - ad_y delta(x)");
        const std::size_t n = dim();
        std::vector<std::string> labels;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) labels.push_back(names_[j] + "^" + names_[k]);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = a + 1; b < n; ++b) {
                std::vector<std::vector<Rational>> w(n, std::vector<Rational>(n, Rational(0)));
                for (std::size_t m = 0; m < n; ++m)
                    if (bracket_[m][a][b] != 0) add_wedge_image(w, cobracket_[m], bracket_[m][a][b]);
                add_adjoint(w, a, cobracket_[b], Rational(-1));
                add_adjoint(w, b, cobracket_[a], Rational(1));
                std::vector<Polynomial> comps;
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = j + 1; k < n; ++k) comps.push_back(Polynomial::constant(w[j][k]));
                r.add_residual("cocycle(" + names_[a] + "," + names_[b] + ")", labels, comps);
            }
        }
        return r;
    }

  private:
    void check_vector(const std::vector<Rational> &x) const {
        if (x.size() != dim()) throw DimensionMismatch("coefficient vector length does not match algebra dimension");
    }

    // w += s · (antisymmetric matrix m).
    static void add_wedge_image(std::vector<std::vector<Rational>> &w, const std::vector<std::vector<Rational>> &m,
                                const Rational &s) {
        for (std::size_t j = 0; j < w.size(); ++j)
            for (std::size_t k = 0; k < w.size(); ++k) w[j][k] += s * m[j][k];
    }

    // w += s · ad_{e_x}(u) with u ∈ Λ²g given as a full antisymmetric matrix.
    void add_adjoint(std::vector<std::vector<Rational>> &w, std::size_t x, const std::vector<std::vector<Rational>> &u,
                     const Rational &s) const {
        const std::size_t n = dim();
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                if (u[j][k] == 0) continue;
                // [e_x, e_j] ∧ e_k + e_j ∧ [e_x, e_k]
                for (std::size_t m = 0; m < n; ++m) {
                    const Rational a = s * u[j][k] * bracket_[m][x][j];
                    if (a != 0) {
                        w[m][k] += a;
                        w[k][m] -= a;
                    }
                    const Rational b = s * u[j][k] * bracket_[m][x][k];
                    if (b != 0) {
                        w[j][m] += b;
                        w[m][j] -= b;
                    }
                }
            }
        }
    }

    std::vector<std::string> names_;
    Tensor3 bracket_;
    Tensor3 cobracket_;
    bool verified_ = false;
};

inline CheckReport check_jacobi(const LieBialgebra &b) { return b.compute_jacobi(); }

inline CheckReport check_cocycle(const LieBialgebra &b) { return b.compute_cocycle(); }

/// Jacobi identity of the bracket that δ induces on g*.
inline CheckReport check_cojacobi(const LieBialgebra &b) {
    CheckReport r = b.dual().compute_jacobi();
    r.id = "bialgebra-cojacobi";
    r.provenance = "the dual bracket on g* defined by delta satisfies Jacobi";
    return r;
}

/// δ(ξ) as coefficients over e_j∧e_k, j<k, in lexicographic pair order.
inline std::vector<Rational> cobracket_apply(const LieBialgebra &b, const std::vector<Rational> &xi) {
    if (xi.size() != b.dim()) throw DimensionMismatch("coefficient vector length does not match algebra dimension");
    std::vector<Rational> out;
    for (std::size_t j = 0; j < b.dim(); ++j) {
        for (std::size_t k = j + 1; k < b.dim(); ++k) {
            Rational s = 0;
            for (std::size_t i = 0; i < b.dim(); ++i) s += xi[i] * b.cobracket()[i][j][k];
            out.push_back(s);
        }
    }
    return out;
}

} // namespace liftred
