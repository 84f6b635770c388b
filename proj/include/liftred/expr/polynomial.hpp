#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "liftred/errors.hpp"
#include "liftred/expr/rational.hpp"

namespace liftred {

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are keyed by exponent vectors aligned with `variables()`. The
/// variable list is ordered; binary operations on polynomials over different
/// lists work over the merged list (the superset when one list contains the
/// other, otherwise the sorted union). Equality is semantic: two polynomials
/// compare equal when they denote the same function, whatever their lists.
class Polynomial {
  public:
    using Exponents = std::vector<std::uint32_t>;

    /// Graded lexicographic order, largest monomial first.
    struct GradedLexGreater {
        bool operator()(const Exponents &a, const Exponents &b) const {
            const auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
            const auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
            if (da != db) return da > db;
            return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
        }
    };
    using TermMap = std::map<Exponents, Rational, GradedLexGreater>;
    using Assignment = std::map<std::string, Rational, std::less<>>;

    Polynomial() = default;
    explicit Polynomial(std::vector<std::string> vars) : vars_(std::move(vars)) { check_distinct(); }

    static Polynomial constant(const Rational &c, std::vector<std::string> vars = {}) {
        Polynomial p(std::move(vars));
        if (c != 0) p.terms_.emplace(Exponents(p.vars_.size(), 0), c);
        return p;
    }

    /// The coordinate function `name`. When `vars` is empty the list is {name}.
    static Polynomial variable(const std::string &name, std::vector<std::string> vars = {}) {
        if (vars.empty()) vars.push_back(name);
        Polynomial p(std::move(vars));
        const auto idx = p.index_of(name);
        if (!idx) throw UnknownSymbol(name);
        Exponents e(p.vars_.size(), 0);
        e[*idx] = 1;
        p.terms_.emplace(std::move(e), Rational(1));
        return p;
    }

    static Polynomial from_terms(std::vector<std::string> vars, const TermMap &terms) {
        Polynomial p(std::move(vars));
        for (const auto &[e, c] : terms) {
            if (e.size() != p.vars_.size()) throw DimensionMismatch("exponent vector length does not match variables");
            if (c != 0) p.terms_[e] += c;
        }
        p.prune();
        return p;
    }

    const std::vector<std::string> &variables() const { return vars_; }
    const TermMap &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && total(terms_.begin()->first) == 0);
    }

    Rational constant_term() const { return coefficient(Exponents(vars_.size(), 0)); }

    Rational coefficient(const Exponents &e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    std::uint64_t total_degree() const { return terms_.empty() ? 0 : total(terms_.begin()->first); }

    /// Largest combined exponent of the named variables over all terms.
    std::uint64_t degree_in(std::span<const std::string> names) const {
        std::vector<std::size_t> idx;
        for (const auto &n : names)
            if (auto i = index_of(n)) idx.push_back(*i);
        std::uint64_t best = 0;
        for (const auto &[e, c] : terms_) {
            std::uint64_t d = 0;
            for (auto i : idx) d += e[i];
            best = std::max(best, d);
        }
        return best;
    }

    /// Variables that occur with a nonzero exponent.
    std::set<std::string> support() const {
        std::set<std::string> out;
        for (const auto &[e, c] : terms_)
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) out.insert(vars_[i]);
        return out;
    }

    /// Re-expresses the polynomial over `vars`; every variable in use must appear there.
    Polynomial embed(const std::vector<std::string> &vars) const {
        if (vars == vars_) return *this;
        Polynomial out(vars);
        std::vector<std::size_t> map(vars_.size());
        std::vector<bool> present(vars_.size(), false);
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (auto j = out.index_of(vars_[i])) {
                map[i] = *j;
                present[i] = true;
            }
        }
        for (const auto &[e, c] : terms_) {
            Exponents f(vars.size(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!present[i]) throw UnknownSymbol(vars_[i]);
                f[map[i]] = e[i];
            }
            out.terms_.emplace(std::move(f), c);
        }
        return out;
    }

    Polynomial derivative(std::string_view var) const {
        const auto idx = index_of(var);
        if (!idx) throw UnknownSymbol(std::string(var));
        Polynomial out(vars_);
        for (const auto &[e, c] : terms_) {
            if (e[*idx] == 0) continue;
            Exponents f = e;
            --f[*idx];
            out.terms_[f] += c * e[*idx];
        }
        out.prune();
        return out;
    }

    Rational evaluate(const Assignment &values) const {
        std::vector<const Rational *> at(vars_.size(), nullptr);
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            auto it = values.find(vars_[i]);
            if (it != values.end()) at[i] = &it->second;
        }
        Rational sum = 0;
        for (const auto &[e, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!at[i]) throw MissingAssignment(vars_[i]);
                mpz_class num, den;
                mpz_pow_ui(num.get_mpz_t(), at[i]->get_num_mpz_t(), e[i]);
                mpz_pow_ui(den.get_mpz_t(), at[i]->get_den_mpz_t(), e[i]);
                t *= Rational(num, den);
            }
            sum += t;
        }
        sum.canonicalize();
        return sum;
    }

    /// Substitutes polynomials for variables; unlisted variables are kept.
    Polynomial compose(const std::map<std::string, Polynomial, std::less<>> &subs) const {
        std::vector<Polynomial> image(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            auto it = subs.find(vars_[i]);
            image[i] = it != subs.end() ? it->second : variable(vars_[i]);
        }
        std::map<std::pair<std::size_t, std::uint32_t>, Polynomial> powers;
        auto power = [&](std::size_t i, std::uint32_t k) -> const Polynomial & {
            if (!powers.count({i, 1u})) powers.emplace(std::make_pair(i, 1u), image[i]);
            for (std::uint32_t have = 1; have < k; ++have)
                if (!powers.count({i, have + 1}))
                    powers.emplace(std::make_pair(i, have + 1), powers.at({i, have}) * image[i]);
            return powers.at({i, k});
        };
        Polynomial out;
        for (const auto &[e, c] : terms_) {
            Polynomial t = constant(c);
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) t = t * power(i, e[i]);
            out = out + t;
        }
        return out;
    }

    Polynomial pow(unsigned k) const {
        Polynomial out = constant(1, vars_);
        for (unsigned i = 0; i < k; ++i) out = out * *this;
        return out;
    }

    Polynomial operator-() const {
        Polynomial out = *this;
        for (auto &[e, c] : out.terms_) c = -c;
        return out;
    }

    Polynomial &operator*=(const Rational &s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto &[e, c] : terms_) c *= s;
        return *this;
    }

    friend Polynomial operator*(Polynomial p, const Rational &s) { return p *= s; }
    friend Polynomial operator*(const Rational &s, Polynomial p) { return p *= s; }

    friend Polynomial operator+(const Polynomial &a, const Polynomial &b) { return combine(a, b, 1); }
    friend Polynomial operator-(const Polynomial &a, const Polynomial &b) { return combine(a, b, -1); }

    friend Polynomial operator*(const Polynomial &a, const Polynomial &b) {
        if (a.vars_ != b.vars_) {
            const auto vars = merged_variables(a.vars_, b.vars_);
            return a.embed(vars) * b.embed(vars);
        }
        Polynomial out(a.vars_);
        for (const auto &[ea, ca] : a.terms_) {
            for (const auto &[eb, cb] : b.terms_) {
                Exponents e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                out.terms_[std::move(e)] += ca * cb;
            }
        }
        out.prune();
        return out;
    }

    Polynomial &operator+=(const Polynomial &b) { return *this = *this + b; }
    Polynomial &operator-=(const Polynomial &b) { return *this = *this - b; }
    Polynomial &operator*=(const Polynomial &b) { return *this = *this * b; }

    friend bool operator==(const Polynomial &a, const Polynomial &b) {
        if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
        return (a - b).is_zero();
    }

    /// Canonical text, e.g. `q^2*p - 1/2`; the zero polynomial prints as `0`.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto &[e, c] : terms_) {
            const bool neg = c < 0;
            const Rational mag = neg ? Rational(-c) : c;
            if (first) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            first = false;
            const std::string mono = monomial_string(e);
            if (mono.empty()) {
                out += liftred::to_string(mag);
            } else if (mag == 1) {
                out += mono;
            } else {
                out += liftred::to_string(mag) + "*" + mono;
            }
        }
        return out;
    }

    std::optional<std::size_t> index_of(std::string_view name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return i;
        return std::nullopt;
    }

    static std::vector<std::string> merged_variables(const std::vector<std::string> &a,
                                                     const std::vector<std::string> &b) {
        auto contains_all = [](const std::vector<std::string> &big, const std::vector<std::string> &small) {
            return std::all_of(small.begin(), small.end(), [&](const std::string &s) {
                return std::find(big.begin(), big.end(), s) != big.end();
            });
        };
        if (contains_all(a, b)) return a;
        if (contains_all(b, a)) return b;
        std::set<std::string> u(a.begin(), a.end());
        u.insert(b.begin(), b.end());
        return {u.begin(), u.end()};
    }

  private:
    static std::uint64_t total(const Exponents &e) {
        return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
    }

    static Polynomial combine(const Polynomial &a, const Polynomial &b, int sign) {
        if (a.vars_ != b.vars_) {
            const auto vars = merged_variables(a.vars_, b.vars_);
            return combine(a.embed(vars), b.embed(vars), sign);
        }
        Polynomial out = a;
        for (const auto &[e, c] : b.terms_) {
            if (sign > 0)
                out.terms_[e] += c;
            else
                out.terms_[e] -= c;
        }
        out.prune();
        return out;
    }

    void prune() {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->second == 0) {
                it = terms_.erase(it);
            } else {
                it->second.canonicalize();
                ++it;
            }
        }
    }

    void check_distinct() const {
        std::set<std::string> seen;
        for (const auto &v : vars_)
            if (!seen.insert(v).second) throw NameCollision("duplicate variable '" + v + "'");
    }

    std::string monomial_string(const Exponents &e) const {
        std::string out;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!out.empty()) out += "*";
            out += vars_[i];
            if (e[i] > 1) out += "^" + std::to_string(e[i]);
        }
        return out;
    }

    std::vector<std::string> vars_;
    TermMap terms_;
};

inline Polynomial poly_add(const Polynomial &a, const Polynomial &b) { return a + b; }
inline Polynomial poly_sub(const Polynomial &a, const Polynomial &b) { return a - b; }
inline Polynomial poly_mul(const Polynomial &a, const Polynomial &b) { return a * b; }

inline Polynomial partial_derivative(const Polynomial &p, std::string_view x) { return p.derivative(x); }

inline Rational substitute(const Polynomial &p, const Polynomial::Assignment &values) {
    return p.evaluate(values);
}

} // namespace liftred
