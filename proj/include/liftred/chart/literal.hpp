#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "liftred/chart/tensor.hpp"
#include "liftred/expr/parse.hpp"

namespace liftred {

// Tensor literals: a sum of `coeff * basis` terms such as `q*dq^dp - dp`
// (forms) or `x*e_y^e_z` (multivectors). Coefficients follow the polynomial
// grammar; basis elements are `d<coord>` for forms and `e_<coord>` for vectors.

template <class Kind> struct BasisSpelling;
template <> struct BasisSpelling<FormKind> {
    static constexpr std::string_view prefix = "d";
    static constexpr std::string_view other = "e_";
};
template <> struct BasisSpelling<VectorKind> {
    static constexpr std::string_view prefix = "e_";
    static constexpr std::string_view other = "d";
};

namespace detail {

inline std::optional<std::size_t> basis_coordinate(const Chart &chart, std::string_view ident,
                                                   std::string_view prefix) {
    if (chart.index_of(ident)) return std::nullopt;
    if (ident.size() <= prefix.size() || ident.substr(0, prefix.size()) != prefix) return std::nullopt;
    return chart.index_of(ident.substr(prefix.size()));
}

template <class Kind> class TensorParser {
  public:
    TensorParser(TokenStream &ts, const Chart &chart) : ts_(ts), chart_(chart), poly_(ts, chart.coords()) {}

    AlternatingField<Kind> parse(std::optional<std::size_t> expected_degree) {
        std::vector<std::pair<MultiIndex, Polynomial>> terms;
        bool negate = false;
        if (ts_.accept(Tok::minus))
            negate = true;
        else
            ts_.accept(Tok::plus);
        terms.push_back(term());
        if (negate) terms.back().second = -terms.back().second;
        for (;;) {
            if (ts_.accept(Tok::plus)) {
                terms.push_back(term());
            } else if (ts_.accept(Tok::minus)) {
                terms.push_back(term());
                terms.back().second = -terms.back().second;
            } else {
                break;
            }
        }
        if (ts_.peek().kind != Tok::end) throw SyntaxError("unexpected trailing input", ts_.peek().pos);

        std::optional<std::size_t> degree = expected_degree;
        for (const auto &[idx, c] : terms) {
            const bool zero_scalar = idx.empty() && c.is_zero();
            if (zero_scalar) continue;
            if (!degree) degree = idx.size();
            if (*degree != idx.size())
                throw DegreeError("tensor literal mixes degrees " + std::to_string(*degree) + " and " +
                                  std::to_string(idx.size()));
        }
        AlternatingField<Kind> out(chart_, degree.value_or(0));
        for (auto &[idx, c] : terms)
            if (!c.is_zero()) out.add(idx, c);
        return out;
    }

  private:
    std::pair<MultiIndex, Polynomial> term() {
        std::optional<MultiIndex> basis;
        Polynomial coeff = chart_.constant(1);
        do {
            const Token &t = ts_.peek();
            if (t.kind == Tok::ident && !chart_.index_of(t.text)) {
                if (basis) throw SyntaxError("two basis products in one term; use '^' to wedge", t.pos);
                basis = wedge_chain();
            } else {
                coeff *= poly_.factor();
            }
        } while (ts_.accept(Tok::star));
        return {basis.value_or(MultiIndex{}), coeff};
    }

    MultiIndex wedge_chain() {
        MultiIndex idx;
        for (;;) {
            const Token &t = ts_.next();
            auto i = basis_coordinate(chart_, t.text, BasisSpelling<Kind>::prefix);
            if (!i) {
                if (basis_coordinate(chart_, t.text, BasisSpelling<Kind>::other))
                    throw KindMismatch("basis element '" + t.text + "' does not belong to a " + Kind::name);
                throw UnknownSymbol(t.text);
            }
            idx.push_back(*i);
            if (ts_.peek().kind != Tok::caret) return idx;
            ts_.next();
            if (ts_.peek().kind != Tok::ident) throw SyntaxError("basis elements cannot be raised to a power", ts_.peek().pos);
        }
    }

    TokenStream &ts_;
    const Chart &chart_;
    PolyParser poly_;
};

} // namespace detail

/// Parses a tensor literal on `chart`. A literal with no basis element is a
/// degree-0 field unless `expected_degree` says otherwise (useful for `0`).
template <class Kind>
AlternatingField<Kind> parse_tensor(std::string_view text, const Chart &chart,
                                    std::optional<std::size_t> expected_degree = std::nullopt) {
    detail::TokenStream ts(text);
    detail::TensorParser<Kind> parser(ts, chart);
    return parser.parse(expected_degree);
}

inline DifferentialForm parse_form(std::string_view text, const Chart &chart,
                                   std::optional<std::size_t> expected_degree = std::nullopt) {
    return parse_tensor<FormKind>(text, chart, expected_degree);
}

inline Multivector parse_multivector(std::string_view text, const Chart &chart,
                                     std::optional<std::size_t> expected_degree = std::nullopt) {
    return parse_tensor<VectorKind>(text, chart, expected_degree);
}

/// Literal text, e.g. `(q + p)*dq^dp - dp^dr`; parse_tensor reads it back.
template <class Kind> std::string to_string(const AlternatingField<Kind> &t) {
    if (t.degree() == 0) return t.scalar().to_string();
    if (t.is_zero()) return "0";
    std::string out;
    for (const auto &[idx, c] : t.components()) {
        std::string basis;
        for (auto i : idx) {
            if (!basis.empty()) basis += "^";
            basis += std::string(BasisSpelling<Kind>::prefix) + t.chart().coords()[i];
        }
        std::string term;
        if (c.terms().size() > 1) {
            term = "(" + c.to_string() + ")*" + basis;
        } else if (c == t.chart().constant(1)) {
            term = basis;
        } else if (c == t.chart().constant(-1)) {
            term = "-" + basis;
        } else {
            term = c.to_string() + "*" + basis;
        }
        if (out.empty()) {
            out = term;
        } else if (term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

} // namespace liftred
