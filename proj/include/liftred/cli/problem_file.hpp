#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "liftred/bialgebra/bialgebra.hpp"
#include "liftred/chart/literal.hpp"
#include "liftred/errors.hpp"
#include "liftred/expr/parse.hpp"
#include "liftred/numeric/oracle.hpp"
#include "liftred/tangent/coordinate_map.hpp"
#include "liftred/tangent/tangent_chart.hpp"

namespace liftred {

/// Problem-file error carrying a 1-based line and column.
struct ProblemError : Error {
    ProblemError(const std::string &source, std::size_t l, std::size_t c, const std::string &msg)
        : Error(source + ":" + std::to_string(l) + ":" + std::to_string(c) + ": " + msg), line(l), column(c) {}
    std::size_t line, column;
};

struct LevelSet {
    Chart params;
    std::vector<Polynomial> components; ///< one per chart coordinate, in parameters
};

struct OracleSettings {
    std::optional<std::size_t> samples;
    std::optional<std::uint64_t> seed;
    std::optional<Interval> box;
    std::map<std::string, Interval, std::less<>> coordinate_boxes;
    std::optional<Rational> fd_step;
};

struct ProblemFile {
    std::string source;
    Chart chart;
    std::optional<Multivector> poisson;
    std::optional<DifferentialForm> symplectic;
    std::optional<LieBialgebra> bialgebra; ///< explicit block, or abelian over the entry names
    bool explicit_bialgebra = false;
    std::optional<std::vector<DifferentialForm>> pgmap;
    std::optional<std::vector<Polynomial>> momentum;
    std::optional<std::vector<Multivector>> action;
    std::optional<LevelSet> level_set;
    std::optional<std::vector<Polynomial>> expected_comomentum; ///< on the TM chart
    OracleSettings oracle;
};

namespace detail {

/// One entry of the block structure: `head: value`, `head = value` or `head { ... }`.
struct Item {
    std::string head;
    char kind = ':';
    std::string value;
    std::vector<Item> children;
    std::size_t offset = 0;       ///< of the head
    std::size_t value_offset = 0; ///< of the value
};

class BlockReader {
  public:
    BlockReader(std::string_view text, std::string source) : text_(text), source_(std::move(source)) {}

    std::vector<Item> read() { return items(false); }

    [[noreturn]] void error_at(std::size_t offset, const std::string &msg) const {
        const auto [l, c] = position(text_, offset);
        throw ProblemError(source_, l, c, msg);
    }

    static std::pair<std::size_t, std::size_t> position(std::string_view text, std::size_t offset) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        return {line, col};
    }

  private:
    std::vector<Item> items(bool nested) {
        std::vector<Item> out;
        for (;;) {
            skip_separators();
            if (i_ == text_.size()) {
                if (nested) error_at(i_, "missing '}'");
                return out;
            }
            if (text_[i_] == '}') {
                if (!nested) error_at(i_, "unexpected '}'");
                ++i_;
                return out;
            }
            out.push_back(item());
        }
    }

    Item item() {
        Item it;
        it.offset = i_;
        std::size_t depth = 0;
        while (i_ < text_.size()) {
            const char c = text_[i_];
            if (c == '[' || c == '(') ++depth;
            if ((c == ']' || c == ')') && depth > 0) --depth;
            if (depth == 0 && (c == ':' || c == '=' || c == '{')) break;
            if (c == '\n' || c == ';' || c == '}' || c == '#') break;
            ++i_;
        }
        it.head = trim(text_.substr(it.offset, i_ - it.offset));
        if (i_ == text_.size() || (text_[i_] != ':' && text_[i_] != '=' && text_[i_] != '{'))
            error_at(it.offset, "expected ':', '=' or '{' after '" + it.head + "'");
        if (it.head.empty()) error_at(it.offset, "missing key");
        it.kind = text_[i_++];
        if (it.kind == '{') {
            it.children = items(true);
            return it;
        }
        while (i_ < text_.size() && (text_[i_] == ' ' || text_[i_] == '\t')) ++i_;
        it.value_offset = i_;
        while (i_ < text_.size() && text_[i_] != '\n' && text_[i_] != ';' && text_[i_] != '}' && text_[i_] != '#') ++i_;
        it.value = trim(text_.substr(it.value_offset, i_ - it.value_offset));
        return it;
    }

    void skip_separators() {
        while (i_ < text_.size()) {
            const char c = text_[i_];
            if (c == '#') {
                while (i_ < text_.size() && text_[i_] != '\n') ++i_;
            } else if (std::isspace(static_cast<unsigned char>(c)) || c == ';') {
                ++i_;
            } else {
                return;
            }
        }
    }

    static std::string trim(std::string_view s) {
        std::size_t a = 0, b = s.size();
        while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
        while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
        return std::string(s.substr(a, b - a));
    }

    std::string_view text_;
    std::string source_;
    std::size_t i_ = 0;
};

inline std::vector<std::string> split_list(const std::string &s) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, ',')) {
        std::size_t a = 0, b = cur.size();
        while (a < b && std::isspace(static_cast<unsigned char>(cur[a]))) ++a;
        while (b > a && std::isspace(static_cast<unsigned char>(cur[b - 1]))) --b;
        if (a < b) out.push_back(cur.substr(a, b - a));
    }
    return out;
}

/// `name(arg)` → arg, or nullopt.
inline std::optional<std::string> call_argument(const std::string &head, std::string_view name) {
    if (head.size() < name.size() + 2 || head.substr(0, name.size()) != name) return std::nullopt;
    std::string rest = head.substr(name.size());
    std::size_t a = 0;
    while (a < rest.size() && rest[a] == ' ') ++a;
    if (a >= rest.size() || rest[a] != '(' || rest.back() != ')') return std::nullopt;
    auto args = split_list(rest.substr(a + 1, rest.size() - a - 2));
    if (args.size() != 1) return std::nullopt;
    return args[0];
}

/// Elements of Λ²g written as sums of `[coeff][*] a^b` terms.
inline std::vector<std::vector<Rational>> parse_wedge_combination(std::string_view text,
                                                                  const std::vector<std::string> &basis) {
    const std::size_t n = basis.size();
    std::vector<std::vector<Rational>> w(n, std::vector<Rational>(n, Rational(0)));
    TokenStream ts(text);
    auto index = [&](const Token &t) {
        for (std::size_t i = 0; i < n; ++i)
            if (basis[i] == t.text) return i;
        throw UnknownSymbol(t.text);
    };
    if (ts.peek().kind == Tok::number && ts.peek().text == "0" && ts.peek(1).kind == Tok::end) return w;
    bool first = true;
    while (ts.peek().kind != Tok::end) {
        Rational sign = 1;
        if (ts.accept(Tok::minus))
            sign = -1;
        else if (!ts.accept(Tok::plus) && !first)
            throw SyntaxError("expected '+' or '-'", ts.peek().pos);
        first = false;
        Rational coeff = 1;
        if (ts.peek().kind == Tok::number) {
            coeff = parse_rational(ts.next().text);
            ts.accept(Tok::star);
        }
        const Token &a = ts.expect(Tok::ident, "basis element");
        const std::size_t i = index(a);
        ts.expect(Tok::caret, "'^'");
        const Token &b = ts.expect(Tok::ident, "basis element");
        const std::size_t j = index(b);
        if (i == j) throw InvalidInput("e^e vanishes; repeated basis element '" + basis[i] + "'");
        w[i][j] += sign * coeff;
        w[j][i] -= sign * coeff;
    }
    return w;
}

class ProblemBuilder {
  public:
    ProblemBuilder(std::string_view text, std::string source) : reader_(text, source) { pf_.source = std::move(source); }

    ProblemFile build() {
        const auto items = reader_.read();
        const Item *chart_item = nullptr;
        for (const auto &it : items) {
            if (it.head == "chart" || it.head.rfind("chart ", 0) == 0) {
                if (chart_item) reader_.error_at(it.offset, "duplicate chart declaration");
                chart_item = &it;
            }
        }
        if (!chart_item) reader_.error_at(0, "missing 'chart <name>: <coords>' declaration");
        guarded(*chart_item, [&] { read_chart(*chart_item); });

        const Item *bialgebra_item = nullptr;
        for (const auto &it : items) {
            if (&it == chart_item) continue;
            if (it.head == "poisson" && it.kind == ':') {
                set_once(it, pf_.poisson, [&] { return parse_multivector(it.value, pf_.chart, 2); });
            } else if (it.head == "symplectic" && it.kind == ':') {
                set_once(it, pf_.symplectic, [&] { return parse_form(it.value, pf_.chart, 2); });
            } else if (it.head == "bialgebra" && it.kind == '{') {
                if (bialgebra_item) reader_.error_at(it.offset, "duplicate bialgebra block");
                bialgebra_item = &it;
            } else if (it.head == "pgmap" || it.head == "momentum" || it.head == "action" || it.head == "level_set" ||
                       it.head == "expect_comomentum" || it.head == "oracle") {
                if (it.kind != '{') reader_.error_at(it.offset, "'" + it.head + "' must be a { } block");
                if (seen_.count(it.head)) reader_.error_at(it.offset, "duplicate " + it.head + " block");
                seen_.emplace(it.head, &it);
            } else {
                reader_.error_at(it.offset, "unknown entry '" + it.head + "'");
            }
        }
        if (pf_.poisson && pf_.symplectic)
            reader_.error_at(0, "give either 'poisson' or 'symplectic', not both");

        if (bialgebra_item) {
            guarded(*bialgebra_item, [&] { read_bialgebra(*bialgebra_item); });
        } else {
            for (const char *key : {"pgmap", "momentum", "action"}) {
                auto it = seen_.find(key);
                if (it == seen_.end()) continue;
                for (const auto &child : it->second->children) {
                    const auto arg = call_argument(child.head, key_symbol(key));
                    if (arg && std::find(basis_.begin(), basis_.end(), *arg) == basis_.end()) basis_.push_back(*arg);
                }
                break;
            }
        }
        if (!bialgebra_item && !basis_.empty()) pf_.bialgebra = LieBialgebra::abelian(basis_);

        if (auto it = seen_.find("pgmap"); it != seen_.end())
            pf_.pgmap = per_basis<DifferentialForm>(*it->second, "phi", [&](const Item &e) {
                return parse_form(e.value, pf_.chart, 1);
            });
        if (auto it = seen_.find("momentum"); it != seen_.end())
            pf_.momentum = per_basis<Polynomial>(*it->second, "J", [&](const Item &e) {
                return parse_poly(e.value, pf_.chart.coords());
            });
        if (auto it = seen_.find("action"); it != seen_.end())
            pf_.action = per_basis<Multivector>(*it->second, "X", [&](const Item &e) {
                return parse_multivector(e.value, pf_.chart, 1);
            });
        if (auto it = seen_.find("expect_comomentum"); it != seen_.end()) {
            const Chart tm = tangent_chart(pf_.chart).total;
            pf_.expected_comomentum = per_basis<Polynomial>(*it->second, "c", [&](const Item &e) {
                return parse_poly(e.value, tm.coords());
            });
        }
        if (auto it = seen_.find("level_set"); it != seen_.end()) guarded(*it->second, [&] { read_level_set(*it->second); });
        if (auto it = seen_.find("oracle"); it != seen_.end()) read_oracle(*it->second);
        return std::move(pf_);
    }

  private:
    static std::string_view key_symbol(std::string_view key) {
        if (key == "pgmap") return "phi";
        if (key == "momentum") return "J";
        return "X";
    }

    // Rethrows library errors with the item's position.
    template <class F> void guarded(const Item &it, F &&f) {
        try {
            f();
        } catch (const ProblemError &) {
            throw;
        } catch (const SyntaxError &e) {
            reader_.error_at(it.value_offset + e.position, e.what());
        } catch (const Error &e) {
            reader_.error_at(it.kind == '{' ? it.offset : it.value_offset, e.what());
        }
    }

    template <class T, class F> void set_once(const Item &it, std::optional<T> &slot, F &&make) {
        if (slot) reader_.error_at(it.offset, "duplicate '" + it.head + "'");
        guarded(it, [&] { slot = make(); });
    }

    void read_chart(const Item &it) {
        if (it.kind != ':') reader_.error_at(it.offset, "chart is declared as 'chart <name>: <coords>'");
        std::string name = it.head.size() > 5 ? it.head.substr(6) : "M";
        while (!name.empty() && name.front() == ' ') name.erase(name.begin());
        if (name.empty()) name = "M";
        const auto coords = split_list(it.value);
        for (const auto &c : coords) {
            if (c.empty() || !(std::isalpha(static_cast<unsigned char>(c[0])) || c[0] == '_'))
                throw InvalidInput("invalid coordinate name '" + c + "'");
            for (char ch : c)
                if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'))
                    throw InvalidInput("invalid coordinate name '" + c + "'");
        }
        pf_.chart = Chart(name, coords);
        (void)tangent_chart(pf_.chart);
    }

    void read_bialgebra(const Item &block) {
        const Item *basis_item = nullptr;
        for (const auto &c : block.children)
            if (c.head == "basis" && c.kind == ':') basis_item = &c;
        if (!basis_item) reader_.error_at(block.offset, "bialgebra block needs 'basis: ...'");
        basis_ = split_list(basis_item->value);
        if (basis_.empty()) reader_.error_at(basis_item->value_offset, "empty basis");
        const std::size_t n = basis_.size();
        Tensor3 c = zero_tensor3(n), g = zero_tensor3(n);
        for (const auto &child : block.children) {
            if (&child == basis_item) continue;
            if (child.head == "bracket" && child.kind == '{') {
                for (const auto &e : child.children) guarded(e, [&] { read_bracket_entry(e, c); });
            } else if (child.head == "cocycle" && child.kind == '{') {
                for (const auto &e : child.children) guarded(e, [&] { read_cocycle_entry(e, g); });
            } else {
                reader_.error_at(child.offset, "unknown bialgebra entry '" + child.head + "'");
            }
        }
        pf_.bialgebra = LieBialgebra::make(basis_, c, g);
        pf_.explicit_bialgebra = true;
    }

    std::size_t basis_index(const std::string &name) const {
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (basis_[i] == name) return i;
        throw UnknownSymbol(name);
    }

    void read_bracket_entry(const Item &e, Tensor3 &c) {
        if (e.kind != '=' || e.head.size() < 2 || e.head.front() != '[' || e.head.back() != ']')
            throw InvalidInput("bracket entries read '[a,b] = combination'");
        const auto args = split_list(e.head.substr(1, e.head.size() - 2));
        if (args.size() != 2) throw InvalidInput("bracket entries read '[a,b] = combination'");
        const std::size_t i = basis_index(args[0]), j = basis_index(args[1]);
        if (i == j) throw InvalidInput("[a,a] is zero by antisymmetry");
        const Polynomial rhs = parse_poly(e.value, basis_);
        if (rhs.total_degree() > 1 || rhs.constant_term() != 0)
            throw InvalidInput("bracket value must be a linear combination of basis elements");
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            Polynomial::Exponents ek(basis_.size(), 0);
            ek[k] = 1;
            const Rational v = rhs.coefficient(ek);
            c[k][i][j] = v;
            c[k][j][i] = -v;
        }
    }

    void read_cocycle_entry(const Item &e, Tensor3 &g) {
        const auto arg = call_argument(e.head, "d");
        if (e.kind != '=' || !arg) throw InvalidInput("cocycle entries read 'd(a) = sum of coeff b^c'");
        g[basis_index(*arg)] = parse_wedge_combination(e.value, basis_);
    }

    template <class T, class F> std::vector<T> per_basis(const Item &block, std::string_view symbol, F &&parse_value) {
        if (!pf_.bialgebra) reader_.error_at(block.offset, "no basis elements declared");
        std::vector<std::optional<T>> slots(basis_.size());
        for (const auto &e : block.children) {
            const auto arg = call_argument(e.head, symbol);
            if (e.kind != '=' || !arg)
                reader_.error_at(e.offset, "expected '" + std::string(symbol) + "(<basis element>) = ...'");
            guarded(e, [&] {
                const std::size_t i = basis_index(*arg);
                if (slots[i]) throw InvalidInput("duplicate entry for '" + *arg + "'");
                slots[i] = parse_value(e);
            });
        }
        std::vector<T> out;
        for (std::size_t i = 0; i < slots.size(); ++i) {
            if (!slots[i])
                reader_.error_at(block.offset, "'" + block.head + "' has no entry for basis element '" + basis_[i] + "'");
            out.push_back(std::move(*slots[i]));
        }
        return out;
    }

    void read_level_set(const Item &block) {
        const Item *params = nullptr;
        for (const auto &c : block.children)
            if (c.head == "params" && c.kind == ':') params = &c;
        if (!params) throw InvalidInput("level_set block needs 'params: ...'");
        const Chart pchart("level_set", split_list(params->value));
        std::vector<std::optional<Polynomial>> comps(pf_.chart.dim());
        for (const auto &c : block.children) {
            if (&c == params) continue;
            if (c.kind != '=') reader_.error_at(c.offset, "expected '<coordinate> = <polynomial in params>'");
            guarded(c, [&] {
                const auto k = pf_.chart.index_of(c.head);
                if (!k) throw UnknownSymbol(c.head);
                if (comps[*k]) throw InvalidInput("duplicate entry for '" + c.head + "'");
                comps[*k] = parse_poly(c.value, pchart.coords());
            });
        }
        LevelSet ls{pchart, {}};
        for (std::size_t k = 0; k < comps.size(); ++k) {
            if (!comps[k]) throw InvalidInput("level_set gives no value for '" + pf_.chart.coords()[k] + "'");
            ls.components.push_back(*comps[k]);
        }
        pf_.level_set = std::move(ls);
    }

    void read_oracle(const Item &block) {
        for (const auto &c : block.children) {
            if (c.kind != ':') reader_.error_at(c.offset, "oracle entries read 'key: value'");
            guarded(c, [&] {
                if (c.head == "samples") {
                    pf_.oracle.samples = parse_count(c.value);
                } else if (c.head == "seed") {
                    pf_.oracle.seed = parse_seed(c.value);
                } else if (c.head == "fd_step") {
                    const Rational h = parse_rational(c.value);
                    if (h <= 0) throw InvalidInput("fd_step must be positive");
                    pf_.oracle.fd_step = h;
                } else if (c.head == "box") {
                    pf_.oracle.box = parse_interval(c.value);
                } else if (auto coord = call_argument(c.head, "box")) {
                    if (!pf_.chart.index_of(*coord)) throw UnknownSymbol(*coord);
                    pf_.oracle.coordinate_boxes[*coord] = parse_interval(c.value);
                } else {
                    throw InvalidInput("unknown oracle setting '" + c.head + "'");
                }
            });
        }
    }

  public:
    static std::size_t parse_count(const std::string &s) {
        const Rational r = parse_rational(s);
        if (r.get_den() != 1 || r <= 0) throw InvalidInput("sample count must be a positive integer");
        return r.get_num().get_ui();
    }

    static std::uint64_t parse_seed(const std::string &s) {
        if (s.empty() || s.size() > 20 || s.find_first_not_of("0123456789") != std::string::npos)
            throw InvalidInput("seed must be an unsigned 64-bit integer");
        const mpz_class z(s);
        if (z > mpz_class("18446744073709551615")) throw InvalidInput("seed must be an unsigned 64-bit integer");
        return std::stoull(s);
    }

    static Interval parse_interval(const std::string &s) {
        const auto parts = split_list(s);
        if (parts.size() != 2) throw InvalidInput("box reads 'lo, hi'");
        Interval iv{parse_rational(parts[0]), parse_rational(parts[1])};
        if (!(iv.lo < iv.hi)) throw InvalidInput("box interval is empty");
        return iv;
    }

  private:
    BlockReader reader_;
    ProblemFile pf_;
    std::vector<std::string> basis_;
    std::map<std::string, const Item *, std::less<>> seen_;
};

} // namespace detail

inline ProblemFile parse_problem(std::string_view text, std::string source = "<input>") {
    return detail::ProblemBuilder(text, std::move(source)).build();
}

inline ProblemFile load_problem_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open problem file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_problem(ss.str(), path);
}

} // namespace liftred
