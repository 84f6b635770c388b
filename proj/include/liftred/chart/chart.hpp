#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "liftred/errors.hpp"
#include "liftred/expr/polynomial.hpp"

namespace liftred {

/// A single coordinate chart of R^n: a name and distinct coordinate symbols.
/// Copies share the underlying data.
class Chart {
  public:
    Chart() : Chart("", {}) {}
    Chart(std::string name, std::vector<std::string> coords)
        : d_(std::make_shared<const Data>(Data{std::move(name), std::move(coords)})) {
        std::set<std::string> seen;
        for (const auto &c : d_->coords) {
            if (c.empty()) throw InvalidInput("empty coordinate name");
            if (!seen.insert(c).second) throw NameCollision("duplicate coordinate '" + c + "'");
        }
    }

    const std::string &name() const { return d_->name; }
    const std::vector<std::string> &coords() const { return d_->coords; }
    std::size_t dim() const { return d_->coords.size(); }

    std::optional<std::size_t> index_of(std::string_view coord) const {
        for (std::size_t i = 0; i < d_->coords.size(); ++i)
            if (d_->coords[i] == coord) return i;
        return std::nullopt;
    }

    Polynomial zero() const { return Polynomial(coords()); }
    Polynomial constant(const Rational &c) const { return Polynomial::constant(c, coords()); }
    Polynomial coordinate(std::size_t i) const { return Polynomial::variable(coords().at(i), coords()); }

    /// Re-expresses `p` over this chart's coordinates (UnknownSymbol if it uses others).
    Polynomial function(const Polynomial &p) const { return p.embed(coords()); }

    friend bool operator==(const Chart &a, const Chart &b) {
        return a.d_ == b.d_ || (a.d_->name == b.d_->name && a.d_->coords == b.d_->coords);
    }

  private:
    struct Data {
        std::string name;
        std::vector<std::string> coords;
    };
    std::shared_ptr<const Data> d_;
};

inline void require_same_chart(const Chart &a, const Chart &b, std::string_view op) {
    if (!(a == b))
        throw ChartMismatch(std::string(op) + ": charts '" + a.name() + "' and '" + b.name() + "' differ");
}

} // namespace liftred
