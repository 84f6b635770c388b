#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "liftred/chart/chart.hpp"
#include "liftred/errors.hpp"
#include "liftred/expr/polynomial.hpp"

namespace liftred {

/// Strictly increasing list of coordinate positions.
using MultiIndex = std::vector<std::size_t>;

struct FormKind {
    static constexpr const char *name = "form";
};
struct VectorKind {
    static constexpr const char *name = "multivector";
};

/// Sorts `idx` in place and returns the permutation sign, or 0 on a repeated index.
inline int sort_with_sign(MultiIndex &idx) {
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i) {
        for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
            if (idx[j - 1] == idx[j]) return 0;
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
        }
    }
    for (std::size_t i = 1; i < idx.size(); ++i)
        if (idx[i - 1] == idx[i]) return 0;
    return sign;
}

/// Totally antisymmetric tensor field of fixed degree on a chart, with
/// polynomial components keyed by strictly increasing multi-indices.
/// `Kind` separates differential forms from multivector fields.
template <class Kind> class AlternatingField {
  public:
    using Components = std::map<MultiIndex, Polynomial>;

    AlternatingField() = default;
    AlternatingField(Chart chart, std::size_t degree) : chart_(std::move(chart)), degree_(degree) {}

    /// Degree-0 field holding `f`.
    static AlternatingField function(const Chart &chart, const Polynomial &f) {
        AlternatingField out(chart, 0);
        out.add(MultiIndex{}, f);
        return out;
    }

    /// `coeff` times the wedge of the basis elements listed in `idx` (any order).
    static AlternatingField basis(const Chart &chart, MultiIndex idx, const Polynomial &coeff) {
        AlternatingField out(chart, idx.size());
        out.add(std::move(idx), coeff);
        return out;
    }

    /// Adds `coeff` on the basis element `idx`, given in any order.
    void add(MultiIndex idx, const Polynomial &coeff) {
        if (idx.size() != degree_) throw DegreeError("index length does not match tensor degree");
        for (auto i : idx)
            if (i >= chart_.dim()) throw DimensionMismatch("index out of range for chart '" + chart_.name() + "'");
        const int sign = sort_with_sign(idx);
        if (sign == 0 || coeff.is_zero()) return;
        Polynomial c = chart_.function(coeff);
        if (sign < 0) c = -c;
        auto it = components_.find(idx);
        if (it == components_.end()) {
            components_.emplace(std::move(idx), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) components_.erase(it);
        }
    }

    const Chart &chart() const { return chart_; }
    std::size_t degree() const { return degree_; }
    const Components &components() const { return components_; }
    bool is_zero() const { return components_.empty(); }

    /// Component on a strictly increasing index (zero when absent).
    Polynomial component(const MultiIndex &idx) const {
        auto it = components_.find(idx);
        return it == components_.end() ? chart_.zero() : it->second;
    }

    /// Coefficient of the basis element `idx` in any order, with the permutation sign.
    Polynomial at(MultiIndex idx) const {
        const int sign = sort_with_sign(idx);
        if (sign == 0) return chart_.zero();
        Polynomial c = component(idx);
        return sign < 0 ? -c : c;
    }

    /// The function of a degree-0 field.
    Polynomial scalar() const {
        if (degree_ != 0) throw DegreeError("scalar() on a field of degree " + std::to_string(degree_));
        return component({});
    }

    template <class F> AlternatingField map_coefficients(F &&f) const {
        AlternatingField out(chart_, degree_);
        for (const auto &[idx, c] : components_) out.add(idx, f(c));
        return out;
    }

    AlternatingField operator-() const {
        return map_coefficients([](const Polynomial &c) { return -c; });
    }

    friend AlternatingField operator+(const AlternatingField &a, const AlternatingField &b) {
        check_compatible(a, b);
        AlternatingField out = a;
        for (const auto &[idx, c] : b.components_) out.add(idx, c);
        return out;
    }
    friend AlternatingField operator-(const AlternatingField &a, const AlternatingField &b) {
        check_compatible(a, b);
        AlternatingField out = a;
        for (const auto &[idx, c] : b.components_) out.add(idx, -c);
        return out;
    }
    AlternatingField &operator+=(const AlternatingField &b) { return *this = *this + b; }
    AlternatingField &operator-=(const AlternatingField &b) { return *this = *this - b; }

    friend AlternatingField operator*(const Polynomial &f, const AlternatingField &a) {
        const Polynomial g = a.chart_.function(f);
        return a.map_coefficients([&](const Polynomial &c) { return g * c; });
    }
    friend AlternatingField operator*(const Rational &s, const AlternatingField &a) {
        return a.map_coefficients([&](const Polynomial &c) { return c * s; });
    }

    friend bool operator==(const AlternatingField &a, const AlternatingField &b) {
        return a.chart_ == b.chart_ && a.degree_ == b.degree_ && a.components_ == b.components_;
    }

  private:
    static void check_compatible(const AlternatingField &a, const AlternatingField &b) {
        require_same_chart(a.chart_, b.chart_, "tensor arithmetic");
        if (a.degree_ != b.degree_)
            throw DegreeError("cannot add fields of degree " + std::to_string(a.degree_) + " and " +
                              std::to_string(b.degree_));
    }

    Chart chart_;
    std::size_t degree_ = 0;
    Components components_;
};

using DifferentialForm = AlternatingField<FormKind>;
using Multivector = AlternatingField<VectorKind>;

/// dx^i on `chart`.
inline DifferentialForm coordinate_differential(const Chart &chart, std::size_t i) {
    return DifferentialForm::basis(chart, {i}, chart.constant(1));
}

/// The coordinate vector field for position i.
inline Multivector coordinate_vector(const Chart &chart, std::size_t i) {
    return Multivector::basis(chart, {i}, chart.constant(1));
}

/// Builds a vector field from its n components.
inline Multivector vector_field(const Chart &chart, const std::vector<Polynomial> &comps) {
    if (comps.size() != chart.dim()) throw DimensionMismatch("vector field needs one component per coordinate");
    Multivector out(chart, 1);
    for (std::size_t i = 0; i < comps.size(); ++i) out.add({i}, comps[i]);
    return out;
}

/// Builds a 1-form from its n components.
inline DifferentialForm one_form(const Chart &chart, const std::vector<Polynomial> &comps) {
    if (comps.size() != chart.dim()) throw DimensionMismatch("1-form needs one component per coordinate");
    DifferentialForm out(chart, 1);
    for (std::size_t i = 0; i < comps.size(); ++i) out.add({i}, comps[i]);
    return out;
}

} // namespace liftred
