#pragma once

#include <map>
#include <string>
#include <vector>

#include "liftred/chart/chart.hpp"
#include "liftred/errors.hpp"

namespace liftred {

/// Polynomial map between charts: one component per target coordinate,
/// written in source coordinates.
class CoordinateMap {
  public:
    CoordinateMap(Chart source, Chart target, std::vector<Polynomial> components)
        : source_(std::move(source)), target_(std::move(target)) {
        if (components.size() != target_.dim())
            throw DimensionMismatch("coordinate map needs one component per target coordinate");
        components_.reserve(components.size());
        for (const auto &c : components) components_.push_back(source_.function(c));
    }

    static CoordinateMap identity(const Chart &chart) {
        std::vector<Polynomial> comps;
        for (std::size_t i = 0; i < chart.dim(); ++i) comps.push_back(chart.coordinate(i));
        return CoordinateMap(chart, chart, std::move(comps));
    }

    const Chart &source() const { return source_; }
    const Chart &target() const { return target_; }
    const std::vector<Polynomial> &components() const { return components_; }

    /// Pulls a polynomial on the target chart back to the source chart.
    Polynomial pullback(const Polynomial &f) const {
        std::map<std::string, Polynomial, std::less<>> subs;
        for (std::size_t i = 0; i < target_.dim(); ++i) subs.emplace(target_.coords()[i], components_[i]);
        return source_.function(target_.function(f).compose(subs));
    }

    friend bool operator==(const CoordinateMap &a, const CoordinateMap &b) {
        return a.source_ == b.source_ && a.target_ == b.target_ && a.components_ == b.components_;
    }

  private:
    Chart source_;
    Chart target_;
    std::vector<Polynomial> components_;
};

/// g ∘ f.
inline CoordinateMap compose(const CoordinateMap &g, const CoordinateMap &f) {
    require_same_chart(f.target(), g.source(), "compose");
    std::vector<Polynomial> comps;
    comps.reserve(g.target().dim());
    for (const auto &c : g.components()) comps.push_back(f.pullback(c));
    return CoordinateMap(f.source(), g.target(), std::move(comps));
}

/// Tangent map TF: (x, ẋ) ↦ (F(x), DF(x)·ẋ). `tsource` and `ttarget` list the
/// source (target) coordinates followed by their velocity coordinates.
inline CoordinateMap tangent_map(const CoordinateMap &f, const Chart &tsource, const Chart &ttarget) {
    const std::size_t n = f.source().dim(), m = f.target().dim();
    if (tsource.dim() != 2 * n || ttarget.dim() != 2 * m)
        throw DimensionMismatch("tangent charts must double the dimension");
    for (std::size_t i = 0; i < n; ++i)
        if (tsource.coords()[i] != f.source().coords()[i]) throw ChartMismatch("tangent source chart does not extend the source");
    for (std::size_t i = 0; i < m; ++i)
        if (ttarget.coords()[i] != f.target().coords()[i]) throw ChartMismatch("tangent target chart does not extend the target");
    std::vector<Polynomial> comps(2 * m);
    for (std::size_t j = 0; j < m; ++j) {
        const Polynomial fj = tsource.function(f.components()[j]);
        comps[j] = fj;
        Polynomial v = tsource.zero();
        for (std::size_t k = 0; k < n; ++k) v += fj.derivative(tsource.coords()[k]) * tsource.coordinate(n + k);
        comps[m + j] = v;
    }
    return CoordinateMap(tsource, ttarget, std::move(comps));
}

} // namespace liftred
