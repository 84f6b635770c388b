#pragma once

#include <string>
#include <vector>

#include "liftred/chart/chart.hpp"

namespace liftred {

/// Chart (q, v) on TM built from a base chart (q); fiber coordinates are `v_<q>`.
struct TangentChart {
    Chart base;
    Chart total;

    std::size_t dim() const { return base.dim(); }
    /// Position of v^i in the total chart.
    std::size_t fiber_index(std::size_t i) const { return base.dim() + i; }
    const std::string &fiber_of(std::size_t i) const { return total.coords()[fiber_index(i)]; }
    std::vector<std::string> fiber_names() const {
        return {total.coords().begin() + static_cast<std::ptrdiff_t>(base.dim()), total.coords().end()};
    }
};

inline TangentChart tangent_chart(const Chart &base) {
    std::vector<std::string> coords = base.coords();
    for (const auto &c : base.coords()) {
        if (c.rfind("v_", 0) == 0)
            throw NameCollision("base coordinate '" + c + "' uses the reserved fiber prefix v_");
        coords.push_back("v_" + c);
    }
    return {base, Chart("T" + base.name(), std::move(coords))};
}

/// Coordinate charts of the bundles over M that the tangent-lift identities
/// move between. Block orders:
///   T*M  (q, p)           p_<q>
///   TT*M (q, p, q̇, ṗ)     p_<q>, qdot_<q>, pdot_<q>
///   T*TM (q, v, a, b)     v_<q>, a_<q>, b_<q>; a dual to dq, b dual to dv
///   TTM  (q, v, q̇, v̇)     v_<q>, qdot_<q>, vdot_<q>
struct BundleCharts {
    TangentChart tm;
    Chart cotangent;
    Chart tt_star;
    Chart t_star_t;
    Chart tt;
};

inline BundleCharts bundle_charts(const TangentChart &tc) {
    auto block = [&](const std::string &prefix) {
        std::vector<std::string> out;
        for (const auto &c : tc.base.coords()) out.push_back(prefix + c);
        return out;
    };
    auto cat = [](std::initializer_list<std::vector<std::string>> parts) {
        std::vector<std::string> out;
        for (const auto &p : parts) out.insert(out.end(), p.begin(), p.end());
        return out;
    };
    const auto q = tc.base.coords();
    const std::string &n = tc.base.name();
    return BundleCharts{
        tc,
        Chart("T*" + n, cat({q, block("p_")})),
        Chart("TT*" + n, cat({q, block("p_"), block("qdot_"), block("pdot_")})),
        Chart("T*T" + n, cat({q, block("v_"), block("a_"), block("b_")})),
        Chart("TT" + n, cat({q, block("v_"), block("qdot_"), block("vdot_")})),
    };
}

} // namespace liftred
