#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "liftred/chart/tensor.hpp"
#include "liftred/report/check_report.hpp"

namespace liftred {

struct Interval {
    Rational lo = -2;
    Rational hi = 2;
};

/// Deterministic stream of rational sample points.
struct SamplePlan {
    std::size_t count = 100;
    std::uint64_t seed = 20160425;
    Interval box;
    std::map<std::string, Interval, std::less<>> overrides;

    void validate() const {
        if (count == 0) throw InvalidInput("sample count must be positive");
        if (!(box.lo < box.hi)) throw InvalidInput("sample box is empty");
        for (const auto &[name, iv] : overrides)
            if (!(iv.lo < iv.hi)) throw InvalidInput("sample box for '" + name + "' is empty");
    }

    const Interval &interval(const std::string &var) const {
        auto it = overrides.find(var);
        return it != overrides.end() ? it->second : box;
    }

    /// Points over `vars`. Each coordinate is lo + (hi − lo)·k/2^20 with k
    /// taken from the top bits of a seeded mt19937_64.
    std::vector<Polynomial::Assignment> points(const std::vector<std::string> &vars) const {
        validate();
        std::mt19937_64 rng(seed);
        const Rational scale(mpz_class(1), mpz_class(1) << 20);
        std::vector<Polynomial::Assignment> out(count);
        for (auto &p : out) {
            for (const auto &v : vars) {
                const Interval &iv = interval(v);
                const Rational k(mpz_class(static_cast<unsigned long>(rng() >> 44)));
                Rational x = iv.lo + (iv.hi - iv.lo) * k * scale;
                x.canonicalize();
                p.emplace(v, std::move(x));
            }
        }
        return out;
    }
};

/// Stored components evaluated exactly, then converted to double.
template <class Kind>
std::map<MultiIndex, double> eval_tensor(const AlternatingField<Kind> &t, const Polynomial::Assignment &point) {
    std::map<MultiIndex, double> out;
    for (const auto &[idx, c] : t.components()) out.emplace(idx, to_double(c.evaluate(point)));
    return out;
}

/// Max over variables of |fd − ∂f| / max(|∂f|, 1), fd the central difference
/// of step h computed from exact values converted to double.
inline double fd_derivative_check(const Polynomial &f, const Polynomial::Assignment &point, const Rational &h) {
    if (h <= 0) throw InvalidInput("finite-difference step must be positive");
    const double hd = to_double(h);
    double worst = 0.0;
    for (const auto &v : f.variables()) {
        auto plus = point, minus = point;
        auto ip = plus.find(v), im = minus.find(v);
        if (ip == plus.end()) throw MissingAssignment(v);
        ip->second += h;
        im->second -= h;
        const double fd = (to_double(f.evaluate(plus)) - to_double(f.evaluate(minus))) / (2.0 * hd);
        const double sym = to_double(f.derivative(v).evaluate(point));
        worst = std::max(worst, std::abs(fd - sym) / std::max(std::abs(sym), 1.0));
    }
    return worst;
}

inline Rational default_fd_step() { return Rational(mpz_class(1), mpz_class(1000000)); }

inline double sample_residual(const Polynomial &p, const SamplePlan &plan) {
    if (p.is_zero()) return 0.0;
    double worst = 0.0;
    for (const auto &pt : plan.points(p.variables())) worst = std::max(worst, std::abs(to_double(p.evaluate(pt))));
    return worst;
}

template <class Kind> double sample_residual(const AlternatingField<Kind> &t, const SamplePlan &plan) {
    double worst = 0.0;
    for (const auto &[idx, c] : t.components()) worst = std::max(worst, sample_residual(c, plan));
    return worst;
}

inline double sample_residual(const Residual &r, const SamplePlan &plan) {
    double worst = 0.0;
    for (const auto &c : r.components) worst = std::max(worst, sample_residual(c, plan));
    return worst;
}

/// Appends one sample line per polynomial residual. Exactly zero residuals
/// sample to 0; failures recorded only as text are skipped.
inline void attach_sample_evidence(CheckReport &report, const SamplePlan &plan) {
    for (const auto &r : report.residuals) {
        if (!r.zero && r.components.empty()) continue;
        report.samples.push_back({r.name, sample_residual(r, plan)});
    }
}

} // namespace liftred
