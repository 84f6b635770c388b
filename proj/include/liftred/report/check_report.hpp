#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "liftred/chart/literal.hpp"
#include "liftred/expr/polynomial.hpp"

namespace liftred {

enum class Verdict { pass, fail, informative };

inline std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::informative: return "informative";
    }
    return "fail";
}

/// A named residual. `components` keeps the exact polynomials for sampling;
/// it is not part of the serialized form.
struct Residual {
    std::string name;
    std::string text;
    bool zero = true;
    std::vector<Polynomial> components;
};

struct SampleEvidence {
    std::string name;
    double max_abs = 0.0;
};

/// Outcome of one verification. For pass/fail checks the verdict is pass
/// exactly when every residual is identically zero.
struct CheckReport {
    std::string id;
    Verdict verdict = Verdict::pass;
    std::string provenance;
    std::vector<std::string> notes;
    std::vector<Residual> residuals;
    std::vector<SampleEvidence> samples;

    CheckReport() = default;
    CheckReport(std::string check_id, std::string anchor) : id(std::move(check_id)), provenance(std::move(anchor)) {}

    void add_residual(std::string name, const Polynomial &p) {
        residuals.push_back({std::move(name), p.to_string(), p.is_zero(), {p}});
        refresh();
    }

    template <class Kind> void add_residual(std::string name, const AlternatingField<Kind> &t) {
        std::vector<Polynomial> comps;
        for (const auto &[idx, c] : t.components()) comps.push_back(c);
        residuals.push_back({std::move(name), liftred::to_string(t), t.is_zero(), std::move(comps)});
        refresh();
    }

    /// Residual given as named coordinate components; prints only the nonzero ones.
    void add_residual(std::string name, const std::vector<std::string> &labels, const std::vector<Polynomial> &comps) {
        std::string text;
        bool zero = true;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            if (comps[i].is_zero()) continue;
            zero = false;
            if (!text.empty()) text += "; ";
            text += labels.at(i) + ": " + comps[i].to_string();
        }
        residuals.push_back({std::move(name), zero ? "0" : text, zero, comps});
        refresh();
    }

    /// A failure that has no polynomial form, e.g. a numeric threshold miss.
    void add_failure(std::string name, std::string text) {
        residuals.push_back({std::move(name), std::move(text), false, {}});
        refresh();
    }

    void note(std::string text) { notes.push_back(std::move(text)); }

    /// Marks the report informative; its residuals no longer decide the verdict.
    void make_informative() { verdict = Verdict::informative; }

    bool passed() const { return verdict == Verdict::pass; }
    bool failed() const { return verdict == Verdict::fail; }

    std::vector<const Residual *> nonzero_residuals() const {
        std::vector<const Residual *> out;
        for (const auto &r : residuals)
            if (!r.zero) out.push_back(&r);
        return out;
    }

    friend bool operator==(const CheckReport &a, const CheckReport &b) {
        if (a.id != b.id || a.verdict != b.verdict || a.provenance != b.provenance || a.notes != b.notes) return false;
        const auto ra = a.nonzero_residuals(), rb = b.nonzero_residuals();
        if (ra.size() != rb.size()) return false;
        for (std::size_t i = 0; i < ra.size(); ++i)
            if (ra[i]->name != rb[i]->name || ra[i]->text != rb[i]->text) return false;
        if (a.samples.size() != b.samples.size()) return false;
        for (std::size_t i = 0; i < a.samples.size(); ++i)
            if (a.samples[i].name != b.samples[i].name || a.samples[i].max_abs != b.samples[i].max_abs) return false;
        return true;
    }

  private:
    void refresh() {
        if (verdict == Verdict::informative) return;
        verdict = Verdict::pass;
        for (const auto &r : residuals)
            if (!r.zero) verdict = Verdict::fail;
    }
};

} // namespace liftred
