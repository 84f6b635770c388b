#pragma once

#include <cctype>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "liftred/errors.hpp"
#include "liftred/report/check_report.hpp"

namespace liftred {

inline constexpr int kReportSchemaVersion = 1;

namespace detail {

inline std::string escape_field(const std::string &s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default: out += c;
        }
    }
    return out;
}

inline std::string unescape_field(const std::string &s, std::size_t line) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '\\') {
            out += s[i];
            continue;
        }
        if (++i == s.size()) throw SyntaxError("dangling escape in report", line);
        switch (s[i]) {
        case '\\': out += '\\'; break;
        case 'n': out += '\n'; break;
        case 't': out += '\t'; break;
        default: throw SyntaxError("unknown escape in report", line);
        }
    }
    return out;
}

inline std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace detail

/// Line-oriented report records:
///   liftred-report 1
///   begin <id> / verdict / provenance / note* / residual name<TAB>text* / sample name<TAB>value* / end
/// Only nonzero residuals are written.
inline std::string emit_reports(const std::vector<CheckReport> &reports) {
    using detail::escape_field;
    std::ostringstream os;
    os << "liftred-report " << kReportSchemaVersion << '\n';
    for (const auto &r : reports) {
        os << "begin " << escape_field(r.id) << '\n';
        os << "verdict " << to_string(r.verdict) << '\n';
        os << "provenance " << escape_field(r.provenance) << '\n';
        for (const auto &n : r.notes) os << "note " << escape_field(n) << '\n';
        for (const auto *res : r.nonzero_residuals())
            os << "residual " << escape_field(res->name) << '\t' << escape_field(res->text) << '\n';
        for (const auto &s : r.samples)
            os << "sample " << escape_field(s.name) << '\t' << detail::format_double(s.max_abs) << '\n';
        os << "end\n";
    }
    return os.str();
}

inline std::vector<CheckReport> parse_reports(const std::string &text) {
    using detail::unescape_field;
    std::istringstream is(text);
    std::string line;
    std::size_t n = 0;
    auto fail = [&](const std::string &msg) { throw SyntaxError("report line " + std::to_string(n) + ": " + msg, n); };
    if (!std::getline(is, line)) fail("empty report");
    ++n;
    if (line != "liftred-report " + std::to_string(kReportSchemaVersion)) fail("unsupported schema header");

    std::vector<CheckReport> out;
    CheckReport *cur = nullptr;
    while (std::getline(is, line)) {
        ++n;
        if (line.empty()) continue;
        const auto sp = line.find(' ');
        const std::string key = line.substr(0, sp);
        const std::string rest = sp == std::string::npos ? "" : line.substr(sp + 1);
        if (key == "begin") {
            if (cur) fail("nested begin");
            out.emplace_back();
            cur = &out.back();
            cur->id = unescape_field(rest, n);
            continue;
        }
        if (!cur) fail("record outside begin/end");
        if (key == "end") {
            cur = nullptr;
        } else if (key == "verdict") {
            if (rest == "pass") cur->verdict = Verdict::pass;
            else if (rest == "fail") cur->verdict = Verdict::fail;
            else if (rest == "informative") cur->verdict = Verdict::informative;
            else fail("unknown verdict '" + rest + "'");
        } else if (key == "provenance") {
            cur->provenance = unescape_field(rest, n);
        } else if (key == "note") {
            cur->notes.push_back(unescape_field(rest, n));
        } else if (key == "residual" || key == "sample") {
            const auto tab = rest.find('\t');
            if (tab == std::string::npos) fail("missing tab separator");
            const std::string name = unescape_field(rest.substr(0, tab), n);
            const std::string value = rest.substr(tab + 1);
            if (key == "residual") {
                cur->residuals.push_back({name, unescape_field(value, n), false, {}});
            } else {
                try {
                    std::size_t used = 0;
                    const double d = std::stod(value, &used);
                    if (used != value.size()) fail("malformed sample value");
                    cur->samples.push_back({name, d});
                } catch (const std::logic_error &) {
                    fail("malformed sample value");
                }
            }
        } else {
            fail("unknown record '" + key + "'");
        }
    }
    if (cur) fail("missing end");
    return out;
}

/// Human-readable rendering; verdicts match the structured form.
inline std::string render_text(const CheckReport &r) {
    std::string verdict(to_string(r.verdict));
    for (auto &c : verdict) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    std::string out = "[" + verdict + "] " + r.id + "  (" + r.provenance + ")\n";
    for (const auto *res : r.nonzero_residuals()) out += "    residual " + res->name + " = " + res->text + "\n";
    for (const auto &s : r.samples)
        if (s.max_abs != 0.0) out += "    sampled |" + s.name + "| max " + detail::format_double(s.max_abs) + "\n";
    for (const auto &n : r.notes) out += "    note: " + n + "\n";
    return out;
}

} // namespace liftred
