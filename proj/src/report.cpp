#include "convav/report.hpp"

#include <cmath>
#include <cstdio>

namespace convav {

std::string format_double15(double v) {
    if (std::isnan(v)) return "null";
    if (std::isinf(v)) return v > 0 ? "1e9999" : "-1e9999";  // never expected in reports
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

namespace {

void append_kv(std::string& out, const char* key, const std::string& val, bool first = false) {
    if (!first) out += ',';
    out += '"';
    out += key;
    out += "\":";
    out += val;
}

std::string quoted(const std::string& s) { return '"' + json_escape(s) + '"'; }

std::string complex_obj(const std::complex<double>& z) {
    return "{\"re\":" + format_double15(z.real()) + ",\"im\":" + format_double15(z.imag()) + "}";
}

std::string named_doubles(const std::vector<std::pair<std::string, double>>& kv) {
    std::string out = "{";
    bool first = true;
    for (const auto& [k, v] : kv) {
        if (!first) out += ',';
        out += quoted(k) + ":" + format_double15(v);
        first = false;
    }
    out += '}';
    return out;
}

}  // namespace

VerificationReport make_report(std::string identity,
                               std::vector<std::pair<std::string, double>> params, double lhs,
                               double rhs, double tol, long panels, std::string notes) {
    VerificationReport r;
    r.identity = std::move(identity);
    r.params = std::move(params);
    r.lhs = lhs;
    r.rhs = rhs;
    r.abs_err = std::abs(lhs - rhs);
    r.rel_err = r.abs_err / std::max({std::abs(lhs), std::abs(rhs), 1.0});
    r.pass = r.rel_err <= tol;
    r.quadrature_panels = panels;
    r.notes = std::move(notes);
    return r;
}

std::string to_json(const VerificationReport& r) {
    std::string out = "{";
    append_kv(out, "identity", quoted(r.identity), true);
    append_kv(out, "params", named_doubles(r.params));
    append_kv(out, "lhs", format_double15(r.lhs));
    append_kv(out, "rhs", format_double15(r.rhs));
    append_kv(out, "abs_err", format_double15(r.abs_err));
    append_kv(out, "rel_err", format_double15(r.rel_err));
    append_kv(out, "pass", r.pass ? "true" : "false");
    append_kv(out, "quadrature_panels", std::to_string(r.quadrature_panels));
    if (!r.notes.empty()) append_kv(out, "notes", quoted(r.notes));
    out += '}';
    return out;
}

std::string to_json(const ExplicitTerms& t) {
    std::string out = "{";
    append_kv(out, "formula", quoted(t.formula), true);
    append_kv(out, "M0", complex_obj(t.m0));
    append_kv(out, "M1", complex_obj(t.m1));
    append_kv(out, "M2", complex_obj(t.m2));
    if (!t.extra.empty()) {
        std::string extra = "{";
        bool first = true;
        for (const auto& [k, v] : t.extra) {
            if (!first) extra += ',';
            extra += quoted(k) + ":" + complex_obj(v);
            first = false;
        }
        extra += '}';
        append_kv(out, "extra", extra);
    }
    append_kv(out, "combined", complex_obj(t.combined));
    if (t.has_exact) {
        append_kv(out, "exact", format_double15(t.exact));
        append_kv(out, "residual", format_double15(t.residual));
    }
    append_kv(out, "K", std::to_string(t.truncation_K));
    if (t.n_max > 0) append_kv(out, "n_max", std::to_string(t.n_max));
    if (!t.diagnostics.empty()) append_kv(out, "diagnostics", named_doubles(t.diagnostics));
    out += '}';
    return out;
}

std::string to_json(const SeriesComparison& s) {
    std::string out = "{";
    append_kv(out, "formula", quoted(s.formula), true);
    append_kv(out, "exact_partial", complex_obj(s.exact_partial));
    append_kv(out, "explicit_value", complex_obj(s.explicit_value));
    if (s.has_second_route) append_kv(out, "integral_route", complex_obj(s.second_route));
    append_kv(out, "N", std::to_string(s.n_terms));
    append_kv(out, "K", std::to_string(s.truncation_K));
    append_kv(out, "residual", format_double15(s.residual));
    append_kv(out, "near_pole", s.near_pole ? "true" : "false");
    if (!s.diagnostics.empty()) append_kv(out, "diagnostics", named_doubles(s.diagnostics));
    out += '}';
    return out;
}

}  // namespace convav
