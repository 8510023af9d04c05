#include "smearlab/report.hpp"

#include <cmath>
#include <cstdio>

namespace smearlab {

namespace {

// RFC 4180 quoting when the field holds a comma, quote or newline.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

const char* flag(bool b) { return b ? "true" : "false"; }

// JSON has no NaN or infinity.
Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

}  // namespace

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Json check_json(const CheckResult& c) {
    Json j;
    j["label"] = c.label;
    j["anchor"] = c.anchor;
    j["residual"] = number_or_null(c.residual);
    j["pass"] = c.pass;
    j["informational"] = c.informational;
    return j;
}

Json suite_json(const SuiteReport& s, const ReportOptions& opts) {
    Json j;
    j["suite"] = s.name;
    j["backend"] = s.backend;
    j["delta"] = s.delta;
    j["pass"] = s.pass();
    j["max_residual"] = number_or_null(s.report.max_residual());
    j["failures"] = s.report.failures();
    if (opts.timing) j["wall_time"] = s.wall_time;
    Json checks = Json::array();
    for (const auto& c : s.report.checks()) checks.push_back(check_json(c));
    j["checks"] = std::move(checks);
    return j;
}

bool all_pass(const std::vector<SuiteReport>& suites) {
    for (const auto& s : suites)
        if (!s.pass()) return false;
    return true;
}

Json verify_document(Backend backend, double tol, const std::vector<SuiteReport>& suites, const ReportOptions& opts) {
    Json j;
    j["schema"] = kReportSchema;
    j["command"] = "verify";
    j["backend"] = std::string(backend_name(backend));
    j["tolerance"] = tol;
    Json arr = Json::array();
    for (const auto& s : suites) arr.push_back(suite_json(s, opts));
    j["suites"] = std::move(arr);
    j["overall_pass"] = all_pass(suites);
    return j;
}

Json constants_json(const PhysicalConstants& k) {
    Json j;
    j["units"] = "cgs";
    j["G"] = k.raw.G;
    j["c"] = k.raw.c;
    j["hbar"] = k.raw.hbar;
    j["Lambda"] = k.raw.Lambda;
    j["l_pl"] = k.l_pl;
    j["m_pl"] = k.m_pl;
    j["l_ds"] = k.l_ds;
    j["m_ds"] = k.m_ds;
    j["rho_lambda"] = k.rho_lambda;
    j["rho_pl"] = k.rho_pl;
    j["beta"] = k.beta;
    j["delta"] = k.delta;
    return j;
}

Json assemble_report(const PhysicalConstants& k, const std::vector<SuiteReport>& suites, const ReportOptions& opts) {
    const int order = delta_order_of_magnitude(k);
    const bool decade_ok = order >= kDeltaDecadeLow && order <= kDeltaDecadeHigh;
    Json j;
    j["schema"] = kReportSchema;
    j["command"] = "report";
    j["constants"] = constants_json(k);
    j["delta_order_of_magnitude"] = order;
    j["delta_check"] = {{"low", kDeltaDecadeLow}, {"high", kDeltaDecadeHigh}, {"pass", decade_ok}};
    Json arr = Json::array();
    for (const auto& s : suites) arr.push_back(suite_json(s, opts));
    j["suites"] = std::move(arr);
    j["overall_pass"] = decade_ok && all_pass(suites);
    return j;
}

Json curve_json(const BoundCurve& curve) {
    Json j;
    j["schema"] = kReportSchema;
    j["command"] = "curve";
    j["alpha"] = curve.alpha;
    j["eta"] = curve.eta;
    j["hbar"] = curve.hbar;
    const auto min_len = egup_minimum_length(curve.alpha, curve.eta, curve.hbar);
    if (min_len)
        j["minimum_length"] = *min_len;
    else
        j["minimum_length"] = nullptr;
    Json rows = Json::array();
    for (const auto& s : curve.samples) rows.push_back({{"dx", s.dx}, {"dp_bound", number_or_null(s.dp)}, {"feasible", s.feasible}});
    j["samples"] = std::move(rows);
    return j;
}

Json measurement_json(const MeasurementStatistics& stats, const std::string& state, const std::string& delta) {
    Json j;
    j["schema"] = kReportSchema;
    j["command"] = "measure";
    j["state"] = state;
    j["delta"] = delta;
    Json axes = Json::array();
    for (Axis a : stats.axes) axes.push_back(std::string(axis_name(a)));
    j["axes"] = std::move(axes);
    j["shots"] = stats.shots;
    j["seed"] = stats.seed;
    Json steps = Json::array();
    for (const auto& s : stats.steps) {
        Json r;
        r["step"] = s.step;
        r["axis"] = std::string(axis_name(s.axis));
        r["history"] = s.history;
        r["shots"] = s.shots;
        r["up"] = s.up;
        r["frequency"] = s.frequency;
        r["wilson_low"] = s.interval.low;
        r["wilson_high"] = s.interval.high;
        r["analytic"] = s.analytic;
        steps.push_back(std::move(r));
    }
    j["steps"] = std::move(steps);
    return j;
}

std::string suites_csv(const std::vector<SuiteReport>& suites) {
    std::string out = "suite,backend,delta,label,anchor,residual,pass,informational\n";
    for (const auto& s : suites)
        for (const auto& c : s.report.checks()) {
            out += csv_field(s.name) + ',' + csv_field(s.backend) + ',' + csv_field(s.delta) + ',' +
                   csv_field(c.label) + ',' + csv_field(c.anchor) + ',' + format_number(c.residual) + ',' +
                   flag(c.pass) + ',' + flag(c.informational) + '\n';
        }
    return out;
}

std::string curve_csv(const BoundCurve& curve) {
    std::string out = "dx,dp_bound,feasible\n";
    for (const auto& s : curve.samples)
        out += format_number(s.dx) + ',' + format_number(s.dp) + ',' + flag(s.feasible) + '\n';
    return out;
}

std::string measurement_csv(const MeasurementStatistics& stats) {
    std::string out = "step,axis,history,shots,up,frequency,wilson_low,wilson_high,analytic\n";
    for (const auto& s : stats.steps)
        out += std::to_string(s.step) + ',' + std::string(axis_name(s.axis)) + ',' + s.history + ',' +
               std::to_string(s.shots) + ',' + std::to_string(s.up) + ',' + format_number(s.frequency) + ',' +
               format_number(s.interval.low) + ',' + format_number(s.interval.high) + ',' +
               format_number(s.analytic) + '\n';
    return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace smearlab
