#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "smearlab/measurement_stats.hpp"
#include "smearlab/phase_space.hpp"
#include "smearlab/suites.hpp"

namespace smearlab {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "smearlab-report/1";
inline constexpr int kDeltaDecadeLow = -62;
inline constexpr int kDeltaDecadeHigh = -60;

struct ReportOptions {
    bool timing = false;  // emit wall_time fields (not byte-reproducible)
};

// %.17g; "nan", "inf" and "-inf" for non-finite values.
std::string format_number(double v);

Json check_json(const CheckResult& c);
Json suite_json(const SuiteReport& s, const ReportOptions& opts = {});
bool all_pass(const std::vector<SuiteReport>& suites);

// {"schema", "command": "verify", "backend", "tolerance", "suites", "overall_pass"}.
Json verify_document(Backend backend, double tol, const std::vector<SuiteReport>& suites,
                     const ReportOptions& opts = {});

Json constants_json(const PhysicalConstants& k);

// Constants, the δ decade check, and every suite. overall_pass requires the
// decade check and every suite to pass.
Json assemble_report(const PhysicalConstants& k, const std::vector<SuiteReport>& suites,
                     const ReportOptions& opts = {});

Json curve_json(const BoundCurve& curve);
Json measurement_json(const MeasurementStatistics& stats, const std::string& state, const std::string& delta);

// One row per check: suite,backend,delta,label,anchor,residual,pass,informational.
std::string suites_csv(const std::vector<SuiteReport>& suites);
// dx,dp_bound,feasible
std::string curve_csv(const BoundCurve& curve);
// step,axis,history,shots,up,frequency,wilson_low,wilson_high,analytic
std::string measurement_csv(const MeasurementStatistics& stats);

// Serialized JSON with two-space indentation and a trailing newline.
std::string dump(const Json& j);

}  // namespace smearlab
