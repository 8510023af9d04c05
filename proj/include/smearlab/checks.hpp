#pragma once

#include <string>
#include <vector>

namespace smearlab {

inline constexpr double kDefaultTolerance = 1e-12;

// Acceptance rule for residuals: exact backends demand a true zero, float
// backends accept anything up to the tolerance.
struct Tolerance {
    bool exact = false;
    double value = kDefaultTolerance;

    bool accepts(double residual) const { return exact ? residual == 0.0 : residual <= value; }
};

struct CheckResult {
    std::string label;
    std::string anchor;  // the identity being tested, written out
    double residual = 0.0;
    bool pass = false;
    // Recorded for information; never affects the overall verdict.
    bool informational = false;
};

class ResidualReport {
public:
    ResidualReport() = default;
    explicit ResidualReport(Tolerance tol) : tol_(tol) {}

    const Tolerance& tolerance() const { return tol_; }
    const std::vector<CheckResult>& checks() const { return checks_; }

    // Records a residual check judged by the report's tolerance.
    void add(std::string label, std::string anchor, double residual) {
        checks_.push_back({std::move(label), std::move(anchor), residual, tol_.accepts(residual), false});
    }
    // Records a check with an externally decided verdict.
    void add_verdict(std::string label, std::string anchor, double residual, bool pass) {
        checks_.push_back({std::move(label), std::move(anchor), residual, pass, false});
    }
    void add_info(std::string label, std::string anchor, double value) {
        checks_.push_back({std::move(label), std::move(anchor), value, true, true});
    }
    void append(const ResidualReport& other, const std::string& prefix = {}) {
        for (auto c : other.checks_) {
            if (!prefix.empty()) c.label = prefix + c.label;
            checks_.push_back(std::move(c));
        }
    }

    bool all_pass() const {
        for (const auto& c : checks_)
            if (!c.informational && !c.pass) return false;
        return true;
    }
    double max_residual() const {
        double m = 0.0;
        for (const auto& c : checks_)
            if (!c.informational && c.residual > m) m = c.residual;
        return m;
    }
    std::size_t failures() const {
        std::size_t n = 0;
        for (const auto& c : checks_)
            if (!c.informational && !c.pass) ++n;
        return n;
    }

private:
    Tolerance tol_;
    std::vector<CheckResult> checks_;
};

}  // namespace smearlab
