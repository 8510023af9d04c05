#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "smearlab/checks.hpp"
#include "smearlab/scalar.hpp"

namespace smearlab {

enum class Backend { floating, exact };

std::string_view backend_name(Backend b);
// "float" or "exact"; throws ConfigError otherwise.
Backend parse_backend(std::string_view text);

// One named group of checks at one δ.
struct SuiteReport {
    std::string name;
    std::string backend;
    std::string delta;  // as given on input
    ResidualReport report;
    double wall_time = 0;  // seconds

    bool pass() const { return report.all_pass(); }
};

// Validates a δ literal for the backend. Float accepts any finite value
// ≥ 0; exact additionally needs a rational square. Throws ConfigError.
double parse_float_delta(std::string_view text);
Rational parse_exact_delta(std::string_view text);

// Every algebra, fixture, eigen, braket, flip, two-particle, Bell and SU(2)
// suite at one δ, plus the canonical-limit suite when δ = 0.
std::vector<SuiteReport> run_suites_at(Backend backend, std::string_view delta, double tol = kDefaultTolerance);

// run_suites_at over several δ, concurrently up to `threads` workers
// (0: default_thread_count()). The result keeps the input order.
std::vector<SuiteReport> run_verify(Backend backend, const std::vector<std::string>& deltas,
                                    double tol = kDefaultTolerance, unsigned threads = 0);

// At δ = 0 every smeared operator against its canonical counterpart on the
// matter factor, and the smeared Bell states against the canonical ones.
template <Scalar T>
ResidualReport verify_canonical_limit(Tolerance tol);

// Phase-space checks in test units: convolution widths against the
// quadrature sums, the derived δ decade, and the α = η = 0 hyperbola.
SuiteReport run_phase_space_suite(double tol = kDefaultTolerance);

}  // namespace smearlab
