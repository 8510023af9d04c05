#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace smearlab {

// Raw inputs in cgs units.
struct RawConstants {
    double G = 6.67430e-8;         // cm³ g⁻¹ s⁻²
    double c = 2.99792458e10;      // cm s⁻¹
    double hbar = 1.054571817e-27;  // erg s
    double Lambda = 1e-56;         // cm⁻²
};

struct PhysicalConstants {
    RawConstants raw;
    double l_pl = 0;        // √(ħG/c³)
    double m_pl = 0;        // √(ħc/G)
    double l_ds = 0;        // √(3/Λ)
    double m_ds = 0;        // (ħ/c)√(Λ/3)
    double rho_lambda = 0;  // Λc²/(8πG)
    double rho_pl = 0;      // m_Pl/l_Pl³
    double beta = 0;        // 2ħ√(ρ_Λ/ρ_Pl)
    double delta = 0;       // β/ħ
};

// Throws DomainError unless every input is positive and finite.
PhysicalConstants derive_constants(const RawConstants& raw = {});

// round(log10 δ).
int delta_order_of_magnitude(const PhysicalConstants& k);

// √(a² + b²) for nonnegative widths; throws DomainError otherwise.
double smeared_width(double intrinsic, double smearing);

// Gaussian matter wavefunction of position width σ_ψ (momentum width
// ħ/(2σ_ψ)) smeared by a Gaussian of width σ_g, whose momentum width is
// σ̃_g = β/(2σ_g).
struct GaussianSmearedState {
    double sigma_psi = 1;
    double sigma_g = 1;
    double hbar = 1;
    double beta = 1;

    double sigma_psi_momentum() const { return hbar / (2 * sigma_psi); }
    double sigma_g_tilde() const { return beta / (2 * sigma_g); }
};

struct SmearedUncertainties {
    double dx = 0;  // √(σ_ψ² + σ_g²)
    double dp = 0;  // √((ħ/2σ_ψ)² + σ̃_g²)
};

// Throws DomainError unless σ_ψ, ħ, β > 0 and σ_g ≥ 0; σ_g = 0 is the
// unsmeared limit with σ̃_g taken as 0.
SmearedUncertainties smeared_uncertainties(const GaussianSmearedState& s);

struct ConvolutionGrid {
    double half_width = 0;  // the grid spans [−half_width, half_width]
    std::size_t points = 4096;

    // ±12 times the wider of the two widths.
    static ConvolutionGrid for_widths(double a, double b, std::size_t points = 4096);
    double spacing() const { return 2 * half_width / static_cast<double>(points - 1); }
};

inline constexpr double kMinPointsPerSigma = 8.0;

// Standard deviation of the discrete convolution of two centred Gaussian
// densities sampled on the grid. Throws UnderResolvedGridError when the
// smaller width has fewer than kMinPointsPerSigma samples per σ. Work is
// split over output points across up to `threads` workers (0: the
// SMEARLAB_THREADS cap or hardware concurrency); each output is summed in a
// fixed order, so the result does not depend on the thread count.
double convolved_sigma(double sigma_a, double sigma_b, const ConvolutionGrid& grid, unsigned threads = 0);

struct ConvolutionCheck {
    double dx_numeric = 0;
    double dx_analytic = 0;
    double dx_relative_error = 0;
    double dp_numeric = 0;
    double dp_analytic = 0;
    double dp_relative_error = 0;
};

// Position and momentum checks, each on its own 4096-point grid sized by
// ConvolutionGrid::for_widths.
ConvolutionCheck convolution_check(const GaussianSmearedState& s, std::size_t points = 4096, unsigned threads = 0);

// Worker count from SMEARLAB_THREADS, else hardware concurrency (at least 1).
unsigned default_thread_count();

struct BoundSample {
    double dx = 0;
    double dp = 0;  // smaller positive root; NaN when infeasible
    bool feasible = false;
};

struct BoundCurve {
    double alpha = 0;
    double eta = 0;
    double hbar = 1;
    std::vector<BoundSample> samples;
};

// For each Δx solves Δx·Δp = (ħ/2)(1 + αΔx² + ηΔp²) for the smaller
// positive Δp. With D = Δx² − ħ²η(1 + αΔx²) the root is
// ħ(1 + αΔx²)/(Δx + √D), which stays accurate as η → 0. Samples with D < 0
// are flagged infeasible. Throws DomainError for α < 0, η < 0, ħ ≤ 0 or a
// nonpositive Δx.
BoundCurve egup_bound(double alpha, double eta, double hbar, const std::vector<double>& dx);

// Smallest feasible Δx, ħ√η/√(1 − ħ²αη); nullopt when ħ²αη ≥ 1 (no
// feasible Δx at all). Zero when η = 0.
std::optional<double> egup_minimum_length(double alpha, double eta, double hbar);

// |Δx·Δp − (ħ/2)(1 + αΔx² + ηΔp²)| relative to ħ/2 for a feasible sample.
double egup_residual(const BoundCurve& curve, const BoundSample& s);

// n evenly spaced points in [lo, hi]; throws DomainError for an empty or
// reversed range.
std::vector<double> linear_samples(double lo, double hi, std::size_t n);

// The heuristic forms with order-unity constants:
//   GUP: Δx ≥ (ħ/2Δp)(1 + α₀ (2G/ħc³) Δp²)
//   EUP: Δp ≥ (ħ/2Δx)(1 + 2η₀ Λ Δx²)
double gup_heuristic_dx(double dp, double alpha0, const PhysicalConstants& k);
double eup_heuristic_dp(double dx, double eta0, const PhysicalConstants& k);

// The constants attached to the observable-uncertainty form:
// α = 4G/(ħc³), η = Λ/6.
struct EgupParameters {
    double alpha = 0;
    double eta = 0;
};
EgupParameters egup_parameters(const PhysicalConstants& k);

}  // namespace smearlab
