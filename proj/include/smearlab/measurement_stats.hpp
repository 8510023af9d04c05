#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <string>
#include <string_view>
#include <vector>

#include "smearlab/smeared_spin_one.hpp"

namespace smearlab {

// A one-particle state from a text string. Named fixtures are
// "<up|down|up_prime|down_prime>_<x|y|z>"; otherwise four comma-separated
// complex amplitudes such as "1,0,0.5i,-0.5+0.5i", normalized on parse.
// Throws ConfigError for anything else, including the zero vector.
Ket<Complex> parse_state(std::string_view text, const SpinOperatorSet<Complex>& ops);

// "z,x,y" → {z, x, y}; throws ConfigError for an empty or malformed list.
std::vector<Axis> parse_axes(std::string_view text);

struct WilsonInterval {
    double low = 0;
    double high = 1;
};

// Score interval for a binomial proportion; z = 1.96 gives ~95%.
WilsonInterval wilson_interval(std::size_t successes, std::size_t trials, double z = 1.959963984540054);

// Outcome frequency of "up" at one step, conditioned on the outcomes of the
// earlier steps (history: '+' for up, '-' for down, oldest first).
struct StepStatistic {
    std::size_t step = 0;
    Axis axis = Axis::z;
    std::string history;
    std::size_t shots = 0;
    std::size_t up = 0;
    double frequency = 0;
    WilsonInterval interval;
    double analytic = 0;  // ‖Π_up Π_history ψ‖² / ‖Π_history ψ‖²
};

struct MeasurementStatistics {
    std::vector<Axis> axes;
    std::size_t shots = 0;
    std::uint64_t seed = 0;
    std::vector<StepStatistic> steps;  // ordered by step, then history
};

inline constexpr std::size_t kMaxSequenceLength = 8;

// Repeated sequential Lüders measurements of the axes starting from ψ,
// driven by MeasurementRng(seed). Histories that never occur are omitted.
MeasurementStatistics sequential_measurement(const Ket<Complex>& psi, const SpinOperatorSet<Complex>& ops,
                                             const std::vector<Axis>& axes, std::size_t shots, std::uint64_t seed);

// Normalized complex Gaussian vector: uniform on the unit sphere of ℂ^dim.
Ket<Complex> random_state(std::mt19937_64& rng, std::size_t dim = 4);

// (α, α′) with |α|² + |α′|² = 1, uniform on the unit sphere of ℂ².
std::pair<Complex, Complex> random_mixing(std::mt19937_64& rng);

// Mixing pairs with rational entries, usable in both backends.
template <Scalar T>
std::vector<std::pair<T, T>> rational_mixings();

// For every axis pair and sign pair, P(second | α|s⟩ + α′|s′⟩ of the first):
// 1/2 when the axes differ, 1 or 0 when they coincide.
template <Scalar T>
ResidualReport verify_conditional_probabilities(const SpinOperatorSet<T>& ops,
                                                const std::vector<std::pair<T, T>>& mixings,
                                                Tolerance tol = tolerance_for<T>());

// Sampled z→x from |↑z⟩ and z→y from |↑′z⟩ within `band` of the analytic 1/2,
// and z→z always repeating the first outcome.
ResidualReport verify_monte_carlo(const SpinOperatorSet<Complex>& ops, std::size_t shots, std::uint64_t seed,
                                  double band = 0.01, Tolerance tol = {});

// Full variance decomposition and the Robertson bound for every state;
// the largest 𝒮–𝒮′ covariance is recorded as information.
ResidualReport verify_gur(const SpinOperatorSet<Complex>& ops, const std::vector<Ket<Complex>>& states,
                          Tolerance tol = {});

}  // namespace smearlab
