#include "smearlab/phase_space.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <string>
#include <thread>

#include "smearlab/errors.hpp"

namespace smearlab {

namespace {

void require_positive(double v, const char* what) {
    if (!(v > 0) || !std::isfinite(v)) throw DomainError(std::string(what) + " must be positive and finite");
}

std::vector<double> gaussian_samples(double sigma, const ConvolutionGrid& g) {
    const double h = g.spacing();
    const double norm = 1.0 / (sigma * std::sqrt(2 * std::numbers::pi));
    std::vector<double> out(g.points);
    for (std::size_t i = 0; i < g.points; ++i) {
        const double x = -g.half_width + static_cast<double>(i) * h;
        out[i] = norm * std::exp(-0.5 * (x / sigma) * (x / sigma));
    }
    return out;
}

}  // namespace

PhysicalConstants derive_constants(const RawConstants& raw) {
    require_positive(raw.G, "G");
    require_positive(raw.c, "c");
    require_positive(raw.hbar, "hbar");
    require_positive(raw.Lambda, "Lambda");
    PhysicalConstants k;
    k.raw = raw;
    const double c3 = raw.c * raw.c * raw.c;
    k.l_pl = std::sqrt(raw.hbar * raw.G / c3);
    k.m_pl = std::sqrt(raw.hbar * raw.c / raw.G);
    k.l_ds = std::sqrt(3 / raw.Lambda);
    k.m_ds = (raw.hbar / raw.c) * std::sqrt(raw.Lambda / 3);
    k.rho_lambda = raw.Lambda * raw.c * raw.c / (8 * std::numbers::pi * raw.G);
    k.rho_pl = k.m_pl / (k.l_pl * k.l_pl * k.l_pl);
    k.beta = 2 * raw.hbar * std::sqrt(k.rho_lambda / k.rho_pl);
    k.delta = k.beta / raw.hbar;
    return k;
}

int delta_order_of_magnitude(const PhysicalConstants& k) {
    return static_cast<int>(std::lround(std::log10(k.delta)));
}

double smeared_width(double intrinsic, double smearing) {
    if (!(intrinsic >= 0) || !(smearing >= 0) || !std::isfinite(intrinsic) || !std::isfinite(smearing))
        throw DomainError("widths must be nonnegative and finite");
    return std::hypot(intrinsic, smearing);
}

SmearedUncertainties smeared_uncertainties(const GaussianSmearedState& s) {
    require_positive(s.sigma_psi, "sigma_psi");
    require_positive(s.hbar, "hbar");
    require_positive(s.beta, "beta");
    if (!(s.sigma_g >= 0) || !std::isfinite(s.sigma_g)) throw DomainError("sigma_g must be nonnegative and finite");
    const double tilde = s.sigma_g > 0 ? s.sigma_g_tilde() : 0.0;
    return {smeared_width(s.sigma_psi, s.sigma_g), smeared_width(s.sigma_psi_momentum(), tilde)};
}

ConvolutionGrid ConvolutionGrid::for_widths(double a, double b, std::size_t points) {
    return {12 * std::max(a, b), points};
}

unsigned default_thread_count() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("SMEARLAB_THREADS")) {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end != env && cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    }
    return n;
}

double convolved_sigma(double sigma_a, double sigma_b, const ConvolutionGrid& grid, unsigned threads) {
    require_positive(sigma_a, "sigma");
    require_positive(sigma_b, "sigma");
    require_positive(grid.half_width, "grid half-width");
    if (grid.points < 2) throw UnderResolvedGridError("grid needs at least two points");
    const double h = grid.spacing();
    if (std::min(sigma_a, sigma_b) / h < kMinPointsPerSigma)
        throw UnderResolvedGridError("grid spacing " + std::to_string(h) + " resolves the narrower width with fewer than " +
                                     std::to_string(static_cast<int>(kMinPointsPerSigma)) + " points per sigma");

    const auto fa = gaussian_samples(sigma_a, grid);
    const auto fb = gaussian_samples(sigma_b, grid);
    const std::size_t n = grid.points;
    // Output point m sits at (m − (n − 1))·h and collects every i + j = m.
    std::vector<double> conv(2 * n - 1);
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t m = begin; m < end; ++m) {
            const std::size_t lo = m >= n ? m - (n - 1) : 0;
            const std::size_t hi = std::min(m, n - 1);
            double acc = 0;
            for (std::size_t i = lo; i <= hi; ++i) acc += fa[i] * fb[m - i];
            conv[m] = acc * h;
        }
    };
    if (threads == 0) threads = default_thread_count();
    threads = std::max(1u, std::min<unsigned>(threads, 64));
    if (threads == 1) {
        work(0, conv.size());
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (conv.size() + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::size_t b = t * chunk;
            const std::size_t e = std::min(conv.size(), b + chunk);
            if (b < e) pool.emplace_back(work, b, e);
        }
        for (auto& th : pool) th.join();
    }

    double mass = 0, first = 0, second = 0;
    for (std::size_t m = 0; m < conv.size(); ++m) {
        const double z = (static_cast<double>(m) - static_cast<double>(n - 1)) * h;
        mass += conv[m];
        first += conv[m] * z;
        second += conv[m] * z * z;
    }
    const double mean = first / mass;
    return std::sqrt(second / mass - mean * mean);
}

ConvolutionCheck convolution_check(const GaussianSmearedState& s, std::size_t points, unsigned threads) {
    const auto analytic = smeared_uncertainties(s);
    require_positive(s.sigma_g, "sigma_g");
    ConvolutionCheck out;
    out.dx_analytic = analytic.dx;
    out.dx_numeric =
        convolved_sigma(s.sigma_psi, s.sigma_g, ConvolutionGrid::for_widths(s.sigma_psi, s.sigma_g, points), threads);
    out.dx_relative_error = std::abs(out.dx_numeric - out.dx_analytic) / out.dx_analytic;
    const double pa = s.sigma_psi_momentum();
    const double pb = s.sigma_g_tilde();
    out.dp_analytic = analytic.dp;
    out.dp_numeric = convolved_sigma(pa, pb, ConvolutionGrid::for_widths(pa, pb, points), threads);
    out.dp_relative_error = std::abs(out.dp_numeric - out.dp_analytic) / out.dp_analytic;
    return out;
}

BoundCurve egup_bound(double alpha, double eta, double hbar, const std::vector<double>& dx) {
    if (!(alpha >= 0) || !(eta >= 0)) throw DomainError("alpha and eta must be nonnegative");
    require_positive(hbar, "hbar");
    BoundCurve curve{alpha, eta, hbar, {}};
    curve.samples.reserve(dx.size());
    for (double x : dx) {
        require_positive(x, "dx");
        const double k = 1 + alpha * x * x;
        const double disc = x * x - hbar * hbar * eta * k;
        if (disc < 0) {
            curve.samples.push_back({x, std::numeric_limits<double>::quiet_NaN(), false});
            continue;
        }
        curve.samples.push_back({x, hbar * k / (x + std::sqrt(disc)), true});
    }
    return curve;
}

std::optional<double> egup_minimum_length(double alpha, double eta, double hbar) {
    if (!(alpha >= 0) || !(eta >= 0)) throw DomainError("alpha and eta must be nonnegative");
    require_positive(hbar, "hbar");
    const double g = 1 - hbar * hbar * alpha * eta;
    if (g <= 0) return std::nullopt;
    return hbar * std::sqrt(eta) / std::sqrt(g);
}

double egup_residual(const BoundCurve& curve, const BoundSample& s) {
    if (!s.feasible) throw DomainError("infeasible sample has no bound");
    const double rhs = 0.5 * curve.hbar * (1 + curve.alpha * s.dx * s.dx + curve.eta * s.dp * s.dp);
    return std::abs(s.dx * s.dp - rhs) / (0.5 * curve.hbar);
}

std::vector<double> linear_samples(double lo, double hi, std::size_t n) {
    if (n == 0 || !(hi >= lo) || !std::isfinite(lo) || !std::isfinite(hi)) throw DomainError("invalid sample range");
    if (n == 1) return {lo};
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    return out;
}

double gup_heuristic_dx(double dp, double alpha0, const PhysicalConstants& k) {
    require_positive(dp, "dp");
    const auto& r = k.raw;
    return (r.hbar / (2 * dp)) * (1 + alpha0 * (2 * r.G / (r.hbar * r.c * r.c * r.c)) * dp * dp);
}

double eup_heuristic_dp(double dx, double eta0, const PhysicalConstants& k) {
    require_positive(dx, "dx");
    return (k.raw.hbar / (2 * dx)) * (1 + 2 * eta0 * k.raw.Lambda * dx * dx);
}

EgupParameters egup_parameters(const PhysicalConstants& k) {
    const auto& r = k.raw;
    return {4 * r.G / (r.hbar * r.c * r.c * r.c), r.Lambda / 6};
}

}  // namespace smearlab
