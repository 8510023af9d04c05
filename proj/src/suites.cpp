#include "smearlab/suites.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <type_traits>

#include "smearlab/canonical_spin.hpp"
#include "smearlab/errors.hpp"
#include "smearlab/measurement_stats.hpp"
#include "smearlab/phase_space.hpp"
#include "smearlab/smeared_spin_one.hpp"
#include "smearlab/smeared_spin_two.hpp"
#include "smearlab/su2_rep.hpp"

namespace smearlab {

namespace {

template <Scalar T>
using R = real_t<T>;

inline constexpr double kLimitTolerance = 1e-15;
inline constexpr std::uint64_t kSuiteSeed = 42;
inline constexpr std::size_t kSuiteShots = 100000;
inline constexpr std::size_t kSuiteRandomMixings = 100;
inline constexpr std::size_t kSuiteRandomStates = 200;

template <Scalar T>
Ket<T> collapse_geometry(const Ket<T>& v) {
    // 16-dim index 8ma + 4ga + 2mb + gb → 4-dim index 2ma + mb.
    Ket<T> out(4);
    for (std::size_t i = 0; i < 16; ++i) {
        const std::size_t ma = (i >> 3) & 1, mb = (i >> 1) & 1;
        out[2 * ma + mb] += v[i];
    }
    return out;
}

template <Scalar T>
ResidualReport braket_suite(const SpinOperatorSet<T>& ops, Tolerance tol) {
    ResidualReport rep(tol);
    for (Axis a : kAxes) {
        const auto table = braket_table(eigenbasis(ops, a));
        const std::string ax(axis_name(a));
        double worst = 0;
        double same_sign = 0;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                const T target = r == c ? T(1) : T(0);
                const double d = std::sqrt(ScalarTraits<T>::to_double(ScalarTraits<T>::abs2(table[r][c] - target)));
                // up/up′ and down/down′ share an eigenvalue; only the z
                // closed forms are orthogonal there.
                const bool degenerate_pair = (r % 2 == c % 2) && r != c;
                if (degenerate_pair && a != Axis::z)
                    same_sign = std::max(same_sign, d);
                else
                    worst = std::max(worst, d);
            }
        rep.add("braket." + ax, a == Axis::z ? "z basis is orthonormal" : "unit norms and opposite-sign orthogonality",
                worst);
        if (a != Axis::z)
            rep.add_info("braket." + ax + ".same_sign_overlap", "|<<s|s'>>| for the degenerate partners", same_sign);
    }
    return rep;
}

template <Scalar T>
std::vector<SuiteReport> suites_for(const R<T>& delta, bool is_zero, const std::string& backend,
                                    const std::string& delta_text, double tol_value) {
    const Tolerance tol = tolerance_for<T>(tol_value);
    std::vector<SuiteReport> out;
    auto timed = [&](const std::string& name, const std::function<ResidualReport()>& fn) {
        const auto t0 = std::chrono::steady_clock::now();
        ResidualReport rep = fn();
        const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back({name, backend, delta_text, std::move(rep), dt});
    };

    const auto params = SmearingParams<T>::from_delta(delta);
    const auto one = build_one_particle(params);
    timed("golden", [&] { return verify_golden_fixtures(one, tol); });
    timed("subalgebras", [&] { return verify_subalgebras(one, tol); });
    timed("eigenbases", [&] { return verify_eigenbases(one, tol); });
    timed("braket", [&] { return braket_suite(one, tol); });
    const auto two = build_two_particle(params);
    timed("flips", [&] {
        ResidualReport rep(tol);
        rep.append(spin_flip_check(one, eigenbasis(one, Axis::z), tol), "one.");
        rep.append(two_particle_flips(two, tol), "two.");
        return rep;
    });
    timed("two_particle", [&] { return verify_two_particle_operators(two, tol); });
    timed("eigenfamilies", [&] {
        ResidualReport rep(tol);
        for (Axis a : kAxes) rep.append(verify_eigenfamilies(two, eigenfamilies_along(two, a), tol));
        return rep;
    });
    timed("bell", [&] {
        ResidualReport rep(tol);
        for (Axis a : kAxes) rep.append(verify_bell_states(two, a, default_family_coefficients<T>(), tol));
        return rep;
    });
    timed("measurement", [&] {
        auto mixings = rational_mixings<T>();
        ResidualReport rep(tol);
        if constexpr (std::is_same_v<T, Complex>) {
            std::mt19937_64 rng(kSuiteSeed);
            for (std::size_t i = 0; i < kSuiteRandomMixings; ++i) mixings.push_back(random_mixing(rng));
            rep.append(verify_monte_carlo(one, kSuiteShots, kSuiteSeed, 0.01, tol));
        }
        rep.append(verify_conditional_probabilities(one, mixings, tol));
        return rep;
    });
    if constexpr (std::is_same_v<T, Complex>) {
        timed("gur", [&] {
            std::mt19937_64 rng(kSuiteSeed);
            std::vector<Ket<Complex>> states;
            for (std::size_t i = 0; i < kSuiteRandomStates; ++i) states.push_back(random_state(rng));
            return verify_gur(one, states, tol);
        });
    }
    timed("su2", [&] { return verify_su2(build_sigma<T>(delta), tol); });
    if (is_zero) {
        timed("canonical", [&] { return verify_canonical(canonical_two_particle<T>(), tol); });
        timed("limit", [&] { return verify_canonical_limit<T>(tolerance_for<T>(kLimitTolerance)); });
    }
    return out;
}

}  // namespace

std::string_view backend_name(Backend b) { return b == Backend::exact ? "exact" : "float"; }

Backend parse_backend(std::string_view text) {
    if (text == "float") return Backend::floating;
    if (text == "exact") return Backend::exact;
    throw ConfigError("backend must be 'float' or 'exact', got '" + std::string(text) + "'");
}

double parse_float_delta(std::string_view text) {
    const std::string s(text);
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw ConfigError("delta '" + s + "' is not a number");
    }
    if (used != s.size()) throw ConfigError("delta '" + s + "' is not a number");
    if (!std::isfinite(v) || v < 0) throw ConfigError("delta must be finite and nonnegative, got '" + s + "'");
    return v;
}

Rational parse_exact_delta(std::string_view text) {
    Rational q;
    try {
        q = parse_rational(text);
    } catch (const Error& e) {
        throw ConfigError("delta '" + std::string(text) + "' is not a rational literal");
    }
    if (q < 0) throw ConfigError("delta must be nonnegative, got '" + std::string(text) + "'");
    if (!is_rational_square(q))
        throw ConfigError("the exact backend needs a rational square delta; '" + std::string(text) +
                          "' has no rational square root");
    return q;
}

std::vector<SuiteReport> run_suites_at(Backend backend, std::string_view delta, double tol) {
    if (!(tol > 0)) throw ConfigError("tolerance must be positive");
    const std::string text(delta);
    const std::string name(backend_name(backend));
    if (backend == Backend::exact) {
        const Rational q = parse_exact_delta(delta);
        return suites_for<ComplexRational>(q, q == 0, name, text, tol);
    }
    const double d = parse_float_delta(delta);
    return suites_for<Complex>(d, d == 0.0, name, text, tol);
}

std::vector<SuiteReport> run_verify(Backend backend, const std::vector<std::string>& deltas, double tol,
                                    unsigned threads) {
    // Validate everything up front so configuration errors surface before work.
    for (const auto& d : deltas) {
        if (backend == Backend::exact)
            parse_exact_delta(d);
        else
            parse_float_delta(d);
    }
    if (!(tol > 0)) throw ConfigError("tolerance must be positive");
    std::vector<std::vector<SuiteReport>> per(deltas.size());
    if (threads == 0) threads = default_thread_count();
    std::size_t next = 0;
    std::mutex m;
    std::exception_ptr failure;
    auto worker = [&] {
        for (;;) {
            std::size_t k;
            {
                std::lock_guard lock(m);
                if (next >= deltas.size() || failure) return;
                k = next++;
            }
            try {
                per[k] = run_suites_at(backend, deltas[k], tol);
            } catch (...) {
                std::lock_guard lock(m);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(deltas.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    std::vector<SuiteReport> out;
    for (auto& v : per)
        for (auto& s : v) out.push_back(std::move(s));
    return out;
}

template <Scalar T>
ResidualReport verify_canonical_limit(Tolerance tol) {
    ResidualReport rep(tol);
    const auto params = SmearingParams<T>::from_delta(R<T>(0));
    const auto one = build_one_particle(params);
    const auto two = build_two_particle(params);
    const auto can = build_canonical<T>();
    const auto sigma = build_sigma<T>(R<T>(0));

    double s1 = 0, sub = 0, s2p = 0, sig = 0;
    for (int i = 0; i < 3; ++i) {
        s1 = std::max(s1, max_abs_diff(one.S[i], embed_matter(can.s[i])));
        sub = std::max(sub, max_abs_diff(one.sub_S[i], embed_matter(can.s[i])));
        sub = std::max(sub, max_abs(one.sub_Sprime[i]));
        sub = std::max(sub, max_abs(one.sub_Scross[i]));
        s2p = std::max(s2p, max_abs_diff(two.S[i], embed_matter_pair(can.s_total[i])));
        s2p = std::max(s2p, max_abs_diff(two.S_A[i], embed_matter_pair(can.s_a[i])));
        s2p = std::max(s2p, max_abs_diff(two.S_B[i], embed_matter_pair(can.s_b[i])));
        sig = std::max(sig, max_abs_diff(sigma.sigma[i], embed_matter(can.pauli[i])));
    }
    rep.add("one.S_i", "S_i = s_i (x) I at delta = 0", s1);
    rep.add("one.subcomponents", "matter part = s_i (x) I, geometry and cross parts vanish", sub);
    rep.add("one.S2", "S^2 = s^2 (x) I", max_abs_diff(one.S2, embed_matter(can.s2)));
    rep.add("one.ladder", "S_+- = s_+- (x) I",
            std::max(max_abs_diff(one.Splus, embed_matter(can.s_plus)), max_abs_diff(one.Sminus, embed_matter(can.s_minus))));
    rep.add("two.S_i", "two-particle S_i, S_Ai, S_Bi embed the canonical ones", s2p);
    rep.add("two.S2", "two-particle S^2 embeds s^2", max_abs_diff(two.S2, embed_matter_pair(can.s2_total)));
    rep.add("two.ladder", "two-particle S_+- embed s_+-",
            std::max(max_abs_diff(two.Splus, embed_matter_pair(can.s_plus_total)),
                     max_abs_diff(two.Sminus, embed_matter_pair(can.s_minus_total))));
    rep.add("sigma", "Sigma_i = sigma_i (x) I", sig);

    // Bell states along z: Ψ± carry geometry |↓↓⟩ and embed directly; Φ±
    // pair ↑↑ with geometry |↑↑⟩ and ↓↓ with |↓↓⟩, so they are compared on
    // matter amplitudes summed over geometry labels.
    const auto smeared = bell_states(two, Axis::z);
    const auto canonical = canonical_bell_states<T>(Axis::z);
    double psi = 0, phi = 0;
    for (int k = 0; k < 2; ++k) {
        const Ket<T> lifted = embed_matter_pair_state(canonical[k].raw, 1, 1);
        psi = std::max(psi, scaled_distance(smeared[k].raw, lifted, smeared[k].norm2));
    }
    for (int k = 2; k < 4; ++k)
        phi = std::max(phi, scaled_distance(collapse_geometry(smeared[k].raw), canonical[k].raw, smeared[k].norm2));
    rep.add("bell.psi", "Psi+- = canonical Psi+- (x) |down_g down_g>", psi);
    rep.add("bell.phi", "Phi+- match canonical Phi+- on matter amplitudes", phi);
    return rep;
}

template ResidualReport verify_canonical_limit<Complex>(Tolerance);
template ResidualReport verify_canonical_limit<ComplexRational>(Tolerance);

SuiteReport run_phase_space_suite(double tol) {
    const auto t0 = std::chrono::steady_clock::now();
    ResidualReport rep(Tolerance{false, tol});
    const Tolerance conv_tol{false, 1e-6};
    const GaussianSmearedState cases[] = {{1, 1, 1, 1}, {0.5, 2, 1, 1}, {3, 4, 1, 1}};
    for (const auto& s : cases) {
        const auto c = convolution_check(s);
        char tag[64];
        std::snprintf(tag, sizeof tag, "%g_%g", s.sigma_psi, s.sigma_g);
        rep.add_verdict(std::string("convolution.dx.") + tag, "numeric width of |psi|^2 * |g|^2 = sqrt(dpsi^2 + sigma_g^2)",
                        c.dx_relative_error, conv_tol.accepts(c.dx_relative_error));
        rep.add_verdict(std::string("convolution.dp.") + tag, "numeric momentum width = sqrt(dpsi_p^2 + sigma_g_tilde^2)",
                        c.dp_relative_error, conv_tol.accepts(c.dp_relative_error));
    }
    const auto k = derive_constants();
    const bool in_range = k.delta >= 1e-62 && k.delta <= 1e-60;
    rep.add_verdict("constants.delta_decade", "beta/hbar = 2 sqrt(rho_Lambda/rho_Pl) in [1e-62, 1e-60]",
                    std::abs(std::log10(k.delta) + 61), in_range);
    const auto curve = egup_bound(0, 0, 1, linear_samples(0.1, 10, 100));
    double hyper = 0;
    for (const auto& s : curve.samples) hyper = std::max(hyper, std::abs(s.dx * s.dp - 0.5));
    rep.add("egup.hyperbola", "alpha = eta = 0 gives dx dp = hbar/2", hyper);
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {"phase_space", "float", "", std::move(rep), dt};
}

}  // namespace smearlab
