// One PASS/FAIL line per acceptance criterion. A criterion with a runtime
// bound fails when it overruns. Exit status is 0 only when all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "smearlab/canonical_spin.hpp"
#include "smearlab/measurement_stats.hpp"
#include "smearlab/phase_space.hpp"
#include "smearlab/smeared_spin_one.hpp"
#include "smearlab/smeared_spin_two.hpp"
#include "smearlab/su2_rep.hpp"
#include "smearlab/suites.hpp"

using namespace smearlab;

namespace {

using CR = ComplexRational;

struct Outcome {
    bool pass = true;
    std::string detail;
};

const std::vector<double> kFloatDeltas{0.0, 1e-6, 0.25, 1.0};
const std::vector<Rational> kExactDeltas{Rational(0), Rational(1, 4), Rational(1)};

SpinOperatorSet<Complex> float_ops(double d) { return build_one_particle(SmearingParams<Complex>::from_delta(d)); }
SpinOperatorSet<CR> exact_ops(const Rational& d) { return build_one_particle(SmearingParams<CR>::from_delta(d)); }

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

Outcome golden_fixtures() {
    Outcome o;
    const auto f = float_ops(0.25);
    const auto fp = printed_one_particle(f.params);
    double worst = 0;
    for (int i = 0; i < 3; ++i) worst = std::max(worst, max_abs_diff(f.S[i], fp.S[i]));
    o.pass &= worst <= 1e-15;

    const auto e = exact_ops(Rational(1, 4));
    const auto ep = printed_one_particle(e.params);
    bool exact_equal = true;
    for (int i = 0; i < 3; ++i) exact_equal &= e.S[i] == ep.S[i];
    o.pass &= exact_equal;

    bool casimir = true;
    for (const auto& d : kExactDeltas) {
        const auto ops = exact_ops(d);
        const Rational t = 1 + d;
        casimir &= ops.S2 == CR(Rational(3 * t * t / 4)) * Matrix<CR>::identity(4);
    }
    o.pass &= casimir;
    o.detail = "float max " + fmt("%.3g", worst) + ", exact equal " + (exact_equal ? "yes" : "no") +
               ", S^2 scalar " + (casimir ? "yes" : "no");
    return o;
}

Outcome algebra_suites() {
    Outcome o;
    double worst = 0;
    for (double d : kFloatDeltas) {
        const auto rep = verify_subalgebras(float_ops(d), tolerance_for<Complex>(1e-12));
        o.pass &= rep.all_pass();
        worst = std::max(worst, rep.max_residual());
    }
    double exact_worst = 0;
    for (const auto& d : kExactDeltas) {
        const auto rep = verify_subalgebras(exact_ops(d));
        o.pass &= rep.all_pass();
        exact_worst = std::max(exact_worst, rep.max_residual());
    }
    o.detail = "float max " + fmt("%.3g", worst) + ", exact max " + fmt("%g", exact_worst);
    return o;
}

Outcome eigenstates() {
    Outcome o;
    double worst = 0;
    for (double d : kFloatDeltas) {
        const auto one = float_ops(d);
        const auto a = verify_eigenbases(one, tolerance_for<Complex>(1e-12));
        const auto two = build_two_particle(one.params);
        const auto b = verify_eigenfamilies(two, eigenfamilies(two), tolerance_for<Complex>(1e-12));
        const double gram = braket_deviation(braket_table(eigenbasis(one, Axis::z)));
        o.pass &= a.all_pass() && b.all_pass() && gram <= 1e-12;
        worst = std::max({worst, a.max_residual(), b.max_residual(), gram});
    }
    for (const auto& d : kExactDeltas) {
        const auto one = exact_ops(d);
        const auto two = build_two_particle(one.params);
        o.pass &= verify_eigenbases(one).all_pass() && verify_eigenfamilies(two, eigenfamilies(two)).all_pass();
    }
    o.detail = "12 one-particle and 16 two-particle vectors, float max " + fmt("%.3g", worst);
    return o;
}

Outcome measurement_statistics() {
    Outcome o;
    std::mt19937_64 rng(20240611);
    double worst = 0;
    for (double d : kFloatDeltas) {
        const auto ops = float_ops(d);
        for (int t = 0; t < 100; ++t) {
            const auto [a, ap] = random_mixing(rng);
            for (Axis first : kAxes)
                for (Axis second : kAxes) {
                    if (first == second) continue;
                    for (Sign s1 : {Sign::up, Sign::down})
                        for (Sign s2 : {Sign::up, Sign::down}) {
                            const double p = conditional_probability(ops, first, s1, second, s2, a, ap).probability;
                            worst = std::max(worst, std::abs(p - 0.5));
                        }
                }
        }
    }
    o.pass &= worst <= 1e-12;
    const auto ops = float_ops(0.25);
    const auto stats = sequential_measurement(parse_state("up_z", ops), ops, {Axis::z, Axis::x}, 100000, 42);
    double freq = -1;
    for (const auto& st : stats.steps)
        if (st.step == 1 && st.history == "+") freq = st.frequency;
    o.pass &= std::abs(freq - 0.5) <= 0.01;
    o.detail = "analytic max |P - 1/2| " + fmt("%.3g", worst) + ", Monte Carlo P(up_x) " + fmt("%.5f", freq);
    return o;
}

Outcome spin_flips() {
    Outcome o;
    double worst = 0;
    for (double d : kFloatDeltas) {
        const auto one = float_ops(d);
        const auto a = spin_flip_check(one, eigenbasis(one, Axis::z), tolerance_for<Complex>(1e-12));
        const auto b = two_particle_flips(build_two_particle(one.params), tolerance_for<Complex>(1e-12));
        o.pass &= a.all_pass() && b.all_pass();
        worst = std::max({worst, a.max_residual(), b.max_residual()});
    }
    double exact_worst = 0;
    for (const auto& d : {Rational(0), Rational(1, 4), Rational(9, 16), Rational(1)}) {
        const auto one = exact_ops(d);
        const auto a = spin_flip_check(one, eigenbasis(one, Axis::z));
        const auto b = two_particle_flips(build_two_particle(one.params));
        o.pass &= a.all_pass() && b.all_pass();
        exact_worst = std::max({exact_worst, a.max_residual(), b.max_residual()});
    }
    o.detail = "float max " + fmt("%.3g", worst) + ", exact coefficient max " + fmt("%g", exact_worst);
    return o;
}

Outcome uncertainty() {
    Outcome o;
    std::mt19937_64 rng(777);
    double worst = 0, cross = 0;
    bool robertson = true;
    const auto ops = float_ops(0.25);
    for (int t = 0; t < 10000; ++t) {
        const auto r = gur_report(random_state(rng), ops);
        worst = std::max(worst, r.max_residual_full);
        cross = std::max(cross, r.max_matter_geometry_cov);
        robertson &= r.robertson_satisfied;
    }
    o.pass = worst <= 1e-12 && robertson;
    o.detail = "decomposition max " + fmt("%.3g", worst) + ", Robertson " + (robertson ? "holds" : "violated") +
               ", max omitted S-S' covariance " + fmt("%.4g", cross) + " (informational)";
    return o;
}

Outcome su2() {
    Outcome o;
    double det_err = 0, tr_err = 0, unit_err = 0, closure = 0;
    for (double d : {0.25, 1.0}) {
        const auto s = build_sigma<Complex>(d);
        for (std::uint64_t seed = 1; seed <= 10000; ++seed) {
            const auto u = random_unit_quaternion(seed);
            const auto v = random_unit_quaternion(seed + 1000003);
            const auto m = group_element(u, s);
            det_err = std::max(det_err, std::abs(det(m) - Complex(1)));
            tr_err = std::max(tr_err, std::abs(trace(m) - Complex(4 * u.u0)));
            unit_err = std::max(unit_err, max_abs_diff(Matrix<Complex>(dagger(m) * m), Matrix<Complex>::identity(4)));
            closure = std::max(closure, closure_check(u, v, s));
        }
    }
    double fundamental = 0;
    for (const auto& d : {Rational(0), Rational(1, 4), Rational(1), Rational(9, 16)})
        fundamental = std::max(fundamental, fundamental_relation_check(build_sigma<CR>(d)));
    o.pass = det_err <= 1e-10 && tr_err <= 1e-12 && unit_err <= 1e-12 && closure <= 1e-10 && fundamental == 0.0;
    o.detail = "det " + fmt("%.3g", det_err) + ", trace " + fmt("%.3g", tr_err) + ", unitarity " +
               fmt("%.3g", unit_err) + ", closure " + fmt("%.3g", closure) + ", exact fundamental " +
               fmt("%g", fundamental);
    return o;
}

Outcome limits() {
    Outcome o;
    const auto rep = verify_canonical_limit<Complex>(tolerance_for<Complex>(1e-15));
    const auto exact = verify_canonical_limit<CR>(tolerance_for<CR>());
    o.pass = rep.all_pass() && exact.all_pass();
    o.detail = "float max " + fmt("%.3g", rep.max_residual()) + ", exact max " + fmt("%g", exact.max_residual());
    return o;
}

Outcome phase_space() {
    Outcome o;
    const auto s = run_phase_space_suite(1e-12);
    o.pass = s.pass();
    const auto k = derive_constants(RawConstants{});
    o.detail = "beta/hbar = " + fmt("%.4g", k.delta) + ", " + std::to_string(s.report.checks().size()) + " checks";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double budget;  // seconds; 0 for none
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "golden fixtures", 1, golden_fixtures},
        {2, "algebra suites", 2, algebra_suites},
        {3, "eigenstates", 2, eigenstates},
        {4, "measurement statistics", 10, measurement_statistics},
        {5, "spin flips", 0, spin_flips},
        {6, "uncertainty decomposition", 10, uncertainty},
        {7, "SU(2) representation", 10, su2},
        {8, "canonical limit", 0, limits},
        {9, "phase space", 5, phase_space},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = c.budget == 0 || dt < c.budget;
        const bool pass = o.pass && in_time;
        failed += pass ? 0 : 1;
        std::printf("%s criterion %d (%s): %s; %.3f s%s\n", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), dt,
                    in_time ? "" : " (over budget)");
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
