#include <gtest/gtest.h>

#include "smearlab/measurement_stats.hpp"
#include "test_util.hpp"

namespace smearlab {
namespace {

using test::CR;

SpinOperatorSet<Complex> ops_at(double delta) {
    return build_one_particle(SmearingParams<Complex>::from_delta(delta));
}

const StepStatistic& step_with(const MeasurementStatistics& s, std::size_t step, const std::string& history) {
    for (const auto& st : s.steps)
        if (st.step == step && st.history == history) return st;
    throw std::runtime_error("missing step");
}

TEST(MeasurementStats, NamedStatesAreNormalizedEigenvectors) {
    const auto ops = ops_at(0.25);
    for (Axis a : kAxes) {
        const std::string ax(axis_name(a));
        const auto basis = eigenbasis(ops, a);
        EXPECT_EQ(parse_state("up_" + ax, ops), basis.up.normalized());
        EXPECT_EQ(parse_state("down_prime_" + ax, ops), basis.down_prime.normalized());
    }
}

TEST(MeasurementStats, AmplitudeListsParseAndNormalize) {
    const auto ops = ops_at(0.25);
    const auto k = parse_state("1, 0, 0.5i, -0.5+0.5i", ops);
    const double n = std::sqrt(1 + 0.25 + 0.5);
    EXPECT_NEAR(std::abs(k[0] - Complex(1 / n)), 0, 1e-15);
    EXPECT_NEAR(std::abs(k[2] - Complex(0, 0.5 / n)), 0, 1e-15);
    EXPECT_NEAR(std::abs(k[3] - Complex(-0.5 / n, 0.5 / n)), 0, 1e-15);
    const auto j = parse_state("i,-i,1-2i,0", ops);
    EXPECT_NEAR(std::abs(j[2] * std::sqrt(7.0) - Complex(1, -2)), 0, 1e-14);
}

TEST(MeasurementStats, MalformedStateSpecsRejected) {
    const auto ops = ops_at(0.25);
    for (const char* bad : {"", "up", "up_w", "sideways_z", "1,2,3", "a,b,c,d", "0,0,0,0", "1,2,3,4,5", "1,,0,0",
                            "1i2,0,0,0", "nan,0,0,0"})
        EXPECT_THROW(parse_state(bad, ops), ConfigError) << bad;
}

TEST(MeasurementStats, AxisLists) {
    EXPECT_EQ(parse_axes("z,x,y"), (std::vector<Axis>{Axis::z, Axis::x, Axis::y}));
    EXPECT_EQ(parse_axes(" z "), std::vector<Axis>{Axis::z});
    EXPECT_THROW(parse_axes(""), ConfigError);
    EXPECT_THROW(parse_axes("z,,x"), ConfigError);
    EXPECT_THROW(parse_axes("q"), ConfigError);
}

TEST(MeasurementStats, WilsonIntervalMatchesReference) {
    const auto a = wilson_interval(50026, 100000);
    EXPECT_NEAR(a.low, 0.49716107479123783, 1e-15);
    EXPECT_NEAR(a.high, 0.5033589052339438, 1e-15);
    const auto b = wilson_interval(3, 10);
    EXPECT_NEAR(b.low, 0.10779126740630104, 1e-15);
    EXPECT_NEAR(b.high, 0.6032218525388546, 1e-15);
    EXPECT_EQ(wilson_interval(10, 10).high, 1.0);
    EXPECT_EQ(wilson_interval(0, 10).low, 0.0);
}

TEST(MeasurementStats, UpZThenXIsHalf) {
    const auto ops = ops_at(0.25);
    const auto s = sequential_measurement(parse_state("up_z", ops), ops, {Axis::z, Axis::x}, 100000, 42);
    const auto& first = step_with(s, 0, "");
    EXPECT_EQ(first.up, 100000u);
    EXPECT_NEAR(first.analytic, 1.0, 1e-12);
    const auto& second = step_with(s, 1, "+");
    EXPECT_NEAR(second.analytic, 0.5, 1e-12);
    EXPECT_NEAR(second.frequency, 0.5, 0.01);
    EXPECT_LE(second.interval.low, 0.5);
    EXPECT_GE(second.interval.high, 0.5);
}

TEST(MeasurementStats, RepeatedAxisIsCertain) {
    const auto ops = ops_at(0.25);
    const auto s = sequential_measurement(parse_state("0.3,0.4i,-0.5,0.7", ops), ops, {Axis::z, Axis::z}, 5000, 7);
    for (const auto& st : s.steps)
        if (st.step == 1) {
            EXPECT_EQ(st.frequency, st.history == "+" ? 1.0 : 0.0);
            EXPECT_NEAR(st.analytic, st.history == "+" ? 1.0 : 0.0, 1e-12);
        }
}

TEST(MeasurementStats, PrimedUpZThenYIsHalf) {
    const auto ops = ops_at(0.25);
    const auto s = sequential_measurement(parse_state("up_prime_z", ops), ops, {Axis::z, Axis::y}, 20000, 3);
    EXPECT_NEAR(step_with(s, 1, "+").analytic, 0.5, 1e-12);
}

TEST(MeasurementStats, CountsAreConsistentAndDeterministic) {
    const auto ops = ops_at(1.0);
    const auto psi = parse_state("1,1i,0.5,-1", ops);
    const std::vector<Axis> axes{Axis::x, Axis::y, Axis::z};
    const auto a = sequential_measurement(psi, ops, axes, 3000, 11);
    const auto b = sequential_measurement(psi, ops, axes, 3000, 11);
    ASSERT_EQ(a.steps.size(), b.steps.size());
    for (std::size_t i = 0; i < a.steps.size(); ++i) {
        EXPECT_EQ(a.steps[i].history, b.steps[i].history);
        EXPECT_EQ(a.steps[i].up, b.steps[i].up);
    }
    for (std::size_t k = 0; k < axes.size(); ++k) {
        std::size_t total = 0;
        for (const auto& st : a.steps)
            if (st.step == k) total += st.shots;
        EXPECT_EQ(total, 3000u);
    }
}

TEST(MeasurementStats, RejectsBadRuns) {
    const auto ops = ops_at(0.25);
    const auto psi = parse_state("up_z", ops);
    EXPECT_THROW(sequential_measurement(psi, ops, {}, 10, 1), ConfigError);
    EXPECT_THROW(sequential_measurement(psi, ops, {Axis::z}, 0, 1), ConfigError);
    EXPECT_THROW(sequential_measurement(psi, ops, std::vector<Axis>(kMaxSequenceLength + 1, Axis::z), 10, 1),
                 ConfigError);
    EXPECT_THROW(sequential_measurement(Ket<Complex>{1, 1, 0, 0}, ops, {Axis::z}, 10, 1), NormalizationError);
}

TEST(MeasurementStats, ConditionalSuitesPass) {
    const auto f = verify_conditional_probabilities(ops_at(0.25), rational_mixings<Complex>());
    EXPECT_TRUE(f.all_pass());
    const auto ops = build_one_particle(SmearingParams<CR>::from_delta(Rational(1, 4)));
    const auto e = verify_conditional_probabilities(ops, rational_mixings<CR>());
    EXPECT_TRUE(e.all_pass());
    EXPECT_EQ(e.max_residual(), 0.0);
}

TEST(MeasurementStats, RandomStatesAreUnitAndSeeded) {
    std::mt19937_64 a(1), b(1);
    const auto x = random_state(a), y = random_state(b);
    EXPECT_EQ(x, y);
    EXPECT_NEAR(norm2(x), 1.0, 1e-15);
    const auto [p, pp] = random_mixing(a);
    EXPECT_NEAR(std::norm(p) + std::norm(pp), 1.0, 1e-15);
}

}  // namespace
}  // namespace smearlab
