#include "smearlab/measurement_stats.hpp"

#include <cmath>
#include <cstdlib>
#include <map>

namespace smearlab {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i)
        if (i == s.size() || s[i] == sep) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    return out;
}

// Reads one real number from the front of text; returns false on failure.
bool read_real(const std::string& text, std::size_t& pos, double& out) {
    const char* begin = text.c_str() + pos;
    char* end = nullptr;
    out = std::strtod(begin, &end);
    if (end == begin) return false;
    pos += static_cast<std::size_t>(end - begin);
    return std::isfinite(out);
}

// "a", "bi", "a+bi", "a-bi", "i", "-i".
Complex parse_amplitude(const std::string& tok) {
    const auto bad = [&] { return ConfigError("malformed amplitude '" + tok + "'"); };
    if (tok.empty()) throw bad();
    if (tok.back() != 'i') {
        std::size_t pos = 0;
        double re = 0;
        if (!read_real(tok, pos, re) || pos != tok.size()) throw bad();
        return {re, 0};
    }
    const std::string body = tok.substr(0, tok.size() - 1);
    if (body.empty() || body == "+") return {0, 1};
    if (body == "-") return {0, -1};
    std::size_t pos = 0;
    double first = 0;
    if (!read_real(body, pos, first)) throw bad();
    if (pos == body.size()) return {0, first};
    // Remainder is the signed imaginary part.
    const std::string rest = body.substr(pos);
    if (rest == "+") return {first, 1};
    if (rest == "-") return {first, -1};
    std::size_t p2 = 0;
    double im = 0;
    if ((rest[0] != '+' && rest[0] != '-') || !read_real(rest, p2, im) || p2 != rest.size()) throw bad();
    return {first, im};
}

// P(second | a·u + b·w) for the raw closed-form partners u, w of the first
// outcome; any nonzero (a, b) spans the same eigenspace without square roots.
template <Scalar T>
real_t<T> span_probability(const SpinOperatorSet<T>& ops, Axis first, Sign s1, Axis second, Sign s2, const T& a,
                           const T& b) {
    const auto basis = eigenbasis(ops, first);
    const auto& u = s1 == Sign::up ? basis.up : basis.down;
    const auto& w = s1 == Sign::up ? basis.up_prime : basis.down_prime;
    const Ket<T> psi = a * u.raw + b * w.raw;
    const real_t<T> n = norm2(psi);
    if (!(n > 0)) throw DomainError("mixing produced the zero vector");
    return real_t<T>(norm2(Ket<T>(eigenspace_projector(ops, second, s2) * psi)) / n);
}

}  // namespace

Ket<Complex> parse_state(std::string_view text, const SpinOperatorSet<Complex>& ops) {
    const std::string s = trim(text);
    const auto under = s.rfind('_');
    if (under != std::string::npos && s.find(',') == std::string::npos) {
        const std::string name = s.substr(0, under);
        Axis axis;
        try {
            axis = parse_axis(s.substr(under + 1));
        } catch (const Error&) {
            throw ConfigError("unknown state '" + s + "'");
        }
        const auto basis = eigenbasis(ops, axis);
        if (name == "up") return basis.up.normalized();
        if (name == "down") return basis.down.normalized();
        if (name == "up_prime") return basis.up_prime.normalized();
        if (name == "down_prime") return basis.down_prime.normalized();
        throw ConfigError("unknown state '" + s + "'");
    }
    if (s.find(',') == std::string::npos)
        throw ConfigError("unknown state '" + s + "'; expected a name such as up_z or four amplitudes");
    const auto parts = split(s, ',');
    if (parts.size() != 4) throw ConfigError("a state needs four amplitudes, got '" + s + "'");
    Ket<Complex> k(4);
    for (std::size_t i = 0; i < 4; ++i) k[i] = parse_amplitude(parts[i]);
    const double n = std::sqrt(norm2(k));
    if (!(n > 0)) throw ConfigError("the state must be nonzero");
    return Complex(1.0 / n) * k;
}

std::vector<Axis> parse_axes(std::string_view text) {
    const auto parts = split(text, ',');
    std::vector<Axis> out;
    for (const auto& p : parts) {
        try {
            out.push_back(parse_axis(p));
        } catch (const Error&) {
            throw ConfigError("malformed axis list '" + std::string(text) + "'");
        }
    }
    if (out.empty()) throw ConfigError("axis list is empty");
    return out;
}

WilsonInterval wilson_interval(std::size_t successes, std::size_t trials, double z) {
    if (trials == 0) return {0, 1};
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1 + z2 / n;
    const double centre = (p + z2 / (2 * n)) / denom;
    const double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
    const double low = successes == 0 ? 0.0 : std::max(0.0, centre - half);
    const double high = successes == trials ? 1.0 : std::min(1.0, centre + half);
    return {low, high};
}

MeasurementStatistics sequential_measurement(const Ket<Complex>& psi, const SpinOperatorSet<Complex>& ops,
                                             const std::vector<Axis>& axes, std::size_t shots, std::uint64_t seed) {
    if (axes.empty() || axes.size() > kMaxSequenceLength)
        throw ConfigError("axis sequences need between 1 and " + std::to_string(kMaxSequenceLength) + " entries");
    if (shots == 0) throw ConfigError("shots must be positive");
    require_normalized(psi);

    // counts[step][history] = {trials, ups}
    std::vector<std::map<std::string, std::pair<std::size_t, std::size_t>>> counts(axes.size());
    MeasurementRng rng(seed);
    std::string history;
    for (std::size_t shot = 0; shot < shots; ++shot) {
        Ket<Complex> state = psi;
        history.clear();
        for (std::size_t k = 0; k < axes.size(); ++k) {
            const auto rec = measure_sampled(state, ops, axes[k], rng);
            auto& c = counts[k][history];
            ++c.first;
            if (rec.sign == Sign::up) ++c.second;
            history.push_back(rec.sign == Sign::up ? '+' : '-');
            state = rec.post_state();
        }
    }

    MeasurementStatistics out{axes, shots, seed, {}};
    for (std::size_t k = 0; k < axes.size(); ++k)
        for (const auto& [h, c] : counts[k]) {
            Ket<Complex> v = psi;
            for (std::size_t j = 0; j < h.size(); ++j)
                v = eigenspace_projector(ops, axes[j], h[j] == '+' ? Sign::up : Sign::down) * v;
            const double before = norm2(v);
            const double after = norm2(Ket<Complex>(eigenspace_projector(ops, axes[k], Sign::up) * v));
            StepStatistic st;
            st.step = k;
            st.axis = axes[k];
            st.history = h;
            st.shots = c.first;
            st.up = c.second;
            st.frequency = static_cast<double>(c.second) / static_cast<double>(c.first);
            st.interval = wilson_interval(c.second, c.first);
            st.analytic = before > 0 ? after / before : 0.0;
            out.steps.push_back(std::move(st));
        }
    return out;
}

Ket<Complex> random_state(std::mt19937_64& rng, std::size_t dim) {
    std::normal_distribution<double> g(0.0, 1.0);
    for (;;) {
        Ket<Complex> k(dim);
        for (std::size_t i = 0; i < dim; ++i) k[i] = Complex(g(rng), g(rng));
        const double n = std::sqrt(norm2(k));
        if (n > 1e-6) return Complex(1.0 / n) * k;
    }
}

std::pair<Complex, Complex> random_mixing(std::mt19937_64& rng) {
    const auto k = random_state(rng, 2);
    return {k[0], k[1]};
}

template <Scalar T>
std::vector<std::pair<T, T>> rational_mixings() {
    using RT = real_t<T>;
    const auto c = [](RT re, RT im) { return T(re, im); };
    const auto q = [](long n, long d) { return RT(RT(n) / RT(d)); };
    const RT half = q(1, 2), three_fifths = q(3, 5), four_fifths = q(4, 5), five_13 = q(5, 13), twelve_13 = q(12, 13);
    return {
        {c(1, 0), c(0, 0)},
        {c(0, 0), c(1, 0)},
        {c(three_fifths, 0), c(four_fifths, 0)},
        {c(three_fifths, 0), c(0, four_fifths)},
        {c(0, five_13), c(-twelve_13, 0)},
        {c(half, half), c(half, -half)},
        {c(q(8, 17), 0), c(0, q(-15, 17))},
    };
}

template <Scalar T>
ResidualReport verify_conditional_probabilities(const SpinOperatorSet<T>& ops,
                                                const std::vector<std::pair<T, T>>& mixings, Tolerance tol) {
    ResidualReport rep(tol);
    const real_t<T> half = real_t<T>(1) / real_t<T>(2);
    for (Axis first : kAxes)
        for (Axis second : kAxes) {
            double worst = 0;
            for (Sign s1 : {Sign::up, Sign::down})
                for (Sign s2 : {Sign::up, Sign::down})
                    for (const auto& [a, ap] : mixings) {
                        // Exact partner normalizers are irrational unless 1+δ is a
                        // square, so the exact backend uses raw combinations.
                        real_t<T> p;
                        if constexpr (ScalarTraits<T>::exact)
                            p = span_probability(ops, first, s1, second, s2, a, ap);
                        else
                            p = conditional_probability(ops, first, s1, second, s2, a, ap).probability;
                        const real_t<T> target = first != second ? half : real_t<T>(s1 == s2 ? 1 : 0);
                        worst = std::max(worst, std::abs(ScalarTraits<T>::to_double(real_t<T>(p - target))));
                    }
            const std::string label =
                "conditional." + std::string(axis_name(first)) + "_then_" + std::string(axis_name(second));
            rep.add(label, first != second ? "P(s_i | s_j) = 1/2 for i != j" : "repeat measurement is certain",
                    worst);
        }
    return rep;
}

ResidualReport verify_monte_carlo(const SpinOperatorSet<Complex>& ops, std::size_t shots, std::uint64_t seed,
                                  double band, Tolerance tol) {
    ResidualReport rep(tol);
    const auto z = eigenbasis(ops, Axis::z);
    struct Case {
        const char* label;
        Ket<Complex> state;
        Axis second;
        double expected;
    };
    const Case cases[] = {
        {"monte_carlo.up_z.z_then_x", z.up.normalized(), Axis::x, 0.5},
        {"monte_carlo.up_prime_z.z_then_y", z.up_prime.normalized(), Axis::y, 0.5},
        {"monte_carlo.up_z.z_then_z", z.up.normalized(), Axis::z, 1.0},
    };
    for (const auto& c : cases) {
        const auto stats = sequential_measurement(c.state, ops, {Axis::z, c.second}, shots, seed);
        // Step 1 after the certain "+" at step 0.
        double freq = 0;
        for (const auto& st : stats.steps)
            if (st.step == 1 && st.history == "+") freq = st.frequency;
        const double dev = std::abs(freq - c.expected);
        rep.add_verdict(c.label, "sampled frequency within the band of the analytic value", dev,
                        c.expected == 1.0 ? dev == 0.0 : dev <= band);
    }
    return rep;
}

ResidualReport verify_gur(const SpinOperatorSet<Complex>& ops, const std::vector<Ket<Complex>>& states,
                          Tolerance tol) {
    ResidualReport rep(tol);
    double full = 0, short_form = 0, cross = 0;
    bool robertson = true;
    double slack = 0;
    for (const auto& psi : states) {
        const auto r = gur_report(psi, ops);
        full = std::max(full, r.max_residual_full);
        cross = std::max(cross, r.max_matter_geometry_cov);
        for (const auto& a : r.axes) short_form = std::max(short_form, a.residual_without_matter_geometry);
        robertson = robertson && r.robertson_satisfied;
        for (const auto& rb : r.robertson) slack = std::max(slack, rb.bound - rb.product);
    }
    rep.add("gur.decomposition", "(dS_i)^2 = full subcomponent variance and covariance sum", full);
    rep.add_verdict("gur.robertson", "dS_a dS_b >= ((hbar+beta)/2)|<S_c>|", std::max(0.0, slack), robertson);
    rep.add_info("gur.short_form_residual", "deviation of the sum without the S-S' covariance", short_form);
    rep.add_info("gur.matter_geometry_cov", "max |cov(S,S') + cov(S',S)|", cross);
    return rep;
}

template std::vector<std::pair<Complex, Complex>> rational_mixings<Complex>();
template std::vector<std::pair<ComplexRational, ComplexRational>> rational_mixings<ComplexRational>();
template ResidualReport verify_conditional_probabilities<Complex>(const SpinOperatorSet<Complex>&,
                                                                  const std::vector<std::pair<Complex, Complex>>&,
                                                                  Tolerance);
template ResidualReport verify_conditional_probabilities<ComplexRational>(
    const SpinOperatorSet<ComplexRational>&, const std::vector<std::pair<ComplexRational, ComplexRational>>&,
    Tolerance);

}  // namespace smearlab
