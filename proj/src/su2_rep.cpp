#include "smearlab/su2_rep.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

namespace smearlab {

namespace {

template <Scalar T>
using R = real_t<T>;

template <Scalar T>
T re(const R<T>& x) {
    return ScalarTraits<T>::make(x);
}

template <Scalar T>
T cx(const R<T>& a, const R<T>& b) {
    return ScalarTraits<T>::make(a, b);
}

template <Scalar T>
bool unit_ok(const Quaternion<T>& q) {
    const R<T> n = q.norm2();
    if constexpr (ScalarTraits<T>::exact) {
        return n == 1;
    } else {
        return std::abs(n - 1.0) <= kDefaultTolerance;
    }
}

template <Scalar T>
std::vector<Quaternion<T>> sample_quaternions() {
    std::vector<Quaternion<T>> out{Quaternion<T>::identity()};
    const std::array<std::array<int, 6>, 4> pts{{{1, 2, -1, 3, 2, 5}, {-3, 4, 1, 1, 0, 1}, {2, 7, -5, 3, 1, 2}, {0, 1, 0, 1, 1, 1}}};
    for (const auto& p : pts) {
        const auto q = rational_unit_quaternion(Rational(p[0], p[1]), Rational(p[2], p[3]), Rational(p[4], p[5]));
        if constexpr (ScalarTraits<T>::exact) {
            out.push_back(q);
        } else {
            out.push_back({q.u0.get_d(), q.u1.get_d(), q.u2.get_d(), q.u3.get_d()});
        }
    }
    if constexpr (!ScalarTraits<T>::exact) {
        for (std::uint64_t seed = 1; seed <= 6; ++seed) out.push_back(random_unit_quaternion(seed));
    }
    return out;
}

}  // namespace

template <Scalar T>
SigmaSet<T> build_sigma(const R<T>& delta) {
    const auto params = SmearingParams<T>::from_delta(delta);
    const auto pauli = pauli_matrices<T>();
    const auto id2 = Matrix<T>::identity(2);
    const T inv = re<T>(R<T>(R<T>(1) / (1 + delta)));
    const T d = re<T>(delta);
    const T sd = re<T>(params.sqrt_delta());
    SigmaSet<T> s{delta, {}};
    for (int i = 0; i < 3; ++i) {
        Matrix<T> cross(4, 4);
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                if (const int e = levi_civita(i, j, k); e != 0) cross += T(e) * kron(pauli[j], pauli[k]);
        s.sigma[i] = inv * (kron(pauli[i], id2) + d * kron(id2, pauli[i]) + sd * cross);
    }
    return s;
}

template <Scalar T>
SigmaSet<T> sigma_from_spin(const SpinOperatorSet<T>& ops) {
    const T scale = re<T>(R<T>(R<T>(2) / ops.params.total()));
    SigmaSet<T> s{ops.params.delta(), {}};
    for (int i = 0; i < 3; ++i) s.sigma[i] = scale * ops.S[i];
    return s;
}

template <Scalar T>
SigmaSet<T> build_sigma_geometric_limit() {
    // ħ → 0 and β → ħ = 1: no matter or cross part, and 2/(ħ+β) = 2.
    const auto sc = spin_subcomponents<T>(R<T>(0), R<T>(1), R<T>(0));
    SigmaSet<T> s{R<T>(0), {}};
    for (int i = 0; i < 3; ++i) s.sigma[i] = T(2) * (sc.matter[i] + sc.geometry[i] + sc.cross[i]);
    return s;
}

template <Scalar T>
std::array<Matrix<T>, 3> sigma_without_interaction(const R<T>& delta) {
    if (ScalarTraits<T>::is_negative(delta)) throw DomainError("delta must be nonnegative");
    const auto pauli = pauli_matrices<T>();
    const auto id2 = Matrix<T>::identity(2);
    const T inv = re<T>(R<T>(R<T>(1) / (1 + delta)));
    std::array<Matrix<T>, 3> out;
    for (int i = 0; i < 3; ++i) out[i] = inv * (kron(pauli[i], id2) + re<T>(delta) * kron(id2, pauli[i]));
    return out;
}

template <Scalar T>
double fundamental_relation_check(const SigmaSet<T>& s) {
    const T i = imag_unit<T>();
    const auto id = Matrix<T>::identity(4);
    double worst = 0;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            Matrix<T> rhs = a == b ? id : Matrix<T>(4, 4);
            if (a != b) {
                const int c = third_axis(a, b);
                rhs += T(levi_civita(a, b, c)) * i * s.sigma[c];
            }
            worst = std::max(worst, max_abs_diff(s.sigma[a] * s.sigma[b], rhs));
        }
    return worst;
}

Quaternion<Complex> to_quaternion(const AxisAngle& a) {
    const double n = std::sqrt(a.n[0] * a.n[0] + a.n[1] * a.n[1] + a.n[2] * a.n[2]);
    if (std::abs(n - 1.0) > kDefaultTolerance) throw DomainError("rotation axis must be a unit vector");
    if (!(a.theta >= 0.0 && a.theta <= 2 * std::numbers::pi)) throw DomainError("theta must lie in [0, 2pi]");
    const double c = std::cos(a.theta / 2);
    const double s = std::sin(a.theta / 2);
    return {c, -s * a.n[0], -s * a.n[1], -s * a.n[2]};
}

template <Scalar T>
Matrix<T> quaternion_matrix(const Quaternion<T>& q, const SigmaSet<T>& s) {
    const T i = imag_unit<T>();
    return re<T>(q.u0) * Matrix<T>::identity(4) +
           i * (re<T>(q.u1) * s.sigma[0] + re<T>(q.u2) * s.sigma[1] + re<T>(q.u3) * s.sigma[2]);
}

template <Scalar T>
Matrix<T> group_element(const Quaternion<T>& q, const SigmaSet<T>& s) {
    if (!unit_ok(q)) throw NormalizationError("group elements need u0^2 + u1^2 + u2^2 + u3^2 = 1");
    return quaternion_matrix(q, s);
}

Matrix<Complex> group_element(const AxisAngle& a, const SigmaSet<Complex>& s) {
    to_quaternion(a);  // validates
    const double c = std::cos(a.theta / 2);
    const double sn = std::sin(a.theta / 2);
    const Complex i(0, 1);
    const Matrix<Complex> ndots = Complex(a.n[0]) * s.sigma[0] + Complex(a.n[1]) * s.sigma[1] + Complex(a.n[2]) * s.sigma[2];
    return Complex(c) * Matrix<Complex>::identity(4) - (i * sn) * ndots;
}

template <Scalar T>
Matrix<T> printed_group_element(const Quaternion<T>& q, const R<T>& delta, const R<T>& sqrt_delta) {
    const T i = imag_unit<T>();
    const T u0 = re<T>(q.u0), u1 = re<T>(q.u1), u2 = re<T>(q.u2), u3 = re<T>(q.u3);
    const T sd = re<T>(sqrt_delta);
    const T opd = re<T>(R<T>(1 + delta));
    const T ratio = re<T>(R<T>((1 - delta) / (1 + delta)));
    const T mi_sd = sd - i;  // −i + √δ
    const T pi_sd = sd + i;  // i + √δ
    const T z(0);
    return Matrix<T>{
        {u0 + i * u3, (u2 + i * u1) * sd / mi_sd, (u1 - i * u2) / mi_sd, z},
        {(i * u1 - u2) * sd / pi_sd, u0 + i * ratio * u3, T(-2) * u3 * sd / opd, z - (u1 - i * u2) / pi_sd},
        {z - (u1 + i * u2) / pi_sd, T(2) * u3 * sd / opd, u0 - i * ratio * u3, (u2 + i * u1) * sd / pi_sd},
        {z, (u1 + i * u2) / mi_sd, (i * u1 - u2) * sd / mi_sd, u0 - i * u3}};
}

template <Scalar T>
double closure_check(const Quaternion<T>& u, const Quaternion<T>& v, const SigmaSet<T>& s) {
    return max_abs_diff(group_element(u, s) * group_element(v, s), group_element(compose(u, v), s));
}

Quaternion<ComplexRational> rational_unit_quaternion(Rational a, Rational b, Rational c) {
    // GMP arithmetic assumes canonical operands.
    a.canonicalize();
    b.canonicalize();
    c.canonicalize();
    const Rational r2 = a * a + b * b + c * c;
    const Rational den = r2 + 1;
    return {Rational((r2 - 1) / den), Rational(2 * a / den), Rational(2 * b / den), Rational(2 * c / den)};
}

Quaternion<Complex> random_unit_quaternion(std::uint64_t seed) {
    std::mt19937_64 engine(seed);
    std::normal_distribution<double> gauss;
    std::array<double, 4> v{};
    double n2 = 0;
    do {
        n2 = 0;
        for (auto& x : v) {
            x = gauss(engine);
            n2 += x * x;
        }
    } while (n2 < 1e-12);
    const double n = std::sqrt(n2);
    return {v[0] / n, v[1] / n, v[2] / n, v[3] / n};
}

template <Scalar T>
ResidualReport verify_su2(const SigmaSet<T>& s, Tolerance tol) {
    ResidualReport rep(tol);
    const auto id = Matrix<T>::identity(4);
    const T i = imag_unit<T>();

    double herm = 0, unit = 0, invol = 0, tr = 0, dt = 0, anti = 0, comm = 0;
    for (int a = 0; a < 3; ++a) {
        const auto& S = s.sigma[a];
        herm = std::max(herm, max_abs_diff(S, dagger(S)));
        unit = std::max(unit, max_abs_diff(dagger(S) * S, id));
        invol = std::max(invol, max_abs_diff(S * S, id));
        tr = std::max(tr, std::sqrt(ScalarTraits<T>::to_double(ScalarTraits<T>::abs2(trace(S)))));
        dt = std::max(dt, std::sqrt(ScalarTraits<T>::to_double(ScalarTraits<T>::abs2(det(S) - T(1)))));
        for (int b = 0; b < 3; ++b) {
            const Matrix<T> ac = a == b ? T(2) * id : Matrix<T>(4, 4);
            anti = std::max(anti, max_abs_diff(anticommutator(S, s.sigma[b]), ac));
            Matrix<T> cc(4, 4);
            if (a != b) {
                const int c = third_axis(a, b);
                cc = T(2 * levi_civita(a, b, c)) * i * s.sigma[c];
            }
            comm = std::max(comm, max_abs_diff(commutator(S, s.sigma[b]), cc));
        }
    }
    rep.add("sigma.hermitian", "Sigma_i = Sigma_i^dagger", herm);
    rep.add("sigma.unitary", "Sigma_i^dagger Sigma_i = I", unit);
    rep.add("sigma.involutive", "Sigma_i^2 = I", invol);
    rep.add("sigma.traceless", "tr Sigma_i = 0", tr);
    rep.add("sigma.det", "det Sigma_i = 1", dt);
    rep.add("sigma.anticommutator", "{Sigma_i, Sigma_j} = 2 delta_ij I", anti);
    rep.add("sigma.commutator", "[Sigma_i, Sigma_j] = 2i eps_ijk Sigma_k", comm);
    rep.add("sigma.fundamental", "Sigma_i Sigma_j = delta_ij I + i eps_ijk Sigma_k", fundamental_relation_check(s));

    const auto params = SmearingParams<T>::from_delta(s.delta);
    const auto from_spin = sigma_from_spin(build_one_particle(params));
    double cons = 0;
    for (int a = 0; a < 3; ++a) cons = std::max(cons, max_abs_diff(s.sigma[a], from_spin.sigma[a]));
    rep.add("sigma.from_spin", "Sigma_i = (2/(hbar+beta)) S_i", cons);

    double printed = 0, trace_id = 0, det_id = 0, unitary = 0;
    const auto samples = sample_quaternions<T>();
    for (const auto& q : samples) {
        const auto U = group_element(q, s);
        printed = std::max(printed, max_abs_diff(U, printed_group_element(q, s.delta, params.sqrt_delta())));
        trace_id = std::max(trace_id, std::sqrt(ScalarTraits<T>::to_double(
                                          ScalarTraits<T>::abs2(trace(U) - re<T>(R<T>(4 * q.u0))))));
        det_id = std::max(det_id, std::sqrt(ScalarTraits<T>::to_double(ScalarTraits<T>::abs2(det(U) - T(1)))));
        unitary = std::max(unitary, max_abs_diff(dagger(U) * U, id));
    }
    rep.add("group.closed_form", "u0 I + i u.Sigma matches the entrywise closed form", printed);
    rep.add("group.trace", "tr U = 4 u0", trace_id);
    rep.add("group.det", "det U = 1 on the unit sphere", det_id);
    rep.add("group.unitary", "U^dagger U = I", unitary);

    double closure = 0, inverse = 0;
    for (const auto& u : samples) {
        inverse = std::max(inverse, max_abs_diff(group_element(u, s) * group_element(conjugate(u), s), id));
        for (const auto& v : samples) closure = std::max(closure, closure_check(u, v, s));
    }
    rep.add("group.closure", "U(u) U(v) = U(v o u)", closure);
    rep.add("group.inverse", "U(u) U(conj u) = I", inverse);

    // Off the unit sphere det U = (Σu²)² still holds, and the checked
    // constructor rejects the parameters.
    const Quaternion<T> off{R<T>(1), R<T>(1), R<T>(-1), R<T>(R<T>(1) / 2)};
    const T expect = re<T>(R<T>(off.norm2() * off.norm2()));
    rep.add("group.det_off_sphere", "det(u0 I + i u.Sigma) = (sum u^2)^2",
            std::sqrt(ScalarTraits<T>::to_double(ScalarTraits<T>::abs2(det(quaternion_matrix(off, s)) - expect))));
    bool rejected = false;
    try {
        group_element(off, s);
    } catch (const NormalizationError&) {
        rejected = true;
    }
    rep.add_verdict("group.rejects_non_unit", "non-unit parameters are rejected", rejected ? 0.0 : 1.0, rejected);
    return rep;
}

#define SMEARLAB_INSTANTIATE(T)                                                                      \
    template SigmaSet<T> build_sigma<T>(const real_t<T>&);                                           \
    template SigmaSet<T> sigma_from_spin<T>(const SpinOperatorSet<T>&);                              \
    template SigmaSet<T> build_sigma_geometric_limit<T>();                                           \
    template std::array<Matrix<T>, 3> sigma_without_interaction<T>(const real_t<T>&);                \
    template double fundamental_relation_check<T>(const SigmaSet<T>&);                               \
    template Matrix<T> quaternion_matrix<T>(const Quaternion<T>&, const SigmaSet<T>&);               \
    template Matrix<T> group_element<T>(const Quaternion<T>&, const SigmaSet<T>&);                   \
    template Matrix<T> printed_group_element<T>(const Quaternion<T>&, const real_t<T>&, const real_t<T>&); \
    template double closure_check<T>(const Quaternion<T>&, const Quaternion<T>&, const SigmaSet<T>&); \
    template ResidualReport verify_su2<T>(const SigmaSet<T>&, Tolerance);

SMEARLAB_INSTANTIATE(Complex)
SMEARLAB_INSTANTIATE(ComplexRational)

}  // namespace smearlab
