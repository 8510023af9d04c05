#include "smearlab/smeared_spin_one.hpp"

#include <cmath>
#include <string>

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
Matrix<T> scaled_identity(std::size_t n, const R<T>& s) {
    return re<T>(s) * Matrix<T>::identity(n);
}

}  // namespace

template <Scalar T>
Subcomponents<T> spin_subcomponents(const R<T>& hbar, const R<T>& beta, const R<T>& sqrt_hbar_beta) {
    const auto sigma = pauli_matrices<T>();
    const auto id2 = Matrix<T>::identity(2);
    Subcomponents<T> sc;
    for (int i = 0; i < 3; ++i) {
        sc.matter[i] = re<T>(R<T>(hbar / 2)) * kron(sigma[i], id2);
        sc.geometry[i] = re<T>(R<T>(beta / 2)) * kron(id2, sigma[i]);
        Matrix<T> eps_sum(4, 4);
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                const int e = levi_civita(i, j, k);
                if (e != 0) eps_sum += T(e) * kron(sigma[j], sigma[k]);
            }
        sc.cross[i] = re<T>(R<T>(sqrt_hbar_beta / 2)) * eps_sum;
    }
    return sc;
}

template <Scalar T>
SpinOperatorSet<T> build_one_particle(const SmearingParams<T>& params) {
    const auto sc = spin_subcomponents<T>(params.hbar(), params.beta(), params.sqrt_hbar_beta());
    SpinOperatorSet<T> ops{params, {}, {}, {}, {}, sc.matter, sc.geometry, sc.cross};
    for (int i = 0; i < 3; ++i) ops.S[i] = sc.matter[i] + sc.geometry[i] + sc.cross[i];
    ops.S2 = ops.S[0] * ops.S[0] + ops.S[1] * ops.S[1] + ops.S[2] * ops.S[2];
    const T i = imag_unit<T>();
    ops.Splus = ops.S[0] + i * ops.S[1];
    ops.Sminus = ops.S[0] - i * ops.S[1];
    return ops;
}

template <Scalar T>
PrintedOneParticle<T> printed_one_particle(const SmearingParams<T>& p) {
    const R<T> h = p.hbar();
    const R<T> b = p.beta();
    const R<T> r = p.sqrt_hbar_beta();
    const R<T> half(R<T>(1) / 2);
    const T z(0);
    // (x + i y)/2
    auto q = [&](const R<T>& x, const R<T>& y) { return cx<T>(R<T>(x * half), R<T>(y * half)); };
    const R<T> nh = -h, nb = -b, nr = -r;

    PrintedOneParticle<T> m;
    m.S[0] = Matrix<T>{{z, q(b, r), q(h, nr), z},
                       {q(b, nr), z, z, q(h, r)},
                       {q(h, r), z, z, q(b, nr)},
                       {z, q(h, nr), q(b, r), z}};
    // −(iβ − √ħβ)/2 = (√ħβ − iβ)/2 and so on, entry by entry.
    m.S[1] = Matrix<T>{{z, q(r, nb), q(nr, nh), z},
                       {q(r, b), z, z, q(r, nh)},
                       {q(nr, h), z, z, q(nr, nb)},
                       {z, q(r, h), q(nr, b), z}};
    const R<T> zero(0);
    m.S[2] = Matrix<T>{{q(R<T>(h + b), zero), z, z, z},
                       {z, q(R<T>(h - b), zero), cx<T>(zero, r), z},
                       {z, cx<T>(zero, nr), q(R<T>(b - h), zero), z},
                       {z, z, z, q(R<T>(nh - b), zero)}};
    m.Splus = Matrix<T>{{z, cx<T>(b, r), cx<T>(h, nr), z},
                        {z, z, z, cx<T>(h, r)},
                        {z, z, z, cx<T>(b, nr)},
                        {z, z, z, z}};
    m.Sminus = dagger(m.Splus);
    return m;
}

template <Scalar T>
ResidualReport verify_golden_fixtures(const SpinOperatorSet<T>& ops, Tolerance tol) {
    ResidualReport rep(tol);
    const auto printed = printed_one_particle(ops.params);
    const char* names[3] = {"S_x", "S_y", "S_z"};
    for (int i = 0; i < 3; ++i) {
        rep.add(std::string("fixture.") + names[i], std::string(names[i]) + " closed-form 4x4 matrix",
                max_abs_diff(ops.S[i], printed.S[i]));
        rep.add(std::string("hermitian.") + names[i], std::string(names[i]) + " = " + names[i] + "^dagger",
                max_abs_diff(ops.S[i], dagger(ops.S[i])));
        const T tr = trace(ops.S[i]);
        rep.add(std::string("traceless.") + names[i], std::string("tr ") + names[i] + " = 0",
                std::sqrt(ScalarTraits<T>::to_double(ScalarTraits<T>::abs2(tr))));
    }
    rep.add("fixture.S_plus", "S_+ closed-form 4x4 matrix", max_abs_diff(ops.Splus, printed.Splus));
    rep.add("fixture.S_minus", "S_- = (S_+)^dagger closed form", max_abs_diff(ops.Sminus, printed.Sminus));
    const R<T> t = ops.params.total();
    rep.add("casimir.S2", "S^2 = (3 (hbar+beta)^2 / 4) I",
            max_abs_diff(ops.S2, scaled_identity<T>(4, R<T>(3 * t * t / 4))));
    return rep;
}

template <Scalar T>
ResidualReport verify_subalgebras(const SpinOperatorSet<T>& ops, Tolerance tol) {
    ResidualReport rep(tol);
    const auto& p = ops.params;
    const T i = imag_unit<T>();
    const T hb = re<T>(p.hbar());
    const T be = re<T>(p.beta());
    const T tot = re<T>(p.total());
    const auto& A = ops.sub_S;
    const auto& B = ops.sub_Sprime;
    const auto& C = ops.sub_Scross;
    const auto& S = ops.S;
    const Matrix<T> zero(4, 4);
    const Matrix<T> id = Matrix<T>::identity(4);

    // ε_ijk X_k for the unique k, or zero when i = j.
    auto eps = [&](int a, int b, const std::array<Matrix<T>, 3>& X) {
        if (a == b) return zero;
        const int k = third_axis(a, b);
        return T(levi_civita(a, b, k)) * X[k];
    };
    auto delta_id = [&](int a, int b, const T& s) { return a == b ? s * id : zero; };

    double r30a = 0, r30b = 0, r30mix = 0, r30c = 0, r30d = 0, r30e = 0;
    double r31a = 0, r31b = 0, r31c = 0, r31d = 0, r31e = 0;
    double r33 = 0, r34 = 0, r36 = 0;
    for (int a = 0; a < 3; ++a) {
        r34 = std::max(r34, max_abs(commutator(S[a], ops.S2)));
        for (int b = 0; b < 3; ++b) {
            r30a = std::max(r30a, max_abs_diff(commutator(A[a], A[b]), i * hb * eps(a, b, A)));
            r30b = std::max(r30b, max_abs_diff(commutator(B[a], B[b]), i * be * eps(a, b, B)));
            r30mix = std::max(r30mix, max_abs(commutator(A[a], B[b])));
            r30c = std::max(r30c, max_abs_diff(commutator(A[a], C[b]) - commutator(A[b], C[a]), i * hb * eps(a, b, C)));
            r30d = std::max(r30d, max_abs_diff(commutator(B[a], C[b]) - commutator(B[b], C[a]), i * be * eps(a, b, C)));
            r30e = std::max(r30e, max_abs_diff(commutator(C[a], C[b]), i * be * eps(a, b, A) + i * hb * eps(a, b, B)));

            r31a = std::max(r31a, max_abs_diff(anticommutator(A[a], A[b]), delta_id(a, b, hb * hb * re<T>(R<T>(R<T>(1) / 2)))));
            r31b = std::max(r31b, max_abs_diff(anticommutator(B[a], B[b]), delta_id(a, b, be * be * re<T>(R<T>(R<T>(1) / 2)))));
            r31c = std::max(r31c, max_abs(anticommutator(A[a], C[b]) + anticommutator(A[b], C[a])));
            r31d = std::max(r31d, max_abs(anticommutator(B[a], C[b]) + anticommutator(B[b], C[a])));
            r31e = std::max(r31e, max_abs_diff(anticommutator(C[a], C[b]),
                                               delta_id(a, b, hb * be) - anticommutator(A[a], B[b]) - anticommutator(A[b], B[a])));

            r33 = std::max(r33, max_abs_diff(commutator(S[a], S[b]), i * tot * eps(a, b, S)));
            r36 = std::max(r36, max_abs_diff(anticommutator(S[a], S[b]), delta_id(a, b, tot * tot * re<T>(R<T>(R<T>(1) / 2)))));
        }
    }
    rep.add("lie.matter", "[S_i,S_j] = i hbar eps_ijk S_k (matter part)", r30a);
    rep.add("lie.geometry", "[S'_i,S'_j] = i beta eps_ijk S'_k", r30b);
    rep.add("lie.matter_geometry", "[S_i,S'_j] = 0", r30mix);
    rep.add("lie.matter_cross", "[S_i,X_j] - [S_j,X_i] = i hbar eps_ijk X_k", r30c);
    rep.add("lie.geometry_cross", "[S'_i,X_j] - [S'_j,X_i] = i beta eps_ijk X_k", r30d);
    rep.add("lie.cross", "[X_i,X_j] = i beta eps_ijk S_k + i hbar eps_ijk S'_k", r30e);
    rep.add("clifford.matter", "{S_i,S_j} = (hbar^2/2) delta_ij I", r31a);
    rep.add("clifford.geometry", "{S'_i,S'_j} = (beta^2/2) delta_ij I", r31b);
    rep.add("clifford.matter_cross", "{S_i,X_j} + {S_j,X_i} = 0", r31c);
    rep.add("clifford.geometry_cross", "{S'_i,X_j} + {S'_j,X_i} = 0", r31d);
    rep.add("clifford.cross", "{X_i,X_j} = hbar beta delta_ij I - {S_i,S'_j} - {S_j,S'_i}", r31e);
    rep.add("lie.total", "[S_i,S_j] = i (hbar+beta) eps_ijk S_k", r33);
    rep.add("casimir.commutes", "[S_i,S^2] = 0", r34);
    rep.add("clifford.total", "{S_i,S_j} = ((hbar+beta)^2/2) delta_ij I", r36);

    const Matrix<T>& Sz = S[2];
    rep.add("ladder.raise", "[S_z,S_+] = (hbar+beta) S_+", max_abs_diff(commutator(Sz, ops.Splus), tot * ops.Splus));
    rep.add("ladder.lower", "[S_z,S_-] = -(hbar+beta) S_-", max_abs_diff(commutator(Sz, ops.Sminus), T(-1) * tot * ops.Sminus));
    rep.add("ladder.plus_minus", "[S_+,S_-] = 2 (hbar+beta) S_z",
            max_abs_diff(commutator(ops.Splus, ops.Sminus), T(2) * tot * Sz));
    return rep;
}

template <Scalar T>
QubitBasis<T> eigenbasis(const SpinOperatorSet<T>& ops, Axis axis) {
    const auto& p = ops.params;
    const R<T> s = p.sqrt_delta();
    const R<T> ns = -s;
    const R<T> one(1), zero(0);
    const R<T> opd = R<T>(one + p.delta());
    const R<T> up = R<T>(p.total() / 2);
    const R<T> down = -up;
    const T z(0);
    const T i = imag_unit<T>();
    const std::string ax(axis_name(axis));
    auto v = [&](const char* name, Ket<T> raw, const R<T>& n2, const R<T>& ev) {
        return BasisVector<T>{std::string(name) + "_" + ax, std::move(raw), n2, ev};
    };

    switch (axis) {
        case Axis::z:
            return {axis, v("up", Ket<T>{T(1), z, z, z}, one, up), v("down", Ket<T>{z, z, z, T(1)}, one, down),
                    v("up_prime", Ket<T>{z, T(1), cx<T>(zero, ns), z}, opd, up),
                    v("down_prime", Ket<T>{z, cx<T>(zero, ns), T(1), z}, opd, down)};
        case Axis::y: {
            const R<T> n = R<T>(2 * opd);
            return {axis, v("up", Ket<T>{cx<T>(R<T>(-1), s), re<T>(ns), T(0) - i, z}, n, up),
                    v("down", Ket<T>{cx<T>(one, ns), re<T>(ns), T(0) - i, z}, n, down),
                    v("up_prime", Ket<T>{cx<T>(zero, ns), cx<T>(s, R<T>(-1)), z, T(1)}, n, up),
                    v("down_prime", Ket<T>{cx<T>(zero, ns), cx<T>(ns, one), z, T(1)}, n, down)};
        }
        case Axis::x: {
            const R<T> n = R<T>(2 * opd);
            return {axis, v("up", Ket<T>{cx<T>(one, ns), cx<T>(zero, ns), T(1), z}, n, up),
                    v("down", Ket<T>{cx<T>(one, ns), cx<T>(zero, s), T(-1), z}, n, down),
                    v("up_prime", Ket<T>{cx<T>(zero, ns), cx<T>(R<T>(-1), ns), z, T(-1)}, n, up),
                    v("down_prime", Ket<T>{cx<T>(zero, ns), cx<T>(one, s), z, T(-1)}, n, down)};
        }
    }
    throw DomainError("unknown axis");
}

template <Scalar T>
BraketTable<T> braket_table(const QubitBasis<T>& basis) {
    const auto m = basis.members();
    BraketTable<T> table;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            const T g = inner(m[a].raw, m[b].raw);
            if (ScalarTraits<T>::is_zero(g)) {
                table[a][b] = T(0);
                continue;
            }
            const R<T> n = ScalarTraits<T>::sqrt(R<T>(m[a].norm2 * m[b].norm2));
            table[a][b] = g * re<T>(R<T>(R<T>(1) / n));
        }
    return table;
}

template <Scalar T>
double braket_deviation(const BraketTable<T>& table) {
    Matrix<T> m(4, 4);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) m(a, b) = table[a][b];
    return max_abs_diff(m, Matrix<T>::identity(4));
}

template <Scalar T>
ResidualReport verify_eigenbases(const SpinOperatorSet<T>& ops, Tolerance tol) {
    ResidualReport rep(tol);
    const auto& p = ops.params;
    const R<T> t = p.total();
    const T casimir = re<T>(R<T>(3 * t * t / 4));
    QubitBasis<T> bases[3] = {eigenbasis(ops, Axis::x), eigenbasis(ops, Axis::y), eigenbasis(ops, Axis::z)};

    for (const auto& basis : bases) {
        const Matrix<T>& Si = ops.S[index_of(basis.axis)];
        for (const auto& v : basis.members()) {
            rep.add("eigen." + v.label, "S_i v = +-(hbar+beta)/2 v",
                    scaled_eigen_residual(Si, v.raw, v.norm2, re<T>(v.eigenvalue)));
            rep.add("casimir." + v.label, "S^2 v = 3(hbar+beta)^2/4 v", scaled_eigen_residual(ops.S2, v.raw, v.norm2, casimir));
            const R<T> claimed_gap = R<T>(norm2(v.raw) / v.norm2 - 1);
            rep.add("norm." + v.label, "claimed normalizer", std::abs(ScalarTraits<T>::to_double(claimed_gap)));
        }
        const std::string ax(axis_name(basis.axis));
        const R<T> up_gap = basis.up.eigenvalue - basis.up_prime.eigenvalue;
        const R<T> down_gap = basis.down.eigenvalue - basis.down_prime.eigenvalue;
        rep.add("degenerate_pairs_" + ax, "primed and unprimed partners share (S_i, S^2) eigenvalues",
                std::abs(ScalarTraits<T>::to_double(up_gap)) + std::abs(ScalarTraits<T>::to_double(down_gap)));
    }

    // z-basis orthonormality.
    rep.add("gram.z", "z eigenvectors orthonormal", braket_deviation(braket_table(bases[2])));

    // Same-axis pairs of opposite sign are orthogonal along x and y as well;
    // same-sign primed/unprimed overlaps are recorded for information.
    for (int ax = 0; ax < 2; ++ax) {
        const auto table = braket_table(bases[ax]);
        const std::string name(axis_name(bases[ax].axis));
        double opposite = 0;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                const bool a_up = a == 0 || a == 2;
                const bool b_up = b == 0 || b == 2;
                const double target = a == b ? 1.0 : 0.0;
                const T diff = table[a][b] - T(static_cast<int>(target));
                const double d = std::sqrt(ScalarTraits<T>::to_double(ScalarTraits<T>::abs2(diff)));
                if (a == b || a_up != b_up) opposite = std::max(opposite, d);
            }
        rep.add("gram." + name + ".unit_and_opposite_sign", "unit norms and opposite-sign orthogonality along " + name,
                opposite);
        const double same_sign = std::sqrt(ScalarTraits<T>::to_double(ScalarTraits<T>::abs2(table[0][2])));
        rep.add_info("gram." + name + ".same_sign_overlap", "|<<up|up'>>| along " + name + " (not orthogonal for delta > 0)",
                     same_sign);
    }

    // z-basis re-expressions of the x and y vectors, in raw form.
    const auto& zb = bases[2];
    const T i = imag_unit<T>();
    const R<T> s = p.sqrt_delta();
    const T is = cx<T>(R<T>(0), s);
    const T inv_opd = re<T>(R<T>(R<T>(1) / (1 + p.delta())));
    const Ket<T>& U = zb.up.raw;
    const Ket<T>& D = zb.down.raw;
    const Ket<T> mix = zb.up_prime.raw + is * zb.down_prime.raw;  // |↑′z⟩ + i√δ|↓′z⟩, raw
    const auto& yb = bases[1];
    const auto& xb = bases[0];
    auto reexpr = [&](const BasisVector<T>& lhs, const Ket<T>& rhs) {
        rep.add("reexpress." + lhs.label, "z-basis expansion of " + lhs.label, scaled_distance(lhs.raw, rhs, lhs.norm2));
    };
    reexpr(yb.up, (T(-1) + is) * U - i * zb.down_prime.raw);
    reexpr(yb.down, (T(1) - is) * U - i * zb.down_prime.raw);
    reexpr(yb.up_prime, D - is * U - ((i - re<T>(s)) * inv_opd) * mix);
    reexpr(yb.down_prime, D - is * U + ((i - re<T>(s)) * inv_opd) * mix);
    reexpr(xb.up, (T(1) - is) * U + zb.down_prime.raw);
    reexpr(xb.down, (T(1) - is) * U - zb.down_prime.raw);
    reexpr(xb.up_prime, T(-1) * D - is * U - ((T(1) + is) * inv_opd) * mix);
    reexpr(xb.down_prime, T(-1) * D - is * U + ((T(1) + is) * inv_opd) * mix);
    return rep;
}

template <Scalar T>
Matrix<T> eigenspace_projector(const SpinOperatorSet<T>& ops, Axis axis, Sign sign) {
    const R<T> scale = R<T>(R<T>(sign_value(sign)) / ops.params.total());  // ±Σ/2 = ±S/(ħ+β)
    return re<T>(R<T>(R<T>(1) / 2)) * Matrix<T>::identity(4) + re<T>(scale) * ops.S[index_of(axis)];
}

namespace {

template <Scalar T>
MeasurementRecord<T> outcome(const Ket<T>& state, const SpinOperatorSet<T>& ops, Axis axis, Sign sign) {
    Ket<T> projected = eigenspace_projector(ops, axis, sign) * state;
    R<T> prob = norm2(projected);
    const R<T> ev = R<T>(R<T>(sign_value(sign)) * ops.params.total() / 2);
    return MeasurementRecord<T>{axis, sign, ev, std::move(prob), std::move(projected), 2};
}

template <Scalar T>
void check_state(const Ket<T>& state) {
    if (state.dim() != 4) throw DimensionError("one-particle states have dimension 4");
    require_normalized(state);
}

}  // namespace

template <Scalar T>
std::vector<MeasurementRecord<T>> measure(const Ket<T>& state, const SpinOperatorSet<T>& ops, Axis axis,
                                          std::optional<std::uint64_t> seed) {
    check_state(state);
    if (seed) {
        MeasurementRng rng(*seed);
        return {measure_sampled(state, ops, axis, rng)};
    }
    return {outcome(state, ops, axis, Sign::up), outcome(state, ops, axis, Sign::down)};
}

template <Scalar T>
MeasurementRecord<T> measure_sampled(const Ket<T>& state, const SpinOperatorSet<T>& ops, Axis axis,
                                     MeasurementRng& rng) {
    check_state(state);
    auto up = outcome(state, ops, axis, Sign::up);
    if (rng.uniform() < ScalarTraits<T>::to_double(up.probability)) return up;
    return outcome(state, ops, axis, Sign::down);
}

template <Scalar T>
ConditionalProbability<T> conditional_probability(const SpinOperatorSet<T>& ops, Axis first_axis, Sign first_sign,
                                                  Axis second_axis, Sign second_sign, const T& alpha,
                                                  const T& alpha_prime) {
    const R<T> weight = R<T>(ScalarTraits<T>::abs2(alpha) + ScalarTraits<T>::abs2(alpha_prime));
    if constexpr (ScalarTraits<T>::exact) {
        if (weight != 1) throw DomainError("mixing coefficients must satisfy |a|^2 + |a'|^2 = 1");
    } else {
        if (std::abs(weight - 1.0) > kNormalizationSlack)
            throw DomainError("mixing coefficients must satisfy |a|^2 + |a'|^2 = 1");
    }
    const auto basis = eigenbasis(ops, first_axis);
    const BasisVector<T>& u = first_sign == Sign::up ? basis.up : basis.down;
    const BasisVector<T>& w = first_sign == Sign::up ? basis.up_prime : basis.down_prime;
    // α u/√n_u + α′ w/√n_w, rescaled by √n_u.
    const R<T> k = ScalarTraits<T>::sqrt(R<T>(u.norm2 / w.norm2));
    const Ket<T> psi = alpha * u.raw + (alpha_prime * re<T>(k)) * w.raw;
    const R<T> n = norm2(psi);
    if (!(n > 0)) throw DomainError("mixing produced the zero vector");
    const Ket<T> projected = eigenspace_projector(ops, second_axis, second_sign) * psi;
    return {R<T>(norm2(projected) / n), first_axis == second_axis};
}

template <Scalar T>
ResidualReport spin_flip_check(const SpinOperatorSet<T>& ops, const QubitBasis<T>& zb, Tolerance tol) {
    ResidualReport rep(tol);
    const auto& p = ops.params;
    const R<T> opd = R<T>(1 + p.delta());
    const T plus = cx<T>(p.hbar(), p.sqrt_hbar_beta());
    const T minus = cx<T>(p.hbar(), R<T>(-p.sqrt_hbar_beta()));

    auto flip = [&](const std::string& label, const std::string& anchor, const Matrix<T>& op, const BasisVector<T>& from,
                    const T& z, const BasisVector<T>& to) {
        const auto r = flip_residuals<T>(op, from.raw, from.norm2, {FlipTarget<T>{z, to.raw, to.norm2}}, opd);
        rep.add("flip." + label, anchor, r.state);
        rep.add("flip_coefficient." + label, "coefficient sqrt(1+delta)(hbar +- i sqrt(hbar beta))", r.coefficient);
    };
    flip("minus_up", "S_- |up_z> = sqrt(1+delta)(hbar + i sqrt(hbar beta)) |down'_z>", ops.Sminus, zb.up, plus, zb.down_prime);
    flip("minus_up_prime", "S_- |up'_z> = sqrt(1+delta)(hbar - i sqrt(hbar beta)) |down_z>", ops.Sminus, zb.up_prime, minus,
         zb.down);
    flip("plus_down", "S_+ |down_z> = sqrt(1+delta)(hbar + i sqrt(hbar beta)) |up'_z>", ops.Splus, zb.down, plus, zb.up_prime);
    flip("plus_down_prime", "S_+ |down'_z> = sqrt(1+delta)(hbar - i sqrt(hbar beta)) |up_z>", ops.Splus, zb.down_prime, minus,
         zb.up);

    auto kills = [&](const std::string& label, const Matrix<T>& op, const BasisVector<T>& v) {
        rep.add("annihilate." + label, "ladder operator annihilates its own eigenvectors",
                scaled_distance(Ket<T>(op * v.raw), Ket<T>(v.raw.dim()), v.norm2));
    };
    kills("plus_up", ops.Splus, zb.up);
    kills("plus_up_prime", ops.Splus, zb.up_prime);
    kills("minus_down", ops.Sminus, zb.down);
    kills("minus_down_prime", ops.Sminus, zb.down_prime);
    return rep;
}

UncertaintyReport gur_report(const Ket<Complex>& state, const SpinOperatorSet<Complex>& ops) {
    if (state.dim() != 4) throw DimensionError("one-particle states have dimension 4");
    require_normalized(state);
    UncertaintyReport rep;
    auto sym = [&](const Matrix<Complex>& a, const Matrix<Complex>& b) {
        return (covariance(a, b, state) + covariance(b, a, state)).real();
    };
    for (int k = 0; k < 3; ++k) {
        auto& u = rep.axes[k];
        u.variance_direct = variance(ops.S[k], state);
        u.delta_S = std::sqrt(std::max(0.0, u.variance_direct));
        u.var_matter = variance(ops.sub_S[k], state);
        u.var_geometry = variance(ops.sub_Sprime[k], state);
        u.var_cross = variance(ops.sub_Scross[k], state);
        u.cov_matter_cross = sym(ops.sub_S[k], ops.sub_Scross[k]);
        u.cov_geometry_cross = sym(ops.sub_Sprime[k], ops.sub_Scross[k]);
        u.cov_matter_geometry = sym(ops.sub_S[k], ops.sub_Sprime[k]);
        u.sum_without_matter_geometry = u.var_matter + u.var_geometry + u.var_cross + u.cov_matter_cross + u.cov_geometry_cross;
        u.sum_full = u.sum_without_matter_geometry + u.cov_matter_geometry;
        u.residual_full = std::abs(u.variance_direct - u.sum_full);
        u.residual_without_matter_geometry = std::abs(u.variance_direct - u.sum_without_matter_geometry);
        rep.max_residual_full = std::max(rep.max_residual_full, u.residual_full);
        rep.max_matter_geometry_cov = std::max(rep.max_matter_geometry_cov, std::abs(u.cov_matter_geometry));
    }
    const double half_total = ops.params.total() / 2;
    const Axis pairs[3][3] = {{Axis::x, Axis::y, Axis::z}, {Axis::y, Axis::z, Axis::x}, {Axis::z, Axis::x, Axis::y}};
    rep.robertson_satisfied = true;
    for (int n = 0; n < 3; ++n) {
        auto& r = rep.robertson[n];
        r.a = pairs[n][0];
        r.b = pairs[n][1];
        r.product = rep.axes[index_of(r.a)].delta_S * rep.axes[index_of(r.b)].delta_S;
        r.bound = half_total * std::abs(expectation(ops.S[index_of(pairs[n][2])], state).real());
        // Equality is attained by eigenstates; allow rounding at that edge.
        r.satisfied = r.product >= r.bound - 1e-12 * std::max(1.0, r.bound);
        rep.robertson_satisfied = rep.robertson_satisfied && r.satisfied;
    }
    return rep;
}

#define SMEARLAB_INSTANTIATE(T)                                                                                     \
    template Subcomponents<T> spin_subcomponents<T>(const real_t<T>&, const real_t<T>&, const real_t<T>&);          \
    template SpinOperatorSet<T> build_one_particle<T>(const SmearingParams<T>&);                                    \
    template PrintedOneParticle<T> printed_one_particle<T>(const SmearingParams<T>&);                               \
    template ResidualReport verify_golden_fixtures<T>(const SpinOperatorSet<T>&, Tolerance);                        \
    template ResidualReport verify_subalgebras<T>(const SpinOperatorSet<T>&, Tolerance);                            \
    template QubitBasis<T> eigenbasis<T>(const SpinOperatorSet<T>&, Axis);                                          \
    template ResidualReport verify_eigenbases<T>(const SpinOperatorSet<T>&, Tolerance);                             \
    template BraketTable<T> braket_table<T>(const QubitBasis<T>&);                                                  \
    template double braket_deviation<T>(const BraketTable<T>&);                                                     \
    template Matrix<T> eigenspace_projector<T>(const SpinOperatorSet<T>&, Axis, Sign);                              \
    template std::vector<MeasurementRecord<T>> measure<T>(const Ket<T>&, const SpinOperatorSet<T>&, Axis,           \
                                                          std::optional<std::uint64_t>);                            \
    template MeasurementRecord<T> measure_sampled<T>(const Ket<T>&, const SpinOperatorSet<T>&, Axis,                \
                                                     MeasurementRng&);                                              \
    template ConditionalProbability<T> conditional_probability<T>(const SpinOperatorSet<T>&, Axis, Sign, Axis, Sign, \
                                                                  const T&, const T&);                              \
    template ResidualReport spin_flip_check<T>(const SpinOperatorSet<T>&, const QubitBasis<T>&, Tolerance);

SMEARLAB_INSTANTIATE(Complex)
SMEARLAB_INSTANTIATE(ComplexRational)

}  // namespace smearlab
