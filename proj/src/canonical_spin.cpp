#include "smearlab/canonical_spin.hpp"

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
PairVector<T> pair(std::string label, Ket<T> raw, R<T> norm2, R<T> sz, R<T> s2) {
    return {std::move(label), std::move(raw), std::move(norm2), std::move(sz), std::move(s2)};
}

}  // namespace

template <Scalar T>
CanonicalOperators<T> build_canonical(const R<T>& hbar) {
    if (!(hbar > 0)) throw DomainError("hbar must be positive");
    const auto sigma = pauli_matrices<T>();
    const T half_hbar = re<T>(R<T>(hbar / 2));
    const T i = imag_unit<T>();
    const auto id2 = Matrix<T>::identity(2);

    CanonicalOperators<T> c;
    c.hbar = hbar;
    c.pauli = sigma;
    for (int k = 0; k < 3; ++k) c.s[k] = half_hbar * sigma[k];
    c.s2 = c.s[0] * c.s[0] + c.s[1] * c.s[1] + c.s[2] * c.s[2];
    c.s_plus = c.s[0] + i * c.s[1];
    c.s_minus = c.s[0] - i * c.s[1];

    for (int k = 0; k < 3; ++k) {
        c.s_a[k] = kron(c.s[k], id2);
        c.s_b[k] = kron(id2, c.s[k]);
        c.s_total[k] = c.s_a[k] + c.s_b[k];
    }
    c.s2_total = c.s_total[0] * c.s_total[0] + c.s_total[1] * c.s_total[1] + c.s_total[2] * c.s_total[2];
    c.s_plus_total = c.s_total[0] + i * c.s_total[1];
    c.s_minus_total = c.s_total[0] - i * c.s_total[1];
    return c;
}

template <Scalar T>
std::array<BasisVector<T>, 2> canonical_eigenbasis(Axis axis, const R<T>& hbar) {
    if (!(hbar > 0)) throw DomainError("hbar must be positive");
    const T i = imag_unit<T>();
    const R<T> up = hbar / 2;
    const R<T> down = -hbar / 2;
    switch (axis) {
        case Axis::x:
            return {BasisVector<T>{"up_x", Ket<T>{T(1), T(1)}, R<T>(2), up},
                    BasisVector<T>{"down_x", Ket<T>{T(1), T(-1)}, R<T>(2), down}};
        case Axis::y:
            return {BasisVector<T>{"up_y", Ket<T>{T(1), i}, R<T>(2), up},
                    BasisVector<T>{"down_y", Ket<T>{T(1), T(0) - i}, R<T>(2), down}};
        case Axis::z:
            break;
    }
    return {BasisVector<T>{"up_z", Ket<T>{T(1), T(0)}, R<T>(1), up},
            BasisVector<T>{"down_z", Ket<T>{T(0), T(1)}, R<T>(1), down}};
}

template <Scalar T>
std::array<PairVector<T>, 4> canonical_bell_states(Axis axis, const R<T>& hbar) {
    const auto basis = canonical_eigenbasis<T>(axis, hbar);
    const Ket<T>& u = basis[0].raw;
    const Ket<T>& d = basis[1].raw;
    const R<T> n = R<T>(2 * basis[0].norm2 * basis[1].norm2);
    const R<T> zero(0);
    const R<T> triplet = R<T>(2 * hbar * hbar);
    const std::string ax(axis_name(axis));
    return {pair<T>("Psi+_" + ax, kron(u, d) + kron(d, u), n, zero, triplet),
            pair<T>("Psi-_" + ax, kron(u, d) - kron(d, u), n, zero, zero),
            pair<T>("Phi+_" + ax, kron(u, u) + kron(d, d), n, zero, triplet),
            pair<T>("Phi-_" + ax, kron(u, u) - kron(d, d), n, zero, triplet)};
}

template <Scalar T>
CanonicalTwoParticle<T> canonical_two_particle(const R<T>& hbar) {
    CanonicalTwoParticle<T> c{build_canonical<T>(hbar), {}, {}, {}};
    const R<T> triplet = R<T>(2 * hbar * hbar);
    c.triplet = {pair<T>("Psi1", Ket<T>::basis(4, 0), R<T>(1), hbar, triplet),
                 pair<T>("Psi2", Ket<T>::basis(4, 3), R<T>(1), R<T>(-hbar), triplet),
                 pair<T>("Psi3", Ket<T>{T(0), T(1), T(1), T(0)}, R<T>(2), R<T>(0), triplet)};
    c.singlet = pair<T>("Phi", Ket<T>{T(0), T(-1), T(1), T(0)}, R<T>(2), R<T>(0), R<T>(0));
    c.bell = canonical_bell_states<T>(Axis::z, hbar);
    return c;
}

template <Scalar T>
ResidualReport verify_canonical(const CanonicalTwoParticle<T>& c, Tolerance tol) {
    ResidualReport rep(tol);
    const auto& o = c.ops;
    const T i = imag_unit<T>();
    const T hb = re<T>(o.hbar);
    const auto id2 = Matrix<T>::identity(2);

    double lie = 0, clifford = 0, lie2 = 0;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            Matrix<T> expect(2, 2);
            Matrix<T> expect2(4, 4);
            if (a != b) {
                const int k = third_axis(a, b);
                expect = T(levi_civita(a, b, k)) * i * hb * o.s[k];
                expect2 = T(levi_civita(a, b, k)) * i * hb * o.s_total[k];
            }
            lie = std::max(lie, max_abs_diff(commutator(o.s[a], o.s[b]), expect));
            lie2 = std::max(lie2, max_abs_diff(commutator(o.s_total[a], o.s_total[b]), expect2));
            const Matrix<T> cl = a == b ? re<T>(R<T>(o.hbar * o.hbar / 2)) * id2 : Matrix<T>(2, 2);
            clifford = std::max(clifford, max_abs_diff(anticommutator(o.s[a], o.s[b]), cl));
        }
    rep.add("canonical.lie", "[s_i,s_j] = i hbar eps_ijk s_k", lie);
    rep.add("canonical.clifford", "{s_i,s_j} = (hbar^2/2) delta_ij I", clifford);
    rep.add("canonical.casimir", "s^2 = (3 hbar^2/4) I", max_abs_diff(o.s2, re<T>(R<T>(3 * o.hbar * o.hbar / 4)) * id2));
    rep.add("canonical.s_plus_matrix", "s_+ = hbar [[0,1],[0,0]]",
            max_abs_diff(o.s_plus, Matrix<T>{{T(0), hb}, {T(0), T(0)}}));
    rep.add("canonical.pair_lie", "[s_i,s_j] = i hbar eps_ijk s_k (two particles)", lie2);

    const T h2 = hb * hb;
    const Matrix<T> s2_printed{{T(2) * h2, T(0), T(0), T(0)},
                               {T(0), h2, h2, T(0)},
                               {T(0), h2, h2, T(0)},
                               {T(0), T(0), T(0), T(2) * h2}};
    rep.add("canonical.pair_s2_matrix", "two-particle s^2 matrix", max_abs_diff(o.s2_total, s2_printed));
    const Matrix<T> sp_printed{{T(0), hb, hb, T(0)}, {T(0), T(0), T(0), hb}, {T(0), T(0), T(0), hb}, {T(0), T(0), T(0), T(0)}};
    rep.add("canonical.pair_s_plus_matrix", "two-particle s_+ matrix", max_abs_diff(o.s_plus_total, sp_printed));
    rep.add("canonical.pair_s_minus_matrix", "s_- = (s_+)^dagger", max_abs_diff(o.s_minus_total, dagger(sp_printed)));

    auto eigen = [&](const PairVector<T>& v) {
        const double a = scaled_eigen_residual(o.s_total[2], v.raw, v.norm2, re<T>(v.s_axis));
        const double b = scaled_eigen_residual(o.s2_total, v.raw, v.norm2, re<T>(v.s2));
        rep.add("canonical.eigen." + v.label, "s_z and s^2 eigenvalues", std::max(a, b));
    };
    for (const auto& v : c.triplet) eigen(v);
    eigen(c.singlet);

    // Flip table on the product basis ↑↑, ↑↓, ↓↑, ↓↓ = e0..e3.
    const auto e = [](std::size_t k) { return Ket<T>::basis(4, k); };
    const Ket<T> zero(4);
    auto flip = [&](const std::string& label, const Matrix<T>& op, std::size_t from, const Ket<T>& to) {
        rep.add("canonical.flip." + label, "two-particle spin flip table", norm_of(Ket<T>(op * e(from) - to)));
    };
    flip("minus_upup", o.s_minus_total, 0, hb * (e(1) + e(2)));
    flip("minus_updown", o.s_minus_total, 1, hb * e(3));
    flip("minus_downup", o.s_minus_total, 2, hb * e(3));
    flip("minus_downdown", o.s_minus_total, 3, zero);
    flip("plus_upup", o.s_plus_total, 0, zero);
    flip("plus_updown", o.s_plus_total, 1, hb * e(0));
    flip("plus_downup", o.s_plus_total, 2, hb * e(0));
    flip("plus_downdown", o.s_plus_total, 3, hb * (e(1) + e(2)));

    // Same-axis eigenvectors are orthonormal.
    for (Axis ax : kAxes) {
        const auto b = canonical_eigenbasis<T>(ax, o.hbar);
        double worst = 0;
        for (int p = 0; p < 2; ++p)
            for (int q = 0; q < 2; ++q) {
                const T g = inner(b[p].raw, b[q].raw);
                // Normalized Gram entry squared: |g|²/(n_p n_q) against δ_pq.
                const R<T> g2 = R<T>(ScalarTraits<T>::abs2(g) / (b[p].norm2 * b[q].norm2));
                const R<T> target = p == q ? R<T>(1) : R<T>(0);
                const R<T> diff = g2 - target;
                worst = std::max(worst, std::abs(ScalarTraits<T>::to_double(diff)));
            }
        rep.add("canonical.braket_" + std::string(axis_name(ax)), "same-axis eigenvectors orthonormal", worst);
    }
    return rep;
}

template <Scalar T>
Matrix<T> embed_matter(const Matrix<T>& op) {
    return kron(op, Matrix<T>::identity(2));
}

template <Scalar T>
Matrix<T> embed_matter_pair(const Matrix<T>& op) {
    if (op.rows() != 4 || op.cols() != 4) throw DimensionError("embed_matter_pair expects a 4x4 operator");
    Matrix<T> out(16, 16);
    // Index of (matter_a, geo_a, matter_b, geo_b) in the smeared pair space.
    auto idx = [](int ma, int ga, int mb, int gb) { return static_cast<std::size_t>(8 * ma + 4 * ga + 2 * mb + gb); };
    for (int ga = 0; ga < 2; ++ga)
        for (int gb = 0; gb < 2; ++gb)
            for (int r = 0; r < 4; ++r)
                for (int s = 0; s < 4; ++s)
                    out(idx(r / 2, ga, r % 2, gb), idx(s / 2, ga, s % 2, gb)) = op(r, s);
    return out;
}

template <Scalar T>
Ket<T> embed_matter_pair_state(const Ket<T>& matter, int geometry_a, int geometry_b) {
    if (matter.dim() != 4) throw DimensionError("embed_matter_pair_state expects a 4-dim state");
    Ket<T> out(16);
    for (int r = 0; r < 4; ++r) out[8 * (r / 2) + 4 * geometry_a + 2 * (r % 2) + geometry_b] = matter[r];
    return out;
}

#define SMEARLAB_INSTANTIATE(T)                                                                       \
    template CanonicalOperators<T> build_canonical<T>(const real_t<T>&);                              \
    template std::array<BasisVector<T>, 2> canonical_eigenbasis<T>(Axis, const real_t<T>&);          \
    template std::array<PairVector<T>, 4> canonical_bell_states<T>(Axis, const real_t<T>&);           \
    template CanonicalTwoParticle<T> canonical_two_particle<T>(const real_t<T>&);                     \
    template ResidualReport verify_canonical<T>(const CanonicalTwoParticle<T>&, Tolerance);           \
    template Matrix<T> embed_matter<T>(const Matrix<T>&);                                             \
    template Matrix<T> embed_matter_pair<T>(const Matrix<T>&);                                        \
    template Ket<T> embed_matter_pair_state<T>(const Ket<T>&, int, int);

SMEARLAB_INSTANTIATE(Complex)
SMEARLAB_INSTANTIATE(ComplexRational)

}  // namespace smearlab
