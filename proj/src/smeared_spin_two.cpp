#include "smearlab/smeared_spin_two.hpp"

#include <cmath>
#include <string>

#include "smearlab/pair_fixture_tables.hpp"

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
Ket<T> sparse_ket(std::initializer_list<std::pair<int, T>> entries) {
    Ket<T> k(16);
    for (const auto& [idx, v] : entries) k[idx] = v;
    return k;
}

const char* const kMemberNames[4] = {"a", "b", "c", "d"};

// Worst Lie residual of a triple against [X_i, X_j] = i(ħ+β) ε_ijk X_k.
template <Scalar T>
double lie_residual(const std::array<Matrix<T>, 3>& X, const R<T>& total) {
    const T ih = cx<T>(R<T>(0), total);
    double worst = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) {
                worst = std::max(worst, max_abs(commutator(X[i], X[j])));
                continue;
            }
            const int k = third_axis(i, j);
            worst = std::max(worst, max_abs_diff(commutator(X[i], X[j]), T(levi_civita(i, j, k)) * ih * X[k]));
        }
    return worst;
}

template <Scalar T>
T gaussian(const std::array<int, 2>& c) {
    return cx<T>(R<T>(c[0]), R<T>(c[1]));
}

template <Scalar T>
Matrix<T> evaluate_table(const std::vector<fixtures::PrintedEntry>& table, const SmearingParams<T>& p, int power) {
    const R<T> opd = R<T>(1 + p.delta());
    // (ħ+β)/(1+δ) or (ħ+β)²/(1+δ), times the entry's own 1/(1+δ).
    R<T> pref = power == 2 ? R<T>(p.total() * p.total()) : p.total();
    pref = R<T>(pref / (opd * opd));
    Matrix<T> m(16, 16);
    for (const auto& e : table) {
        T acc(0);
        R<T> dk(1);
        for (int k = 0; k < 4; ++k) {
            acc += gaussian<T>(e.a[k]) * re<T>(dk);
            if (k < 3) acc += gaussian<T>(e.b[k]) * re<T>(R<T>(dk * p.sqrt_delta()));
            dk = R<T>(dk * p.delta());
        }
        m(e.row, e.col) = re<T>(pref) * acc;
    }
    return m;
}

// Same-sign tolerance for comparing printed entries with each other.
template <Scalar T>
bool entries_agree(const T& a, const T& b) {
    const double d = std::sqrt(ScalarTraits<T>::to_double(ScalarTraits<T>::abs2(a - b)));
    return ScalarTraits<T>::exact ? d == 0.0 : d <= 1e-12;
}

template <Scalar T>
double entry_distance(const T& a, const T& b) {
    return std::sqrt(ScalarTraits<T>::to_double(ScalarTraits<T>::abs2(a - b)));
}

// Product-form pieces over the one-particle z basis (U, D, U′, D′).
struct ProductTerm {
    int coeff_kind;  // 0: +1, 1: −1, 2: +c, 3: −c with c = (1 − i√δ)²
    int left;        // index into (U, D, U′, D′)
    int right;
};

// Each family member as a sum of A⊗B products of one-particle z vectors.
const std::vector<ProductTerm> kProducts[4][4] = {
    // Ψ1: U⊗U, U′⊗U, U⊗U′, U′⊗U′
    {{{0, 0, 0}}, {{0, 2, 0}}, {{0, 0, 2}}, {{0, 2, 2}}},
    // Ψ2: D⊗D, D′⊗D, D⊗D′, D′⊗D′
    {{{0, 1, 1}}, {{0, 3, 1}}, {{0, 1, 3}}, {{0, 3, 3}}},
    // Ψ3: U′⊗D + D⊗U′, U⊗D′ + D′⊗U, U′⊗D′ + c D⊗U, D′⊗U′ + c U⊗D
    {{{0, 2, 1}, {0, 1, 2}}, {{0, 0, 3}, {0, 3, 0}}, {{0, 2, 3}, {2, 1, 0}}, {{0, 3, 2}, {2, 0, 1}}},
    // Φ: the antisymmetric partners
    {{{0, 2, 1}, {1, 1, 2}}, {{0, 0, 3}, {1, 3, 0}}, {{0, 2, 3}, {3, 1, 0}}, {{0, 3, 2}, {3, 0, 1}}},
};

}  // namespace

std::string_view family_name(Family f) {
    switch (f) {
        case Family::psi1: return "psi1";
        case Family::psi2: return "psi2";
        case Family::psi3: return "psi3";
        case Family::phi: return "phi";
    }
    return "?";
}

template <Scalar T>
TwoParticleOperators<T> build_two_particle(const SmearingParams<T>& params) {
    TwoParticleOperators<T> ops{build_one_particle(params), {}, {}, {}, {}, {}, {}};
    const auto id4 = Matrix<T>::identity(4);
    for (int i = 0; i < 3; ++i) {
        ops.S_A[i] = kron(ops.one.S[i], id4);
        ops.S_B[i] = kron(id4, ops.one.S[i]);
        ops.S[i] = ops.S_A[i] + ops.S_B[i];
    }
    ops.S2 = ops.S[0] * ops.S[0] + ops.S[1] * ops.S[1] + ops.S[2] * ops.S[2];
    const T i = imag_unit<T>();
    ops.Splus = ops.S[0] + i * ops.S[1];
    ops.Sminus = ops.S[0] - i * ops.S[1];
    return ops;
}

template <Scalar T>
EigenFamilies<T> eigenfamilies(const TwoParticleOperators<T>& ops) {
    const auto& p = ops.params();
    const R<T> d = p.delta();
    const R<T> s = p.sqrt_delta();
    const R<T> opd = R<T>(1 + d);
    const R<T> opd2 = R<T>(opd * opd);
    const R<T> two_opd = R<T>(2 * opd);
    const R<T> two_opd2 = R<T>(2 * opd2);
    const R<T> total = p.total();
    const R<T> cas = R<T>(2 * total * total);
    const R<T> zero(0);

    const T one(1);
    const T m1(-1);
    const T mis = cx<T>(zero, R<T>(-s));  // −i√δ
    const T pis = cx<T>(zero, s);         // +i√δ
    const T md = re<T>(R<T>(-d));         // −δ
    const T c = (one + mis) * (one + mis);  // (1 − i√δ)²
    const T mc = T(0) - c;

    auto pv = [](Family f, int m, Ket<T> raw, R<T> n2, R<T> sz, R<T> s2) {
        return PairVector<T>{std::string(family_name(f)) + "." + kMemberNames[m], std::move(raw), std::move(n2),
                             std::move(sz), std::move(s2)};
    };

    EigenFamilies<T> fam;
    fam.axis = Axis::z;
    const R<T> up = total;
    const R<T> down = R<T>(-total);
    fam.members[0] = {pv(Family::psi1, 0, sparse_ket<T>({{0, one}}), R<T>(1), up, cas),
                      pv(Family::psi1, 1, sparse_ket<T>({{4, one}, {8, mis}}), opd, up, cas),
                      pv(Family::psi1, 2, sparse_ket<T>({{1, one}, {2, mis}}), opd, up, cas),
                      pv(Family::psi1, 3, sparse_ket<T>({{5, one}, {6, mis}, {9, mis}, {10, md}}), opd2, up, cas)};
    fam.members[1] = {pv(Family::psi2, 0, sparse_ket<T>({{15, one}}), R<T>(1), down, cas),
                      pv(Family::psi2, 1, sparse_ket<T>({{7, mis}, {11, one}}), opd, down, cas),
                      pv(Family::psi2, 2, sparse_ket<T>({{13, mis}, {14, one}}), opd, down, cas),
                      pv(Family::psi2, 3, sparse_ket<T>({{5, md}, {6, mis}, {9, mis}, {10, one}}), opd2, down, cas)};
    fam.members[2] = {
        pv(Family::psi3, 0, sparse_ket<T>({{7, one}, {11, mis}, {13, one}, {14, mis}}), two_opd, zero, cas),
        pv(Family::psi3, 1, sparse_ket<T>({{1, mis}, {2, one}, {4, mis}, {8, one}}), two_opd, zero, cas),
        pv(Family::psi3, 2, sparse_ket<T>({{5, mis}, {6, one}, {9, md}, {10, mis}, {12, c}}), two_opd2, zero, cas),
        pv(Family::psi3, 3, sparse_ket<T>({{3, c}, {5, mis}, {6, md}, {9, one}, {10, mis}}), two_opd2, zero, cas)};
    fam.members[3] = {
        pv(Family::phi, 0, sparse_ket<T>({{7, one}, {11, mis}, {13, m1}, {14, pis}}), two_opd, zero, zero),
        pv(Family::phi, 1, sparse_ket<T>({{1, mis}, {2, one}, {4, pis}, {8, m1}}), two_opd, zero, zero),
        pv(Family::phi, 2, sparse_ket<T>({{5, mis}, {6, one}, {9, md}, {10, mis}, {12, mc}}), two_opd2, zero, zero),
        pv(Family::phi, 3, sparse_ket<T>({{3, mc}, {5, mis}, {6, md}, {9, one}, {10, mis}}), two_opd2, zero, zero)};
    return fam;
}

template <Scalar T>
Matrix<T> pair_rotation_to(const TwoParticleOperators<T>& ops, Axis axis) {
    if (axis == Axis::z) return Matrix<T>::identity(16);
    const T i = imag_unit<T>();
    const T scale = re<T>(R<T>(R<T>(2) / ops.params().total()));
    const auto id4 = Matrix<T>::identity(4);
    // 𝕀 ∓ iΣ without the 1/√2; the two factors of 1/√2 combine to 1/2.
    const Matrix<T> u = axis == Axis::x ? Matrix<T>(id4 - i * scale * ops.one.S[1]) : Matrix<T>(id4 + i * scale * ops.one.S[0]);
    return re<T>(R<T>(R<T>(1) / 2)) * kron(u, u);
}

template <Scalar T>
EigenFamilies<T> eigenfamilies_along(const TwoParticleOperators<T>& ops, Axis axis) {
    EigenFamilies<T> fam = eigenfamilies(ops);
    if (axis == Axis::z) return fam;
    const Matrix<T> rot = pair_rotation_to(ops, axis);
    fam.axis = axis;
    for (auto& members : fam.members)
        for (auto& m : members) {
            m.raw = rot * m.raw;
            m.label = std::string(axis_name(axis)) + "." + m.label;
        }
    return fam;
}

template <Scalar T>
PhysicalState<T> physical_state(const EigenFamilies<T>& families, Family family, const std::array<T, 4>& coefficients) {
    R<T> sum(0);
    for (const auto& a : coefficients) sum = R<T>(sum + ScalarTraits<T>::abs2(a));
    const double dev = std::abs(ScalarTraits<T>::to_double(R<T>(sum - 1)));
    if (ScalarTraits<T>::exact ? dev != 0.0 : dev > kNormalizationSlack)
        throw NormalizationError("family coefficients must satisfy sum |alpha|^2 = 1");

    const auto& members = families[family];
    int ref = 0;
    while (ScalarTraits<T>::is_zero(coefficients[ref])) ++ref;
    const R<T>& n_ref = members[ref].norm2;

    Ket<T> raw(16);
    for (int k = 0; k < 4; ++k) {
        if (ScalarTraits<T>::is_zero(coefficients[k])) continue;
        const R<T> ratio = ScalarTraits<T>::sqrt(R<T>(n_ref / members[k].norm2));
        raw += (coefficients[k] * re<T>(ratio)) * members[k].raw;
    }
    const auto& lead = members[ref];
    return {family, coefficients,
            PairVector<T>{std::string(family_name(family)) + ".physical", std::move(raw), n_ref, lead.s_axis, lead.s2}};
}

template <Scalar T>
FamilyCoefficients<T> default_family_coefficients() {
    FamilyCoefficients<T> c{};
    for (auto& f : c) f = {T(1), T(0), T(0), T(0)};
    return c;
}

template <Scalar T>
std::array<PairVector<T>, 4> bell_states(const TwoParticleOperators<T>& ops, Axis axis,
                                         const FamilyCoefficients<T>& coefficients) {
    const auto fam = eigenfamilies_along(ops, axis);
    const auto psi1 = physical_state(fam, Family::psi1, coefficients[0]).vector;
    const auto psi2 = physical_state(fam, Family::psi2, coefficients[1]).vector;
    auto psi_plus = physical_state(fam, Family::psi3, coefficients[2]).vector;
    auto psi_minus = physical_state(fam, Family::phi, coefficients[3]).vector;

    // (Ψ1 ± Ψ2)/√2 on raw vectors: raw1 ± √(n1/n2) raw2 with norm² 2·n1.
    const R<T> ratio = ScalarTraits<T>::sqrt(R<T>(psi1.norm2 / psi2.norm2));
    const Ket<T> scaled2 = re<T>(ratio) * psi2.raw;
    const R<T> n = R<T>(2 * psi1.norm2);
    // s_axis holds ⟨S_axis⟩, which is 0 for Φ±; they are not S_axis eigenvectors.
    PairVector<T> phi_plus{"Phi+", psi1.raw + scaled2, n, R<T>(0), psi1.s2};
    PairVector<T> phi_minus{"Phi-", psi1.raw - scaled2, n, R<T>(0), psi1.s2};
    psi_plus.label = "Psi+";
    psi_minus.label = "Psi-";
    const std::string prefix = std::string(axis_name(axis)) + ".";
    std::array<PairVector<T>, 4> out{psi_plus, psi_minus, phi_plus, phi_minus};
    for (auto& v : out) v.label = prefix + v.label;
    return out;
}

template <Scalar T>
ResidualReport verify_two_particle_operators(const TwoParticleOperators<T>& ops, Tolerance tol) {
    ResidualReport rep(tol);
    const auto& p = ops.params();
    const R<T> total = p.total();
    const T i = imag_unit<T>();

    rep.add("lie.particle_A", "[S_Ai, S_Aj] = i(hbar+beta) eps_ijk S_Ak", lie_residual(ops.S_A, total));
    rep.add("lie.particle_B", "[S_Bi, S_Bj] = i(hbar+beta) eps_ijk S_Bk", lie_residual(ops.S_B, total));
    rep.add("lie.total", "[S_i, S_j] = i(hbar+beta) eps_ijk S_k", lie_residual(ops.S, total));

    double mutual = 0;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) mutual = std::max(mutual, max_abs(commutator(ops.S_A[a], ops.S_B[b])));
    rep.add("commute.A_B", "[S_Ai, S_Bj] = 0", mutual);

    double cas = 0;
    for (int k = 0; k < 3; ++k) cas = std::max(cas, max_abs(commutator(ops.S[k], ops.S2)));
    rep.add("casimir.commutes", "[S_i, S^2] = 0", cas);

    Matrix<T> assembled(16, 16);
    for (int k = 0; k < 3; ++k)
        assembled += ops.S_A[k] * ops.S_A[k] + ops.S_B[k] * ops.S_B[k] + T(2) * (ops.S_A[k] * ops.S_B[k]);
    rep.add("s2.assembled", "S^2 = S_A^2 + S_B^2 + 2 S_A.S_B", max_abs_diff(ops.S2, assembled));

    double herm = max_abs_diff(ops.S2, dagger(ops.S2));
    for (int k = 0; k < 3; ++k) herm = std::max(herm, max_abs_diff(ops.S[k], dagger(ops.S[k])));
    rep.add("hermitian", "S_i and S^2 are Hermitian", herm);
    rep.add("ladder.adjoint", "S_- = S_+^dagger", max_abs_diff(ops.Sminus, dagger(ops.Splus)));
    rep.add("ladder.definition", "S_+ = S_x + i S_y", max_abs_diff(ops.Splus, ops.S[0] + i * ops.S[1]));
    const T h = re<T>(total);
    rep.add("ladder.raise", "[S_z, S_+] = (hbar+beta) S_+", max_abs_diff(commutator(ops.S[2], ops.Splus), h * ops.Splus));
    rep.add("ladder.lower", "[S_z, S_-] = -(hbar+beta) S_-",
            max_abs_diff(commutator(ops.S[2], ops.Sminus), T(-1) * h * ops.Sminus));
    rep.add("ladder.commutator", "[S_+, S_-] = 2(hbar+beta) S_z",
            max_abs_diff(commutator(ops.Splus, ops.Sminus), T(2) * h * ops.S[2]));

    rep.add("fixture.Sz", "closed-form 16x16 S_z", max_abs_diff(ops.S[2], evaluate_table<T>(fixtures::kPairSz, p, 1)));
    rep.add("fixture.Splus", "closed-form 16x16 S_+",
            max_abs_diff(ops.Splus, evaluate_table<T>(fixtures::kPairSplus, p, 1)));
    rep.add("fixture.Sminus", "closed-form 16x16 S_-",
            max_abs_diff(ops.Sminus, evaluate_table<T>(fixtures::kPairSminus, p, 1)));

    // The printed S² is compared only where it is self-consistent: an entry
    // counts when it agrees with the conjugate of its transposed partner, as
    // any Hermitian matrix must. Inconsistent entries are recorded.
    const Matrix<T> printed = evaluate_table<T>(fixtures::kPairS2, p, 2);
    double worst = 0;
    std::size_t ambiguous = 0;
    for (std::size_t r = 0; r < 16; ++r)
        for (std::size_t c = 0; c < 16; ++c) {
            if (!entries_agree(printed(r, c), ScalarTraits<T>::conj(printed(c, r)))) {
                ++ambiguous;
                continue;
            }
            worst = std::max(worst, entry_distance(printed(r, c), ops.S2(r, c)));
        }
    rep.add("fixture.S2.consistent_entries", "closed-form 16x16 S^2 on Hermitian-consistent entries", worst);
    rep.add_info("fixture.S2.inconsistent_entries", "closed-form S^2 entries whose transposed partner is not conjugate",
                 static_cast<double>(ambiguous));
    rep.add_info("fixture.S2.mismatches", "closed-form S^2 entries differing from the construction",
                 static_cast<double>(pair_s2_fixture_mismatches(ops).size()));
    return rep;
}

template <Scalar T>
std::vector<FixtureMismatch> pair_s2_fixture_mismatches(const TwoParticleOperators<T>& ops) {
    const Matrix<T> printed = evaluate_table<T>(fixtures::kPairS2, ops.params(), 2);
    std::vector<FixtureMismatch> out;
    for (std::size_t r = 0; r < 16; ++r)
        for (std::size_t c = 0; c < 16; ++c) {
            const T& a = printed(r, c);
            const T& b = ops.S2(r, c);
            if (entries_agree(a, b)) continue;
            auto d = [](const R<T>& x) { return ScalarTraits<T>::to_double(x); };
            out.push_back({static_cast<int>(r), static_cast<int>(c), d(ScalarTraits<T>::real(a)),
                           d(ScalarTraits<T>::imag(a)), d(ScalarTraits<T>::real(b)), d(ScalarTraits<T>::imag(b))});
        }
    return out;
}

template <Scalar T>
double pair_eigen_residual(const TwoParticleOperators<T>& ops, Axis axis, const PairVector<T>& v) {
    return std::max(scaled_eigen_residual(ops.S[index_of(axis)], v.raw, v.norm2, re<T>(v.s_axis)),
                    scaled_eigen_residual(ops.S2, v.raw, v.norm2, re<T>(v.s2)));
}

template <Scalar T>
ResidualReport verify_eigenfamilies(const TwoParticleOperators<T>& ops, const EigenFamilies<T>& families,
                                    Tolerance tol) {
    ResidualReport rep(tol);
    const Axis axis = families.axis;
    const auto& Si = ops.S[index_of(axis)];
    const std::string ax(axis_name(axis));
    std::vector<const PairVector<T>*> all;
    for (const auto& members : families.members)
        for (const auto& m : members) {
            all.push_back(&m);
            rep.add("eigen.S" + ax + "." + m.label, "S_" + ax + " |v> = s |v>",
                    scaled_eigen_residual(Si, m.raw, m.norm2, re<T>(m.s_axis)));
            rep.add("eigen.S2." + m.label, "S^2 |v> = s2 |v>", scaled_eigen_residual(ops.S2, m.raw, m.norm2, re<T>(m.s2)));
            const R<T> n2 = norm2(m.raw);
            rep.add("norm." + m.label, "claimed normalizer matches the amplitudes",
                    std::abs(ScalarTraits<T>::to_double(R<T>(n2 / m.norm2)) - 1.0));
        }

    // Gram of all sixteen on normalized vectors: ⟨a|b⟩² = |⟨raw_a|raw_b⟩|²/(n_a n_b).
    double gram = 0;
    for (std::size_t a = 0; a < all.size(); ++a)
        for (std::size_t b = 0; b < all.size(); ++b) {
            const T ip = inner(all[a]->raw, all[b]->raw);
            const R<T> target = a == b ? all[a]->norm2 : R<T>(0);
            const R<T> d2 = R<T>(ScalarTraits<T>::abs2(ip - re<T>(target)) / (all[a]->norm2 * all[b]->norm2));
            gram = std::max(gram, std::sqrt(ScalarTraits<T>::to_double(d2)));
        }
    rep.add("gram.all16", "the sixteen eigenvectors are orthonormal", gram);

    if (axis != Axis::z) return rep;

    // Product forms over the one-particle z basis.
    const auto one = eigenbasis(ops.one, Axis::z).members();
    const T w = cx<T>(R<T>(1), R<T>(-ops.params().sqrt_delta()));
    const T c = w * w;
    double prod = 0;
    for (int f = 0; f < 4; ++f)
        for (int m = 0; m < 4; ++m) {
            Ket<T> built(16);
            for (const auto& t : kProducts[f][m]) {
                const T k = t.coeff_kind == 0 ? T(1) : t.coeff_kind == 1 ? T(-1) : t.coeff_kind == 2 ? c : T(0) - c;
                built += k * kron(one[t.left].raw, one[t.right].raw);
            }
            const auto& v = families.members[f][m];
            prod = std::max(prod, scaled_distance(built, v.raw, v.norm2));
        }
    rep.add("product_form", "family members are the stated A(x)B products", prod);

    double kill_plus = 0;
    double kill_minus = 0;
    for (int m = 0; m < 4; ++m) {
        for (Family f : {Family::psi1, Family::phi}) {
            const auto& v = families[f][m];
            kill_plus = std::max(kill_plus, scaled_distance(Ket<T>(ops.Splus * v.raw), Ket<T>(16), v.norm2));
        }
        for (Family f : {Family::psi2, Family::phi}) {
            const auto& v = families[f][m];
            kill_minus = std::max(kill_minus, scaled_distance(Ket<T>(ops.Sminus * v.raw), Ket<T>(16), v.norm2));
        }
    }
    rep.add("annihilate.plus", "S_+ annihilates span{psi1, phi}", kill_plus);
    rep.add("annihilate.minus", "S_- annihilates span{psi2, phi}", kill_minus);
    return rep;
}

template <Scalar T>
ResidualReport two_particle_flips(const TwoParticleOperators<T>& ops, Tolerance tol) {
    ResidualReport rep(tol);
    const auto& p = ops.params();
    const R<T> opd = R<T>(1 + p.delta());
    const T cp = cx<T>(p.hbar(), p.sqrt_hbar_beta());
    const T cm = cx<T>(p.hbar(), R<T>(-p.sqrt_hbar_beta()));
    const auto zb = eigenbasis(ops.one, Axis::z);
    const auto v = zb.members();  // U, D, U′, D′
    enum { U = 0, D = 1, Up = 2, Dp = 3 };

    auto pair = [&](int a, int b) { return std::make_pair(kron(v[a].raw, v[b].raw), R<T>(v[a].norm2 * v[b].norm2)); };
    auto flip = [&](const std::string& label, const std::string& anchor, const Matrix<T>& op, int a, int b,
                    std::vector<std::tuple<T, int, int>> terms) {
        const auto [raw, n2] = pair(a, b);
        std::vector<FlipTarget<T>> targets;
        for (const auto& [z, l, r] : terms) {
            auto [traw, tn] = pair(l, r);
            targets.push_back({z, std::move(traw), std::move(tn)});
        }
        const auto res = flip_residuals<T>(op, raw, n2, targets, opd);
        rep.add("flip." + label, anchor, res.state);
        rep.add("flip_coefficient." + label, "coefficient sqrt(1+delta)(hbar +- i sqrt(hbar beta))", res.coefficient);
    };

    flip("minus.up_up", "S_- |up up> = c+ (|down' up> + |up down'>)", ops.Sminus, U, U, {{cp, Dp, U}, {cp, U, Dp}});
    flip("minus.upp_up", "S_- |up' up> = c- |down up> + c+ |up' down'>", ops.Sminus, Up, U, {{cm, D, U}, {cp, Up, Dp}});
    flip("minus.up_upp", "S_- |up up'> = c+ |down' up'> + c- |up down>", ops.Sminus, U, Up, {{cp, Dp, Up}, {cm, U, D}});
    flip("minus.upp_upp", "S_- |up' up'> = c- (|down up'> + |up' down>)", ops.Sminus, Up, Up, {{cm, D, Up}, {cm, Up, D}});
    flip("plus.down_down", "S_+ |down down> = c+ (|up' down> + |down up'>)", ops.Splus, D, D, {{cp, Up, D}, {cp, D, Up}});
    flip("plus.downp_down", "S_+ |down' down> = c- |up down> + c+ |down' up'>", ops.Splus, Dp, D,
         {{cm, U, D}, {cp, Dp, Up}});
    flip("plus.down_downp", "S_+ |down down'> = c+ |up' down'> + c- |down up>", ops.Splus, D, Dp,
         {{cp, Up, Dp}, {cm, D, U}});
    flip("plus.downp_downp", "S_+ |down' down'> = c- (|up down'> + |down' up>)", ops.Splus, Dp, Dp,
         {{cm, U, Dp}, {cm, Dp, U}});

    const auto fam = eigenfamilies(ops);
    double kp = 0;
    double km = 0;
    for (int m = 0; m < 4; ++m) {
        for (Family f : {Family::psi1, Family::phi}) {
            const auto& w = fam[f][m];
            kp = std::max(kp, scaled_distance(Ket<T>(ops.Splus * w.raw), Ket<T>(16), w.norm2));
        }
        for (Family f : {Family::psi2, Family::phi}) {
            const auto& w = fam[f][m];
            km = std::max(km, scaled_distance(Ket<T>(ops.Sminus * w.raw), Ket<T>(16), w.norm2));
        }
    }
    rep.add("annihilate.plus", "S_+ annihilates span{psi1, phi}", kp);
    rep.add("annihilate.minus", "S_- annihilates span{psi2, phi}", km);
    return rep;
}

template <Scalar T>
ResidualReport verify_bell_states(const TwoParticleOperators<T>& ops, Axis axis,
                                  const FamilyCoefficients<T>& coefficients, Tolerance tol) {
    ResidualReport rep(tol);
    const std::string ax(axis_name(axis));
    const Matrix<T>& Si = ops.S[index_of(axis)];

    if (axis != Axis::z) {
        const Matrix<T> rot = pair_rotation_to(ops, axis);
        rep.add("rotation." + ax + ".unitary", "R^dagger R = I", max_abs_diff(dagger(rot) * rot, Matrix<T>::identity(16)));
        rep.add("rotation." + ax + ".maps_Sz", "R S_z R^dagger = S_" + ax, max_abs_diff(rot * ops.S[2] * dagger(rot), Si));
    }

    const auto bell = bell_states(ops, axis, coefficients);
    for (int k = 0; k < 2; ++k)
        rep.add("eigen." + bell[k].label, "(S_" + ax + ", S^2) eigenvector", pair_eigen_residual(ops, axis, bell[k]));
    for (int k = 2; k < 4; ++k)
        rep.add("eigen.S2." + bell[k].label, "S^2 eigenvector with 2(hbar+beta)^2",
                scaled_eigen_residual(ops.S2, bell[k].raw, bell[k].norm2, re<T>(bell[k].s2)));
    // S_i swaps Φ+ and Φ− with weight ħ+β.
    const T h = re<T>(ops.params().total());
    rep.add("swap." + ax + ".Phi", "S_" + ax + " Phi+ = (hbar+beta) Phi-",
            scaled_distance(Ket<T>(Si * bell[2].raw), Ket<T>(h * bell[3].raw), bell[2].norm2));

    double gram = 0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            const T ip = inner(bell[a].raw, bell[b].raw);
            const R<T> target = a == b ? bell[a].norm2 : R<T>(0);
            const R<T> d2 = R<T>(ScalarTraits<T>::abs2(ip - re<T>(target)) / (bell[a].norm2 * bell[b].norm2));
            gram = std::max(gram, std::sqrt(ScalarTraits<T>::to_double(d2)));
        }
    rep.add("gram." + ax, "Bell states are orthonormal", gram);
    return rep;
}

#define SMEARLAB_INSTANTIATE(T)                                                                                      \
    template TwoParticleOperators<T> build_two_particle<T>(const SmearingParams<T>&);                                \
    template EigenFamilies<T> eigenfamilies<T>(const TwoParticleOperators<T>&);                                      \
    template Matrix<T> pair_rotation_to<T>(const TwoParticleOperators<T>&, Axis);                                    \
    template EigenFamilies<T> eigenfamilies_along<T>(const TwoParticleOperators<T>&, Axis);                          \
    template PhysicalState<T> physical_state<T>(const EigenFamilies<T>&, Family, const std::array<T, 4>&);           \
    template FamilyCoefficients<T> default_family_coefficients<T>();                                                 \
    template std::array<PairVector<T>, 4> bell_states<T>(const TwoParticleOperators<T>&, Axis,                       \
                                                         const FamilyCoefficients<T>&);                              \
    template ResidualReport verify_two_particle_operators<T>(const TwoParticleOperators<T>&, Tolerance);             \
    template ResidualReport verify_eigenfamilies<T>(const TwoParticleOperators<T>&, const EigenFamilies<T>&,         \
                                                    Tolerance);                                                      \
    template ResidualReport two_particle_flips<T>(const TwoParticleOperators<T>&, Tolerance);                        \
    template double pair_eigen_residual<T>(const TwoParticleOperators<T>&, Axis, const PairVector<T>&);              \
    template ResidualReport verify_bell_states<T>(const TwoParticleOperators<T>&, Axis, const FamilyCoefficients<T>&, \
                                                  Tolerance);                                                        \
    template std::vector<FixtureMismatch> pair_s2_fixture_mismatches<T>(const TwoParticleOperators<T>&);

SMEARLAB_INSTANTIATE(Complex)
SMEARLAB_INSTANTIATE(ComplexRational)

}  // namespace smearlab
