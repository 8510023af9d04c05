#pragma once

#include <complex>
#include <random>

#include "smearlab/linalg.hpp"

namespace smearlab::test {

using CR = ComplexRational;

inline Rational q(long n, long d = 1) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}
inline CR cq(long rn, long rd, long in = 0, long id = 1) { return CR(q(rn, rd), q(in, id)); }

// Laplace expansion along the first row; independent of the library's LU and
// Bareiss paths.
template <Scalar T>
T cofactor_det(const Matrix<T>& m) {
    const std::size_t n = m.rows();
    if (n == 1) return m(0, 0);
    T acc(0);
    for (std::size_t c = 0; c < n; ++c) {
        Matrix<T> minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, k = 0; j < n; ++j)
                if (j != c) minor(i - 1, k++) = m(i, j);
        const T term = m(0, c) * cofactor_det(minor);
        acc = c % 2 == 0 ? T(acc + term) : T(acc - term);
    }
    return acc;
}

inline Matrix<Complex> random_matrix(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(-1, 1);
    Matrix<Complex> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Complex(u(rng), u(rng));
    return m;
}

inline Matrix<CR> random_rational_matrix(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
    Matrix<CR> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = CR(q(num(rng), den(rng)), q(num(rng), den(rng)));
    return m;
}

inline Matrix<Complex> matrix_from_rows(std::size_t n, std::initializer_list<Complex> entries) {
    return Matrix<Complex>(n, n, std::vector<Complex>(entries));
}

}  // namespace smearlab::test
