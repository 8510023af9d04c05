#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "smearlab/errors.hpp"
#include "smearlab/scalar.hpp"

namespace smearlab {

// Dense row-major complex matrix over either scalar backend.
template <Scalar T>
class Matrix {
public:
    using value_type = T;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_) throw DimensionError("entry count does not match shape");
    }
    Matrix(std::initializer_list<std::initializer_list<T>> rows) : rows_(rows.size()) {
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw DimensionError("ragged matrix literal");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    const std::vector<T>& entries() const { return data_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix& operator+=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    Matrix& operator*=(const T& s) {
        for (auto& x : data_) x *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator-(Matrix a) { return a *= T(-1); }
    friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
    friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shapes differ");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

// Column vector of amplitudes. Physical states are normalized; intermediates
// need not be.
template <Scalar T>
class Ket {
public:
    using value_type = T;

    Ket() = default;
    explicit Ket(std::size_t dim) : amp_(dim, T(0)) {}
    explicit Ket(std::vector<T> amplitudes) : amp_(std::move(amplitudes)) {}
    Ket(std::initializer_list<T> amplitudes) : amp_(amplitudes) {}

    static Ket basis(std::size_t dim, std::size_t index) {
        Ket k(dim);
        k[index] = T(1);
        return k;
    }

    std::size_t dim() const { return amp_.size(); }
    const std::vector<T>& amplitudes() const { return amp_; }
    T& operator[](std::size_t i) { return amp_[i]; }
    const T& operator[](std::size_t i) const { return amp_[i]; }

    Ket& operator+=(const Ket& o) {
        require_same_dim(o);
        for (std::size_t k = 0; k < amp_.size(); ++k) amp_[k] += o.amp_[k];
        return *this;
    }
    Ket& operator-=(const Ket& o) {
        require_same_dim(o);
        for (std::size_t k = 0; k < amp_.size(); ++k) amp_[k] -= o.amp_[k];
        return *this;
    }
    Ket& operator*=(const T& s) {
        for (auto& x : amp_) x *= s;
        return *this;
    }

    friend Ket operator+(Ket a, const Ket& b) { return a += b; }
    friend Ket operator-(Ket a, const Ket& b) { return a -= b; }
    friend Ket operator*(const T& s, Ket a) { return a *= s; }
    friend Ket operator*(Ket a, const T& s) { return a *= s; }
    friend bool operator==(const Ket& a, const Ket& b) { return a.amp_ == b.amp_; }

private:
    void require_same_dim(const Ket& o) const {
        if (amp_.size() != o.amp_.size()) throw DimensionError("ket dimensions differ");
    }

    std::vector<T> amp_;
};

template <Scalar T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw DimensionError("matmul: inner dimensions differ");
    Matrix<T> c(a.rows(), b.cols());
    // Operators here are sparse; skipping zeros keeps the exact backend fast.
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const T& aik = a(i, k);
            if (ScalarTraits<T>::is_zero(aik)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const T& bkj = b(k, j);
                if (ScalarTraits<T>::is_zero(bkj)) continue;
                c(i, j) += aik * bkj;
            }
        }
    }
    return c;
}

template <Scalar T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b) {
    return a * b;
}

template <Scalar T>
Ket<T> operator*(const Matrix<T>& a, const Ket<T>& v) {
    if (a.cols() != v.dim()) throw DimensionError("matrix-vector: dimensions differ");
    Ket<T> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (ScalarTraits<T>::is_zero(a(i, k)) || ScalarTraits<T>::is_zero(v[k])) continue;
            out[i] += a(i, k) * v[k];
        }
    }
    return out;
}

// Row block indexed by the first factor: (a⊗b)(i·rb + k, j·cb + l) = a(i,j)·b(k,l).
template <Scalar T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (ScalarTraits<T>::is_zero(a(i, j))) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return out;
}

template <Scalar T>
Ket<T> kron(const Ket<T>& a, const Ket<T>& b) {
    Ket<T> out(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t k = 0; k < b.dim(); ++k) out[i * b.dim() + k] = a[i] * b[k];
    return out;
}

template <Scalar T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        throw DimensionError("commutator: operands must be square of equal size");
    return a * b - b * a;
}

template <Scalar T>
Matrix<T> anticommutator(const Matrix<T>& a, const Matrix<T>& b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        throw DimensionError("anticommutator: operands must be square of equal size");
    return a * b + b * a;
}

template <Scalar T>
Matrix<T> dagger(const Matrix<T>& a) {
    Matrix<T> out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = ScalarTraits<T>::conj(a(i, j));
    return out;
}

template <Scalar T>
T trace(const Matrix<T>& a) {
    if (!a.is_square()) throw DimensionError("trace of a non-square matrix");
    T t(0);
    for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

// Float: LU with partial pivoting. Exact: Bareiss fraction-free elimination,
// which keeps every intermediate a minor of the input.
template <Scalar T>
T det(const Matrix<T>& a) {
    if (!a.is_square()) throw DimensionError("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return T(1);
    Matrix<T> m = a;
    T sign(1);

    if constexpr (ScalarTraits<T>::exact) {
        T prev(1);
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (m(k, k).is_zero()) {
                std::size_t p = k + 1;
                while (p < n && m(p, k).is_zero()) ++p;
                if (p == n) return T(0);
                for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i) {
                for (std::size_t j = k + 1; j < n; ++j) {
                    m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
                }
                m(i, k) = T(0);
            }
            prev = m(k, k);
        }
        return sign * m(n - 1, n - 1);
    } else {
        T d(1);
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t p = k;
            for (std::size_t i = k + 1; i < n; ++i)
                if (std::abs(m(i, k)) > std::abs(m(p, k))) p = i;
            if (m(p, k) == T(0)) return T(0);
            if (p != k) {
                for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
                sign = -sign;
            }
            d *= m(k, k);
            for (std::size_t i = k + 1; i < n; ++i) {
                T f = m(i, k) / m(k, k);
                for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
            }
        }
        return sign * d;
    }
}

template <Scalar T>
T inner(const Ket<T>& a, const Ket<T>& b) {
    if (a.dim() != b.dim()) throw DimensionError("inner product: dimensions differ");
    T s(0);
    for (std::size_t k = 0; k < a.dim(); ++k) s += ScalarTraits<T>::conj(a[k]) * b[k];
    return s;
}

template <Scalar T>
real_t<T> norm2(const Ket<T>& a) {
    real_t<T> s(0);
    for (const auto& x : a.amplitudes()) s += ScalarTraits<T>::abs2(x);
    return s;
}

// Largest entrywise modulus. Exact backends compare squared moduli exactly and
// only convert the final answer, so an exact zero stays 0.0.
template <Scalar T>
double max_abs(const Matrix<T>& a) {
    real_t<T> best(0);
    for (const auto& x : a.entries()) {
        real_t<T> m = ScalarTraits<T>::abs2(x);
        if (m > best) best = m;
    }
    return std::sqrt(ScalarTraits<T>::to_double(best));
}

template <Scalar T>
double max_abs_diff(const Matrix<T>& a, const Matrix<T>& b) {
    return max_abs(a - b);
}

template <Scalar T>
double norm_of(const Ket<T>& a) {
    return std::sqrt(ScalarTraits<T>::to_double(norm2(a)));
}

// Float states count as normalized within this absolute slack on ‖ψ‖².
inline constexpr double kNormalizationSlack = 1e-10;

template <Scalar T>
bool is_normalized(const Ket<T>& psi) {
    if constexpr (ScalarTraits<T>::exact) {
        return norm2(psi) == 1;
    } else {
        return std::abs(norm2(psi) - 1.0) <= kNormalizationSlack;
    }
}

template <Scalar T>
void require_normalized(const Ket<T>& psi) {
    if (!is_normalized(psi)) throw NormalizationError("state is not normalized");
}

template <Scalar T>
T expectation(const Matrix<T>& op, const Ket<T>& psi) {
    if (!op.is_square() || op.cols() != psi.dim()) throw DimensionError("expectation: dimensions differ");
    require_normalized(psi);
    return inner(psi, op * psi);
}

// Real part of ⟨A²⟩ − ⟨A⟩²; the imaginary part vanishes for Hermitian A.
template <Scalar T>
real_t<T> variance(const Matrix<T>& op, const Ket<T>& psi) {
    if (!op.is_square() || op.cols() != psi.dim()) throw DimensionError("variance: dimensions differ");
    require_normalized(psi);
    Ket<T> a_psi = op * psi;
    T mean = inner(psi, a_psi);
    T second = inner(psi, op * a_psi);
    return ScalarTraits<T>::real(second - mean * mean);
}

template <Scalar T>
T covariance(const Matrix<T>& a, const Matrix<T>& b, const Ket<T>& psi) {
    if (a.rows() != b.rows() || a.cols() != psi.dim()) throw DimensionError("covariance: dimensions differ");
    require_normalized(psi);
    Ket<T> b_psi = b * psi;
    return inner(psi, a * b_psi) - inner(psi, a * psi) * inner(psi, b_psi);
}

// ‖op·v − λv‖₂
template <Scalar T>
double eigen_residual(const Matrix<T>& op, const Ket<T>& v, const T& lambda) {
    return norm_of(op * v - lambda * v);
}

}  // namespace smearlab
