#pragma once

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <concepts>
#include <string>
#include <string_view>

#include "smearlab/errors.hpp"

namespace smearlab {

using Complex = std::complex<double>;
using Rational = mpq_class;

// Complex number with arbitrary-precision rational real and imaginary parts.
// Every operation is closed, so no rounding ever happens.
class ComplexRational {
public:
    ComplexRational() = default;
    ComplexRational(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }
    ComplexRational(int re) : re_(re), im_(0) {}

    const Rational& real() const { return re_; }
    const Rational& imag() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }

    ComplexRational& operator+=(const ComplexRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    ComplexRational& operator-=(const ComplexRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    ComplexRational& operator*=(const ComplexRational& o) {
        Rational re = re_ * o.re_ - im_ * o.im_;
        Rational im = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }
    ComplexRational& operator/=(const ComplexRational& o);

    friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
    friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
    friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
    friend ComplexRational operator/(ComplexRational a, const ComplexRational& b) { return a /= b; }
    friend ComplexRational operator-(const ComplexRational& a) { return {Rational(-a.re_), Rational(-a.im_)}; }
    friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    std::string to_string() const;

private:
    Rational re_{0};
    Rational im_{0};
};

inline ComplexRational conj(const ComplexRational& z) { return {z.real(), Rational(-z.imag())}; }

// |z|², exact.
inline Rational norm(const ComplexRational& z) {
    return Rational(z.real() * z.real() + z.imag() * z.imag());
}

// Square root of a nonnegative rational; throws NotRepresentableError unless
// both numerator and denominator are perfect squares.
Rational exact_sqrt(const Rational& q);

bool is_rational_square(const Rational& q);

// Parses "3", "-1/4", "0.25", "1e-6", "2.5E+3" into an exact rational. A
// decimal literal denotes exactly the rational it spells.
Rational parse_rational(std::string_view text);

// Per-backend glue: the real type, how to take square roots, how to measure
// sizes. Generic code only talks to scalars through this table.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Complex> {
    using Real = double;
    static constexpr bool exact = false;
    static constexpr const char* name = "float";

    static Complex make(Real re, Real im = 0) { return {re, im}; }
    static Real real(const Complex& z) { return z.real(); }
    static Real imag(const Complex& z) { return z.imag(); }
    static Complex conj(const Complex& z) { return std::conj(z); }
    static Real abs2(const Complex& z) { return std::norm(z); }
    static bool is_zero(const Complex& z) { return z == Complex{}; }
    static double to_double(Real r) { return r; }
    static Real sqrt(Real r) {
        if (r < 0) throw DomainError("square root of a negative number");
        return std::sqrt(r);
    }
    static bool is_negative(Real r) { return r < 0; }
};

template <>
struct ScalarTraits<ComplexRational> {
    using Real = Rational;
    static constexpr bool exact = true;
    static constexpr const char* name = "exact";

    static ComplexRational make(Real re, Real im = 0) { return {std::move(re), std::move(im)}; }
    static Real real(const ComplexRational& z) { return z.real(); }
    static Real imag(const ComplexRational& z) { return z.imag(); }
    static ComplexRational conj(const ComplexRational& z) { return smearlab::conj(z); }
    static Real abs2(const ComplexRational& z) { return norm(z); }
    static bool is_zero(const ComplexRational& z) { return z.is_zero(); }
    static double to_double(const Real& r) { return r.get_d(); }
    static Real sqrt(const Real& r) { return exact_sqrt(r); }
    static bool is_negative(const Real& r) { return sgn(r) < 0; }
};

template <class T>
concept Scalar = requires { typename ScalarTraits<T>::Real; };

template <Scalar T>
using real_t = typename ScalarTraits<T>::Real;

template <Scalar T>
T imag_unit() {
    return ScalarTraits<T>::make(0, 1);
}

}  // namespace smearlab
