#include "smearlab/scalar.hpp"

#include <cctype>
#include <string>

namespace smearlab {

ComplexRational& ComplexRational::operator/=(const ComplexRational& o) {
    Rational d = norm(o);
    if (sgn(d) == 0) throw DomainError("division by zero");
    Rational re = (re_ * o.re_ + im_ * o.im_) / d;
    Rational im = (im_ * o.re_ - re_ * o.im_) / d;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::string ComplexRational::to_string() const {
    if (sgn(im_) == 0) return re_.get_str();
    if (sgn(re_) == 0) return im_.get_str() + "i";
    std::string s = re_.get_str();
    s += sgn(im_) < 0 ? " - " : " + ";
    s += Rational(abs(im_)).get_str() + "i";
    return s;
}

namespace {

bool integer_sqrt(const mpz_class& n, mpz_class& root) {
    if (sgn(n) < 0 || mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return true;
}

}  // namespace

bool is_rational_square(const Rational& q) {
    mpz_class r;
    return integer_sqrt(q.get_num(), r) && integer_sqrt(q.get_den(), r);
}

Rational exact_sqrt(const Rational& q) {
    if (sgn(q) < 0) throw DomainError("square root of a negative rational " + q.get_str());
    mpz_class num, den;
    if (!integer_sqrt(q.get_num(), num) || !integer_sqrt(q.get_den(), den)) {
        throw NotRepresentableError("square root of " + q.get_str() + " is not rational");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto fail = [&]() -> Rational { throw DomainError("malformed number '" + s + "'"); };
    if (s.empty()) return fail();

    if (auto slash = s.find('/'); slash != std::string::npos) {
        Rational num = parse_rational(s.substr(0, slash));
        Rational den = parse_rational(s.substr(slash + 1));
        if (sgn(den) == 0) throw DomainError("zero denominator in '" + s + "'");
        return Rational(num / den);
    }

    std::size_t pos = 0;
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';

    std::string digits;
    long scale = 0;
    bool seen_digit = false;
    bool seen_point = false;
    for (; pos < s.size(); ++pos) {
        char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits += c;
            seen_digit = true;
            if (seen_point) --scale;
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (!seen_digit) return fail();

    if (pos < s.size()) {
        if (s[pos] != 'e' && s[pos] != 'E') return fail();
        ++pos;
        std::string exponent = s.substr(pos);
        if (exponent.empty()) return fail();
        std::size_t used = 0;
        long e = 0;
        try {
            e = std::stol(exponent, &used);
        } catch (const std::exception&) {
            return fail();
        }
        if (used != exponent.size()) return fail();
        scale += e;
    }

    mpz_class mantissa(digits, 10);
    if (negative) mantissa = -mantissa;
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
    Rational r = scale < 0 ? Rational(mantissa, power) : Rational(mantissa * power);
    r.canonicalize();
    return r;
}

}  // namespace smearlab
