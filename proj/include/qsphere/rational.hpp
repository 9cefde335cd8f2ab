#pragma once

/**
 * @file rational.hpp
 * @brief Exact scalars: rationals and Gaussian rationals.
 *
 * `Rational` is a value-semantic wrapper around GMP's mpq_class. The
 * wrapper exists so that arithmetic returns real values instead of GMP
 * expression templates, which makes it safe to use with `auto` and inside
 * the generic containers of this library.
 *
 * `Gaussian` is a + b i with a, b rational. It is only needed for unit
 * scalars that are not +1 or -1.
 *
 * Both types model the informal "exact field" interface used by every
 * template in qsphere: the usual arithmetic operators, `is_zero`, `conj`,
 * `to_string`, and `normalizing_unit` (see qpoly.hpp).
 */

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace qsphere {

class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den) {
        if (den == 0) throw DivisionByZero();
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }
    explicit Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }
    explicit Rational(mpz_class num, mpz_class den = 1) {
        if (den == 0) throw DivisionByZero();
        value_ = mpq_class(std::move(num), std::move(den));
        value_.canonicalize();
    }

    /// Parses "a" or "a/b" with optional sign; throws std::invalid_argument.
    static Rational parse(std::string_view text) {
        mpq_class v;
        std::string s(text);
        if (s.empty() || v.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: " + s);
        if (v.get_den() == 0) throw DivisionByZero();
        v.canonicalize();
        return Rational(v);
    }

    const mpq_class& gmp() const noexcept { return value_; }
    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const noexcept { return sgn(value_) == 0; }
    bool is_one() const noexcept { return value_ == 1; }
    bool is_integer() const noexcept { return value_.get_den() == 1; }
    int sign() const noexcept { return sgn(value_); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero();
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    Rational inverse() const {
        if (is_zero()) throw DivisionByZero();
        return Rational(mpq_class(1 / value_));
    }

    /// Integer power; negative exponents invert.
    Rational pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(e));
        return Rational(std::move(n), std::move(d));
    }

    std::string str() const { return value_.get_str(10); }

    std::size_t hash() const noexcept {
        std::size_t h = mpz_get_ui(value_.get_num_mpz_t());
        h ^= mpz_get_ui(value_.get_den_mpz_t()) * 0x9e3779b97f4a7c15ULL;
        return h + static_cast<std::size_t>(sign() + 1);
    }

private:
    mpq_class value_{0};
};

inline bool is_zero(const Rational& a) { return a.is_zero(); }
inline const Rational& conj(const Rational& a) { return a; }
inline std::string to_string(const Rational& a) { return a.str(); }
inline std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.str(); }

/// Exact complex rational a + b i.
class Gaussian {
public:
    Gaussian() = default;
    Gaussian(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
    Gaussian(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Gaussian i() { return Gaussian(Rational(0), Rational(1)); }

    const Rational& re() const noexcept { return re_; }
    const Rational& im() const noexcept { return im_; }
    bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const noexcept { return im_.is_zero(); }

    Gaussian operator-() const { return {-re_, -im_}; }
    Gaussian& operator+=(const Gaussian& o) { re_ += o.re_; im_ += o.im_; return *this; }
    Gaussian& operator-=(const Gaussian& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    Gaussian& operator*=(const Gaussian& o) {
        if (im_.is_zero() && o.im_.is_zero()) {
            re_ *= o.re_;
            return *this;
        }
        Rational re = re_ * o.re_ - im_ * o.im_;
        Rational im = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }
    Gaussian& operator/=(const Gaussian& o) {
        if (o.is_zero()) throw DivisionByZero();
        if (o.im_.is_zero()) {
            re_ /= o.re_;
            im_ /= o.re_;
            return *this;
        }
        Rational n = o.norm();
        return *this *= Gaussian(o.re_ / n, -o.im_ / n);
    }

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
    friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
    friend bool operator==(const Gaussian& a, const Gaussian& b) = default;

    /// |z|^2
    Rational norm() const { return re_ * re_ + im_ * im_; }
    Gaussian conjugate() const { return {re_, -im_}; }

    std::string str() const {
        if (im_.is_zero()) return re_.str();
        std::string imag = im_.is_one() ? "i" : (im_ == Rational(-1) ? "-i" : im_.str() + "*i");
        if (re_.is_zero()) return imag;
        return "(" + re_.str() + (im_.sign() > 0 ? "+" : "") + imag + ")";
    }

private:
    Rational re_{0};
    Rational im_{0};
};

inline bool is_zero(const Gaussian& a) { return a.is_zero(); }
inline Gaussian conj(const Gaussian& a) { return a.conjugate(); }
inline std::string to_string(const Gaussian& a) { return a.str(); }
inline std::ostream& operator<<(std::ostream& os, const Gaussian& a) { return os << a.str(); }

/// Total order used only to make containers of scalars deterministic.
inline bool scalar_less(const Rational& a, const Rational& b) { return a < b; }
inline bool scalar_less(const Gaussian& a, const Gaussian& b) {
    if (a.re() != b.re()) return a.re() < b.re();
    return a.im() < b.im();
}

/// |a|^2 as a rational; used to test for unit scalars exactly.
inline Rational norm2(const Rational& a) { return a * a; }
inline Rational norm2(const Gaussian& a) { return a.norm(); }

/// Scalar integer power by repeated squaring.
template <class F>
F scalar_pow(F base, long e) {
    if (e < 0) {
        base = F(1) / base;
        e = -e;
    }
    F result(1);
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

}  // namespace qsphere
