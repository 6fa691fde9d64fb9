#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace centerkit {

/// Exact rational scalar. All incidence and homology decisions go through this type.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "-p/q" or an integer literal. Throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" text ("p" when the denominator is 1).
std::string to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

inline int sign(const Rational& q) { return sgn(q); }

/// Floor of a rational as a signed 64-bit integer.
std::int64_t floor_int(const Rational& q);

/// Representative of q modulo 1 in [0, 1).
Rational frac(const Rational& q);

/// Field elements a + b*sqrt(D) over Q for a fixed square-free integer D.
/// D = -1 gives the Gaussian rationals; D = 3 is used for the quadratic fixture lines.
template <int D>
class QuadraticNumber {
    static_assert(D != 0 && D != 1, "D must not be a perfect square");

public:
    QuadraticNumber() = default;
    QuadraticNumber(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
    QuadraticNumber(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
    QuadraticNumber(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static QuadraticNumber root() { return {Rational(0), Rational(1)}; }

    const Rational& rational_part() const { return a_; }
    const Rational& root_part() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    QuadraticNumber conjugate() const { return {a_, -b_}; }
    Rational norm() const { return a_ * a_ - Rational(D) * b_ * b_; }

    QuadraticNumber operator-() const { return {-a_, -b_}; }
    QuadraticNumber& operator+=(const QuadraticNumber& o) { a_ += o.a_; b_ += o.b_; return *this; }
    QuadraticNumber& operator-=(const QuadraticNumber& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    QuadraticNumber& operator*=(const QuadraticNumber& o) {
        Rational a = a_ * o.a_ + Rational(D) * b_ * o.b_;
        Rational b = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(a);
        b_ = std::move(b);
        return *this;
    }
    QuadraticNumber& operator/=(const QuadraticNumber& o) {
        const Rational n = o.norm();
        if (n == 0) throw std::domain_error("QuadraticNumber: division by zero");
        *this *= o.conjugate();
        a_ /= n;
        b_ /= n;
        return *this;
    }

    friend QuadraticNumber operator+(QuadraticNumber x, const QuadraticNumber& y) { return x += y; }
    friend QuadraticNumber operator-(QuadraticNumber x, const QuadraticNumber& y) { return x -= y; }
    friend QuadraticNumber operator*(QuadraticNumber x, const QuadraticNumber& y) { return x *= y; }
    friend QuadraticNumber operator/(QuadraticNumber x, const QuadraticNumber& y) { return x /= y; }
    friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadraticNumber& x, const QuadraticNumber& y) { return !(x == y); }

    friend std::ostream& operator<<(std::ostream& os, const QuadraticNumber& x) {
        return os << '(' << x.a_ << ")+(" << x.b_ << ")*sqrt(" << D << ')';
    }

private:
    Rational a_{0};
    Rational b_{0};
};

using GaussianRational = QuadraticNumber<-1>;

inline bool is_zero(const Rational& q) { return q == 0; }
template <int D>
bool is_zero(const QuadraticNumber<D>& q) { return q.is_zero(); }

}  // namespace centerkit
