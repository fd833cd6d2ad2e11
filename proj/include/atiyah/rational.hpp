#pragma once

#include "atiyah/bigint.hpp"

#include <string>
#include <string_view>

namespace atiyah {

/// Exact rational number. Always stored in lowest terms with positive
/// denominator; all arithmetic is exact (no floating point anywhere).
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d);
    Rational(long long n, long long d) : Rational(BigInt(n), BigInt(d)) {}

    static Rational from_string(std::string_view s); // "n" or "n/d"

    const BigInt &num() const { return num_; }
    const BigInt &den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    int sign() const { return num_.sign(); }

    Rational operator-() const;
    Rational abs() const;
    Rational inverse() const;

    friend Rational operator+(const Rational &a, const Rational &b);
    friend Rational operator-(const Rational &a, const Rational &b);
    friend Rational operator*(const Rational &a, const Rational &b);
    friend Rational operator/(const Rational &a, const Rational &b);

    Rational &operator+=(const Rational &b) { return *this = *this + b; }
    Rational &operator-=(const Rational &b) { return *this = *this - b; }
    Rational &operator*=(const Rational &b) { return *this = *this * b; }
    Rational &operator/=(const Rational &b) { return *this = *this / b; }

    friend bool operator==(const Rational &a, const Rational &b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational &a, const Rational &b) { return !(a == b); }
    friend bool operator<(const Rational &a, const Rational &b);

    /// "n/d" always (e.g. "3/1"), the wire format.
    std::string to_fraction_string() const;
    /// "n" when the denominator is 1, "n/d" otherwise.
    std::string to_string() const;

  private:
    BigInt num_;
    BigInt den_; // > 0
    void normalize();
};

} // namespace atiyah
