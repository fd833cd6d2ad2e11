#include "atiyah/rational.hpp"

#include <stdexcept>

namespace atiyah {

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero())
        throw std::domain_error("Rational: zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rational Rational::operator-() const {
    Rational out = *this;
    out.num_ = -out.num_;
    return out;
}

Rational Rational::abs() const {
    Rational out = *this;
    out.num_ = out.num_.abs();
    return out;
}

Rational Rational::inverse() const {
    if (is_zero())
        throw std::domain_error("Rational: inverse of zero");
    return Rational(den_, num_);
}

Rational operator+(const Rational &a, const Rational &b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational &a, const Rational &b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational &a, const Rational &b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational &a, const Rational &b) {
    if (b.is_zero())
        throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator<(const Rational &a, const Rational &b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
}

std::string Rational::to_fraction_string() const {
    return num_.to_string() + "/" + den_.to_string();
}

std::string Rational::to_string() const {
    if (den_.is_one())
        return num_.to_string();
    return to_fraction_string();
}

Rational Rational::from_string(std::string_view s) {
    size_t slash = s.find('/');
    if (slash == std::string_view::npos)
        return Rational(BigInt::from_string(s));
    return Rational(BigInt::from_string(s.substr(0, slash)),
                    BigInt::from_string(s.substr(slash + 1)));
}

} // namespace atiyah
