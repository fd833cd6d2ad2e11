#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace atiyah {

/// Signed arbitrary-precision integer, sign + base-2^32 magnitude.
/// Canonical form: limbs have no leading zeros, zero has sign 0 and no limbs.
class BigInt {
  public:
    BigInt() = default;
    BigInt(long long v);

    static BigInt from_string(std::string_view s);

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }
    bool is_one() const;

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt &a, const BigInt &b);
    friend BigInt operator-(const BigInt &a, const BigInt &b);
    friend BigInt operator*(const BigInt &a, const BigInt &b);
    friend BigInt operator/(const BigInt &a, const BigInt &b);
    friend BigInt operator%(const BigInt &a, const BigInt &b);

    BigInt &operator+=(const BigInt &b) { return *this = *this + b; }
    BigInt &operator-=(const BigInt &b) { return *this = *this - b; }
    BigInt &operator*=(const BigInt &b) { return *this = *this * b; }

    // Truncated division: quotient rounds toward zero, remainder has the
    // sign of the dividend, a == q*b + r with |r| < |b|.
    static void divmod(const BigInt &a, const BigInt &b, BigInt &q, BigInt &r);

    friend bool operator==(const BigInt &a, const BigInt &b);
    friend bool operator!=(const BigInt &a, const BigInt &b) { return !(a == b); }
    friend bool operator<(const BigInt &a, const BigInt &b);
    friend bool operator>(const BigInt &a, const BigInt &b) { return b < a; }
    friend bool operator<=(const BigInt &a, const BigInt &b) { return !(b < a); }
    friend bool operator>=(const BigInt &a, const BigInt &b) { return !(a < b); }

    std::string to_string() const;

    // Fits in long long? (used by fast paths and tests)
    bool fits_int64() const;
    long long to_int64() const;

    static BigInt gcd(BigInt a, BigInt b);
    static BigInt factorial(unsigned n);

  private:
    int sign_ = 0;
    std::vector<std::uint32_t> limbs_;

    void trim();
    static int cmp_mag(const std::vector<std::uint32_t> &a,
                       const std::vector<std::uint32_t> &b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t> &a,
                                              const std::vector<std::uint32_t> &b);
    // Requires |a| >= |b|.
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t> &a,
                                              const std::vector<std::uint32_t> &b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t> &a,
                                              const std::vector<std::uint32_t> &b);
    static void divmod_mag(const std::vector<std::uint32_t> &a,
                           const std::vector<std::uint32_t> &b,
                           std::vector<std::uint32_t> &q,
                           std::vector<std::uint32_t> &r);
};

} // namespace atiyah
