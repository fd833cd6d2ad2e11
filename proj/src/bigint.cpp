#include "atiyah/bigint.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <cassert>
#include <stdexcept>

namespace atiyah {

namespace {
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;
constexpr u64 kBase = u64(1) << 32;
} // namespace

BigInt::BigInt(long long v) {
    if (v == 0)
        return;
    sign_ = v > 0 ? 1 : -1;
    // avoid overflow on LLONG_MIN
    unsigned long long m = v > 0 ? static_cast<unsigned long long>(v)
                                 : ~static_cast<unsigned long long>(v) + 1ull;
    while (m) {
        limbs_.push_back(static_cast<u32>(m & 0xffffffffull));
        m >>= 32;
    }
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0)
        limbs_.pop_back();
    if (limbs_.empty())
        sign_ = 0;
}

bool BigInt::is_one() const { return sign_ == 1 && limbs_.size() == 1 && limbs_[0] == 1; }

int BigInt::cmp_mag(const std::vector<u32> &a, const std::vector<u32> &b) {
    if (a.size() != b.size())
        return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i])
            return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<u32> BigInt::add_mag(const std::vector<u32> &a, const std::vector<u32> &b) {
    const std::vector<u32> &x = a.size() >= b.size() ? a : b;
    const std::vector<u32> &y = a.size() >= b.size() ? b : a;
    std::vector<u32> out(x.size() + 1, 0);
    u64 carry = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        u64 s = carry + x[i] + (i < y.size() ? y[i] : 0);
        out[i] = static_cast<u32>(s & 0xffffffffull);
        carry = s >> 32;
    }
    out[x.size()] = static_cast<u32>(carry);
    while (!out.empty() && out.back() == 0)
        out.pop_back();
    return out;
}

std::vector<u32> BigInt::sub_mag(const std::vector<u32> &a, const std::vector<u32> &b) {
    assert(cmp_mag(a, b) >= 0);
    std::vector<u32> out(a.size(), 0);
    std::int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow -
                         (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
        if (d < 0) {
            d += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out[i] = static_cast<u32>(d);
    }
    while (!out.empty() && out.back() == 0)
        out.pop_back();
    return out;
}

std::vector<u32> BigInt::mul_mag(const std::vector<u32> &a, const std::vector<u32> &b) {
    if (a.empty() || b.empty())
        return {};
    std::vector<u32> out(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        u64 carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            u64 cur = static_cast<u64>(a[i]) * b[j] + out[i + j] + carry;
            out[i + j] = static_cast<u32>(cur & 0xffffffffull);
            carry = cur >> 32;
        }
        size_t k = i + b.size();
        while (carry) {
            u64 cur = out[k] + carry;
            out[k] = static_cast<u32>(cur & 0xffffffffull);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!out.empty() && out.back() == 0)
        out.pop_back();
    return out;
}

// Knuth algorithm D.
void BigInt::divmod_mag(const std::vector<u32> &a, const std::vector<u32> &b,
                        std::vector<u32> &q, std::vector<u32> &r) {
    assert(!b.empty());
    if (cmp_mag(a, b) < 0) {
        q.clear();
        r = a;
        return;
    }
    if (b.size() == 1) {
        q.assign(a.size(), 0);
        u64 d = b[0];
        u64 rem = 0;
        for (size_t i = a.size(); i-- > 0;) {
            u64 cur = (rem << 32) | a[i];
            q[i] = static_cast<u32>(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0)
            q.pop_back();
        r.clear();
        if (rem)
            r.push_back(static_cast<u32>(rem));
        return;
    }

    const int shift = std::countl_zero(b.back());
    const size_t n = b.size();
    const size_t m = a.size() - n;

    auto shl = [&](const std::vector<u32> &v, bool extra) {
        std::vector<u32> out(v.size() + (extra ? 1 : 0), 0);
        if (shift == 0) {
            std::copy(v.begin(), v.end(), out.begin());
            return out;
        }
        u32 carry = 0;
        for (size_t i = 0; i < v.size(); ++i) {
            out[i] = (v[i] << shift) | carry;
            carry = static_cast<u32>(static_cast<u64>(v[i]) >> (32 - shift));
        }
        if (extra)
            out[v.size()] = carry;
        return out;
    };

    std::vector<u32> u = shl(a, true);
    std::vector<u32> v = shl(b, false);

    q.assign(m + 1, 0);
    for (size_t j = m + 1; j-- > 0;) {
        u128 num = (u128(u[j + n]) << 32) | u[j + n - 1];
        u64 qhat = static_cast<u64>(num / v[n - 1]);
        u64 rhat = static_cast<u64>(num % v[n - 1]);
        while (qhat >= kBase ||
               u128(qhat) * v[n - 2] > ((u128(rhat) << 32) | u[j + n - 2])) {
            --qhat;
            rhat += v[n - 1];
            if (rhat >= kBase)
                break;
        }
        // multiply-subtract
        std::int64_t borrow = 0;
        u64 carry = 0;
        for (size_t i = 0; i < n; ++i) {
            u64 p = qhat * v[i] + carry;
            carry = p >> 32;
            std::int64_t t = static_cast<std::int64_t>(u[i + j]) -
                             static_cast<std::int64_t>(p & 0xffffffffull) - borrow;
            if (t < 0) {
                t += static_cast<std::int64_t>(kBase);
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[i + j] = static_cast<u32>(t);
        }
        std::int64_t t = static_cast<std::int64_t>(u[j + n]) -
                         static_cast<std::int64_t>(carry) - borrow;
        if (t < 0) {
            // qhat was one too large: add back
            u[j + n] = static_cast<u32>(t + static_cast<std::int64_t>(kBase));
            --qhat;
            u64 c2 = 0;
            for (size_t i = 0; i < n; ++i) {
                u64 s = static_cast<u64>(u[i + j]) + v[i] + c2;
                u[i + j] = static_cast<u32>(s & 0xffffffffull);
                c2 = s >> 32;
            }
            u[j + n] = static_cast<u32>(u[j + n] + c2);
        } else {
            u[j + n] = static_cast<u32>(t);
        }
        q[j] = static_cast<u32>(qhat);
    }
    while (!q.empty() && q.back() == 0)
        q.pop_back();

    // denormalize remainder
    r.assign(u.begin(), u.begin() + n);
    if (shift) {
        u32 carry = 0;
        for (size_t i = r.size(); i-- > 0;) {
            u32 cur = r[i];
            r[i] = (cur >> shift) | carry;
            carry = static_cast<u32>(static_cast<u64>(cur) << (32 - shift));
        }
    }
    while (!r.empty() && r.back() == 0)
        r.pop_back();
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    out.sign_ = -out.sign_;
    return out;
}

BigInt BigInt::abs() const {
    BigInt out = *this;
    if (out.sign_ < 0)
        out.sign_ = 1;
    return out;
}

BigInt operator+(const BigInt &a, const BigInt &b) {
    if (a.sign_ == 0)
        return b;
    if (b.sign_ == 0)
        return a;
    BigInt out;
    if (a.sign_ == b.sign_) {
        out.sign_ = a.sign_;
        out.limbs_ = BigInt::add_mag(a.limbs_, b.limbs_);
    } else {
        int c = BigInt::cmp_mag(a.limbs_, b.limbs_);
        if (c == 0)
            return BigInt();
        if (c > 0) {
            out.sign_ = a.sign_;
            out.limbs_ = BigInt::sub_mag(a.limbs_, b.limbs_);
        } else {
            out.sign_ = b.sign_;
            out.limbs_ = BigInt::sub_mag(b.limbs_, a.limbs_);
        }
    }
    return out;
}

BigInt operator-(const BigInt &a, const BigInt &b) { return a + (-b); }

BigInt operator*(const BigInt &a, const BigInt &b) {
    BigInt out;
    if (a.sign_ == 0 || b.sign_ == 0)
        return out;
    out.sign_ = a.sign_ * b.sign_;
    out.limbs_ = BigInt::mul_mag(a.limbs_, b.limbs_);
    return out;
}

void BigInt::divmod(const BigInt &a, const BigInt &b, BigInt &q, BigInt &r) {
    if (b.sign_ == 0)
        throw std::domain_error("BigInt: division by zero");
    if (a.sign_ == 0) {
        q = BigInt();
        r = BigInt();
        return;
    }
    std::vector<u32> qm, rm;
    divmod_mag(a.limbs_, b.limbs_, qm, rm);
    q = BigInt();
    r = BigInt();
    if (!qm.empty()) {
        q.sign_ = a.sign_ * b.sign_;
        q.limbs_ = std::move(qm);
    }
    if (!rm.empty()) {
        r.sign_ = a.sign_;
        r.limbs_ = std::move(rm);
    }
}

BigInt operator/(const BigInt &a, const BigInt &b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt &a, const BigInt &b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return r;
}

bool operator==(const BigInt &a, const BigInt &b) {
    return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
}

bool operator<(const BigInt &a, const BigInt &b) {
    if (a.sign_ != b.sign_)
        return a.sign_ < b.sign_;
    int c = BigInt::cmp_mag(a.limbs_, b.limbs_);
    return a.sign_ >= 0 ? c < 0 : c > 0;
}

std::string BigInt::to_string() const {
    if (sign_ == 0)
        return "0";
    std::vector<u32> digits; // base 10^9 chunks, little-endian
    std::vector<u32> cur = limbs_;
    while (!cur.empty()) {
        u64 rem = 0;
        for (size_t i = cur.size(); i-- > 0;) {
            u64 v = (rem << 32) | cur[i];
            cur[i] = static_cast<u32>(v / 1000000000ull);
            rem = v % 1000000000ull;
        }
        while (!cur.empty() && cur.back() == 0)
            cur.pop_back();
        digits.push_back(static_cast<u32>(rem));
    }
    std::string out = sign_ < 0 ? "-" : "";
    out += std::to_string(digits.back());
    for (size_t i = digits.size() - 1; i-- > 0;) {
        std::string chunk = std::to_string(digits[i]);
        out += std::string(9 - chunk.size(), '0') + chunk;
    }
    return out;
}

BigInt BigInt::from_string(std::string_view s) {
    if (s.empty())
        throw std::invalid_argument("BigInt: empty string");
    int sign = 1;
    size_t pos = 0;
    if (s[0] == '+' || s[0] == '-') {
        sign = s[0] == '-' ? -1 : 1;
        pos = 1;
    }
    if (pos == s.size())
        throw std::invalid_argument("BigInt: no digits");
    BigInt out;
    for (; pos < s.size();) {
        size_t len = std::min<size_t>(9, s.size() - pos);
        u32 chunk = 0;
        u32 scale = 1;
        for (size_t i = 0; i < len; ++i) {
            char c = s[pos + i];
            if (c < '0' || c > '9')
                throw std::invalid_argument("BigInt: bad digit");
            chunk = chunk * 10 + static_cast<u32>(c - '0');
            scale *= 10;
        }
        out = out * BigInt(static_cast<long long>(scale)) + BigInt(static_cast<long long>(chunk));
        pos += len;
    }
    if (sign < 0)
        out = -out;
    return out;
}

bool BigInt::fits_int64() const {
    if (limbs_.size() > 2)
        return false;
    if (limbs_.size() < 2)
        return true;
    u64 m = (static_cast<u64>(limbs_[1]) << 32) | limbs_[0];
    return sign_ > 0 ? m <= 0x7fffffffffffffffull : m <= 0x8000000000000000ull;
}

long long BigInt::to_int64() const {
    assert(fits_int64());
    u64 m = 0;
    if (!limbs_.empty())
        m = limbs_[0];
    if (limbs_.size() > 1)
        m |= static_cast<u64>(limbs_[1]) << 32;
    if (sign_ < 0) {
        if (m == 0x8000000000000000ull)
            return std::numeric_limits<long long>::min();
        return -static_cast<long long>(m);
    }
    return static_cast<long long>(m);
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigInt BigInt::factorial(unsigned n) {
    BigInt out(1);
    for (unsigned i = 2; i <= n; ++i)
        out *= BigInt(static_cast<long long>(i));
    return out;
}

} // namespace atiyah
