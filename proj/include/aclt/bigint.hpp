#pragma once

#include <cstdint>
#include <cstdlib>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace aclt {

/// Arbitrary-precision signed integer, sign-magnitude with base-2^32 limbs.
///
/// Only the operations the engine needs are provided: ring arithmetic,
/// comparisons, bit shifts, gcd, division by a machine word, and decimal
/// conversion.  General multi-limb division is intentionally absent; rational
/// normalization uses the binary gcd, which needs none.
class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) {  // NOLINT: implicit by design, acts as the integer literal bridge
        if (v == 0) return;
        neg_ = v < 0;
        // avoid UB on LLONG_MIN
        std::uint64_t mag = neg_ ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
        push_u64(mag);
    }

    BigInt(int v) : BigInt(static_cast<long long>(v)) {}
    BigInt(long v) : BigInt(static_cast<long long>(v)) {}
    BigInt(unsigned v) : BigInt(static_cast<long long>(v)) {}

    static BigInt from_u64(std::uint64_t mag) {
        BigInt r;
        r.push_u64(mag);
        return r;
    }

    static BigInt from_string(std::string_view s) {
        if (s.empty()) throw std::invalid_argument("BigInt: empty string");
        bool neg = false;
        std::size_t i = 0;
        if (s[0] == '-' || s[0] == '+') {
            neg = s[0] == '-';
            i = 1;
        }
        if (i == s.size()) throw std::invalid_argument("BigInt: no digits");
        BigInt r;
        for (; i < s.size(); ++i) {
            char c = s[i];
            if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit in \"" + std::string(s) + "\"");
            r.mul_small(10);
            r.add_small(static_cast<std::uint32_t>(c - '0'));
        }
        r.neg_ = neg && !r.is_zero();
        return r;
    }

    bool is_zero() const { return limbs_.empty(); }
    bool is_one() const { return !neg_ && limbs_.size() == 1 && limbs_[0] == 1; }
    bool negative() const { return neg_; }
    int signum() const { return is_zero() ? 0 : (neg_ ? -1 : 1); }

    /// True when the magnitude fits a single 64-bit word.
    bool fits_u64() const { return limbs_.size() <= 2; }
    std::uint64_t magnitude_u64() const {
        std::uint64_t r = 0;
        if (limbs_.size() > 2) throw std::overflow_error("BigInt: magnitude exceeds 64 bits");
        if (limbs_.size() == 2) r = static_cast<std::uint64_t>(limbs_[1]) << 32;
        if (!limbs_.empty()) r |= limbs_[0];
        return r;
    }
    long long to_long_long() const {
        std::uint64_t m = magnitude_u64();
        if (m > static_cast<std::uint64_t>(neg_ ? 0x8000000000000000ull : 0x7fffffffffffffffull))
            throw std::overflow_error("BigInt: does not fit long long");
        return neg_ ? -static_cast<long long>(m - (m == 0x8000000000000000ull)) - (m == 0x8000000000000000ull)
                    : static_cast<long long>(m);
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.neg_ == b.neg_ && a.limbs_ == b.limbs_;
    }

    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        if (a.neg_ != b.neg_) return a.neg_ ? std::strong_ordering::less : std::strong_ordering::greater;
        int c = cmp_mag(a.limbs_, b.limbs_);
        if (a.neg_) c = -c;
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    BigInt operator-() const {
        BigInt r = *this;
        if (!r.is_zero()) r.neg_ = !r.neg_;
        return r;
    }

    BigInt abs() const {
        BigInt r = *this;
        r.neg_ = false;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.neg_ == b.neg_) {
            BigInt r;
            r.limbs_ = add_mag(a.limbs_, b.limbs_);
            r.neg_ = a.neg_ && !r.limbs_.empty();
            return r;
        }
        int c = cmp_mag(a.limbs_, b.limbs_);
        if (c == 0) return BigInt{};
        BigInt r;
        if (c > 0) {
            r.limbs_ = sub_mag(a.limbs_, b.limbs_);
            r.neg_ = a.neg_;
        } else {
            r.limbs_ = sub_mag(b.limbs_, a.limbs_);
            r.neg_ = b.neg_;
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.is_zero() || b.is_zero()) return BigInt{};
        BigInt r;
        if (a.limbs_.size() == 1 && b.limbs_.size() == 1) {
            r.push_u64(static_cast<std::uint64_t>(a.limbs_[0]) * b.limbs_[0]);
        } else {
            r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
            for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
                std::uint64_t carry = 0;
                for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                    std::uint64_t cur = static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] +
                                        r.limbs_[i + j] + carry;
                    r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
                    carry = cur >> 32;
                }
                r.limbs_[i + b.limbs_.size()] = static_cast<std::uint32_t>(carry);
            }
            r.trim();
        }
        r.neg_ = a.neg_ != b.neg_;
        return r;
    }

    BigInt& operator+=(const BigInt& b) { return *this = *this + b; }
    BigInt& operator-=(const BigInt& b) { return *this = *this - b; }
    BigInt& operator*=(const BigInt& b) { return *this = *this * b; }

    /// Quotient of division by a machine word; remainder returned through `rem`.
    BigInt div_small(std::uint32_t d, std::uint32_t& rem) const {
        if (d == 0) throw std::domain_error("BigInt: division by zero");
        BigInt q;
        q.limbs_.assign(limbs_.size(), 0);
        std::uint64_t r = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            std::uint64_t cur = (r << 32) | limbs_[i];
            q.limbs_[i] = static_cast<std::uint32_t>(cur / d);
            r = cur % d;
        }
        q.trim();
        q.neg_ = neg_ && !q.limbs_.empty();
        rem = static_cast<std::uint32_t>(r);
        return q;
    }

    /// Exact division by a machine word; throws if the remainder is nonzero.
    BigInt div_exact(std::uint32_t d) const {
        std::uint32_t rem = 0;
        BigInt q = div_small(d, rem);
        if (rem != 0) throw std::domain_error("BigInt: div_exact with nonzero remainder");
        return q;
    }

    BigInt& operator<<=(unsigned bits) {
        if (is_zero() || bits == 0) return *this;
        unsigned limb_shift = bits / 32, bit_shift = bits % 32;
        std::vector<std::uint32_t> out(limbs_.size() + limb_shift + 1, 0);
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            std::uint64_t v = static_cast<std::uint64_t>(limbs_[i]) << bit_shift;
            out[i + limb_shift] |= static_cast<std::uint32_t>(v);
            out[i + limb_shift + 1] |= static_cast<std::uint32_t>(v >> 32);
        }
        limbs_ = std::move(out);
        trim();
        return *this;
    }

    BigInt& operator>>=(unsigned bits) {
        if (is_zero() || bits == 0) return *this;
        unsigned limb_shift = bits / 32, bit_shift = bits % 32;
        if (limb_shift >= limbs_.size()) {
            limbs_.clear();
            neg_ = false;
            return *this;
        }
        std::vector<std::uint32_t> out(limbs_.size() - limb_shift, 0);
        for (std::size_t i = 0; i < out.size(); ++i) {
            std::uint64_t v = limbs_[i + limb_shift] >> bit_shift;
            if (bit_shift && i + limb_shift + 1 < limbs_.size())
                v |= static_cast<std::uint64_t>(limbs_[i + limb_shift + 1]) << (32 - bit_shift);
            out[i] = static_cast<std::uint32_t>(v);
        }
        limbs_ = std::move(out);
        trim();
        if (limbs_.empty()) neg_ = false;
        return *this;
    }

    unsigned trailing_zero_bits() const {
        if (is_zero()) return 0;
        unsigned n = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            if (limbs_[i] == 0) {
                n += 32;
            } else {
                std::uint32_t v = limbs_[i];
                while ((v & 1u) == 0) {
                    v >>= 1;
                    ++n;
                }
                break;
            }
        }
        return n;
    }

    /// gcd of magnitudes (binary algorithm; 64-bit Euclid on the fast path).
    static BigInt gcd(BigInt a, BigInt b) {
        a.neg_ = b.neg_ = false;
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.fits_u64() && b.fits_u64())
            return from_u64(std::gcd(a.magnitude_u64(), b.magnitude_u64()));
        unsigned sa = a.trailing_zero_bits(), sb = b.trailing_zero_bits();
        unsigned common = sa < sb ? sa : sb;
        a >>= sa;
        b >>= sb;
        while (true) {
            if (a.fits_u64() && b.fits_u64()) {
                BigInt g = from_u64(std::gcd(a.magnitude_u64(), b.magnitude_u64()));
                g <<= common;
                return g;
            }
            int c = cmp_mag(a.limbs_, b.limbs_);
            if (c == 0) break;
            if (c < 0) std::swap(a, b);
            a = a - b;
            a >>= a.trailing_zero_bits();
        }
        a <<= common;
        return a;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        BigInt t = abs();
        while (!t.is_zero()) {
            std::uint32_t rem = 0;
            t = t.div_small(1000000000u, rem);
            for (int k = 0; k < 9; ++k) {
                out.push_back(static_cast<char>('0' + rem % 10));
                rem /= 10;
            }
        }
        while (out.size() > 1 && out.back() == '0') out.pop_back();
        if (neg_) out.push_back('-');
        std::reverse(out.begin(), out.end());
        return out;
    }

    double to_double() const {
        double r = 0.0;
        for (std::size_t i = limbs_.size(); i-- > 0;) r = r * 4294967296.0 + limbs_[i];
        return neg_ ? -r : r;
    }

private:
    std::vector<std::uint32_t> limbs_;  // little endian, no trailing zero limbs
    bool neg_ = false;

    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
        if (limbs_.empty()) neg_ = false;
    }

    void push_u64(std::uint64_t v) {
        if (v == 0) return;
        limbs_.push_back(static_cast<std::uint32_t>(v));
        if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
    }

    void mul_small(std::uint32_t m) {
        std::uint64_t carry = 0;
        for (auto& l : limbs_) {
            std::uint64_t cur = static_cast<std::uint64_t>(l) * m + carry;
            l = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
        trim();
    }

    void add_small(std::uint32_t a) {
        std::uint64_t carry = a;
        for (auto& l : limbs_) {
            if (!carry) break;
            std::uint64_t cur = l + carry;
            l = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto &lo = a.size() < b.size() ? a : b, &hi = a.size() < b.size() ? b : a;
        std::vector<std::uint32_t> out(hi.size() + 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < hi.size(); ++i) {
            std::uint64_t cur = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
            out[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        out[hi.size()] = static_cast<std::uint32_t>(carry);
        while (!out.empty() && out.back() == 0) out.pop_back();
        return out;
    }

    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> out(a.size(), 0);
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0u);
            borrow = cur < 0;
            if (cur < 0) cur += 1ll << 32;
            out[i] = static_cast<std::uint32_t>(cur);
        }
        while (!out.empty() && out.back() == 0) out.pop_back();
        return out;
    }
};

inline BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= BigInt(i);
    return r;
}

/// n!! = n (n-2) (n-4) ... ; empty product for n <= 0.
inline BigInt double_factorial(int n) {
    BigInt r = 1;
    for (int i = n; i >= 2; i -= 2) r *= BigInt(i);
    return r;
}

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= BigInt(n - i);
        r = r.div_exact(i + 1);
    }
    return r;
}

/// n (n-1) ... (n-k+1)
inline BigInt falling_factorial(unsigned n, unsigned k) {
    if (k > n) return 0;
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) r *= BigInt(n - i);
    return r;
}

}  // namespace aclt
