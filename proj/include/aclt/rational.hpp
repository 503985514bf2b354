#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "aclt/bigint.hpp"

namespace aclt {

/// Exact rational number, always kept in lowest terms with positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}  // NOLINT: implicit
    Rational(long v) : num_(v), den_(1) {}       // NOLINT: implicit
    Rational(int v) : num_(v), den_(1) {}        // NOLINT: implicit
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    /// Parses "p", "-p", "p/q".  Whitespace is not accepted.
    static Rational from_string(std::string_view s) {
        auto slash = s.find('/');
        if (slash == std::string_view::npos) return Rational(BigInt::from_string(s));
        return Rational(BigInt::from_string(s.substr(0, slash)), BigInt::from_string(s.substr(slash + 1)));
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_negative() const { return num_.negative(); }
    bool is_integer() const { return den_.is_one(); }
    int signum() const { return num_.signum(); }

    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    Rational abs() const {
        Rational r = *this;
        r.num_ = r.num_.abs();
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        if (a.is_zero() || b.is_zero()) return Rational{};
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    Rational reciprocal() const {
        if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
        return Rational(den_, num_);
    }

    Rational pow(int e) const {
        if (e < 0) return reciprocal().pow(-e);
        Rational r = 1, base = *this;
        while (e > 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

    double to_double() const { return num_.to_double() / den_.to_double(); }

private:
    BigInt num_, den_;

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        if (num_.is_zero()) {
            den_ = 1;
            return;
        }
        if (den_.negative()) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = BigInt::gcd(num_, den_);
        if (!g.is_one()) {
            // exact by construction; divide both by g via repeated word division
            num_ = divide_exact(num_, g);
            den_ = divide_exact(den_, g);
        }
    }

    // exact division a / g where g | a, via gcd-free reduction: g fits machine words
    // in practice, but handle the general case by binary long division.
    static BigInt divide_exact(const BigInt& a, const BigInt& g) {
        if (g.is_one()) return a;
        if (g.fits_u64() && a.fits_u64()) {
            std::uint64_t q = a.magnitude_u64() / g.magnitude_u64();
            BigInt r = BigInt::from_u64(q);
            return a.negative() ? -r : r;
        }
        if (g.fits_u64()) {
            std::uint64_t gv = g.magnitude_u64();
            BigInt r = a.abs();
            if (gv >> 32) {
                // split into two word divisions via shift: divide by 2^k first
                unsigned tz = 0;
                std::uint64_t t = gv;
                while ((t & 1) == 0) {
                    t >>= 1;
                    ++tz;
                }
                r >>= tz;
                if (t >> 32) throw std::domain_error("BigInt: unsupported divisor");
                if (t > 1) r = r.div_exact(static_cast<std::uint32_t>(t));
            } else {
                r = r.div_exact(static_cast<std::uint32_t>(gv));
            }
            return a.negative() ? -r : r;
        }
        // multi-limb divisor: binary long division (rare path)
        BigInt rem = a.abs(), quot = 0;
        BigInt divisor = g.abs();
        while (rem >= divisor) {
            BigInt d = divisor, bit = 1;
            while (true) {
                BigInt d2 = d;
                d2 <<= 1;
                if (d2 > rem) break;
                d = d2;
                bit <<= 1;
            }
            rem -= d;
            quot += bit;
        }
        return a.negative() ? -quot : quot;
    }
};

/// Rational extended by a formal imaginary unit (a Gaussian rational).
struct GaussianRational {
    Rational re, im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT: implicit
    GaussianRational(long long r) : re(r) {}            // NOLINT: implicit
    GaussianRational(int r) : re(r) {}                  // NOLINT: implicit
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }

    GaussianRational conj() const { return {re, -im}; }

    Rational modulus_squared() const { return re * re + im * im; }

    GaussianRational operator-() const { return {-re, -im}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        if (a.im.is_zero() && b.im.is_zero()) return {a.re * b.re};
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational m = b.modulus_squared();
        if (m.is_zero()) throw std::domain_error("GaussianRational: division by zero");
        GaussianRational num = a * b.conj();
        return {num.re / m, num.im / m};
    }

    GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
    GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
    GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }

    std::string to_string() const {
        if (im.is_zero()) return re.to_string();
        std::string s = re.is_zero() ? "" : re.to_string();
        if (!im.is_negative() && !s.empty()) s += "+";
        s += im.to_string() + "i";
        return s;
    }
};

}  // namespace aclt
