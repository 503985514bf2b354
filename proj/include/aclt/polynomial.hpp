#pragma once

#include <string>
#include <vector>

#include "aclt/rational.hpp"

namespace aclt {

/// Dense univariate polynomial with exact rational coefficients.
/// The indeterminate prints as "q" by default; the engine only ever needs one.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(Rational c) { coeffs_.push_back(std::move(c)); trim(); }  // NOLINT: implicit
    Polynomial(long long c) : Polynomial(Rational(c)) {}                 // NOLINT: implicit
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial monomial(std::size_t degree, Rational c = 1) {
        std::vector<Rational> v(degree + 1);
        v[degree] = std::move(c);
        return Polynomial(std::move(v));
    }

    /// [k]_q = 1 + q + ... + q^(k-1)
    static Polynomial q_integer(unsigned k) {
        return Polynomial(std::vector<Rational>(k, Rational(1)));
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    void add_term(std::size_t degree, const Rational& c) {
        if (coeffs_.size() <= degree) coeffs_.resize(degree + 1);
        coeffs_[degree] += c;
        trim();
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
        return Polynomial(std::move(out));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) - b.coeff(i);
        return Polynomial(std::move(out));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial{};
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(out));
    }

    Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    Rational evaluate(const Rational& x) const {
        Rational r = 0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i];
        return r;
    }

    Rational coefficient_sum() const { return evaluate(1); }

    /// Renders like "5 + 6*q + 3*q^2 + q^3"; unit coefficients drop the "1*".
    std::string to_string(const std::string& var = "q") const {
        if (coeffs_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i].is_zero()) continue;
            Rational c = coeffs_[i];
            if (!s.empty()) {
                s += c.is_negative() ? " - " : " + ";
                if (c.is_negative()) c = -c;
            } else if (c.is_negative()) {
                s += "-";
                c = -c;
            }
            std::string cs = c.to_string();
            if (i == 0) {
                s += cs;
            } else {
                if (cs != "1") s += cs + "*";
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s.empty() ? "0" : s;
    }

private:
    std::vector<Rational> coeffs_;  // ascending degree, no trailing zeros

    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
};

}  // namespace aclt
