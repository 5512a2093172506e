#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace pstat {

/// Dense univariate polynomial with exact coefficients (BigInt or Rational).
/// Trailing zero coefficients are never stored; the zero polynomial has no
/// coefficients at all.
template <class C>
class Polynomial {
public:
    Polynomial() = default;

    Polynomial(const C& constant) {  // NOLINT(google-explicit-constructor)
        if (constant != 0) coeffs_.push_back(constant);
    }

    explicit Polynomial(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial monomial(const C& coef, std::size_t degree) {
        if (coef == 0) return {};
        std::vector<C> c(degree + 1, C(0));
        c[degree] = coef;
        return Polynomial(std::move(c));
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Degree; -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

    /// Exponent of the lowest nonzero term; nullopt for zero.
    std::optional<std::size_t> valuation() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return i;
        return std::nullopt;
    }

    /// Coefficient of x^i (zero past the degree).
    C operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : C(0); }

    const std::vector<C>& coeffs() const noexcept { return coeffs_; }

    /// Drops every term of degree > max_degree.
    Polynomial truncated(std::size_t max_degree) const {
        if (coeffs_.size() <= max_degree + 1) return *this;
        return Polynomial(std::vector<C>(coeffs_.begin(),
                                         coeffs_.begin() + static_cast<long>(max_degree + 1)));
    }

    /// Multiplies by x^k.
    Polynomial shifted(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<C> c(k, C(0));
        c.insert(c.end(), coeffs_.begin(), coeffs_.end());
        return Polynomial(std::move(c));
    }

    /// Divides by x^k; every dropped coefficient must be zero.
    Polynomial unshifted(std::size_t k) const {
        for (std::size_t i = 0; i < k && i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) throw std::logic_error("unshifted: nonzero low-order term");
        if (k >= coeffs_.size()) return {};
        return Polynomial(std::vector<C>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()));
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), C(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), C(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    /// this += coef * x^k * o, truncating above max_degree.
    void add_scaled_shift(const Polynomial& o, const C& coef, std::size_t k,
                          std::size_t max_degree) {
        if (o.is_zero() || coef == 0 || k > max_degree) return;
        const std::size_t top = std::min(o.coeffs_.size() + k, max_degree + 1);
        if (top > coeffs_.size()) coeffs_.resize(top, C(0));
        for (std::size_t i = k; i < top; ++i) {
            const C& src = o.coeffs_[i - k];
            if (src != 0) coeffs_[i] += coef * src;
        }
        trim();
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(const Polynomial& a) { return Polynomial() - a; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<C> c(a.coeffs_.size() + b.coeffs_.size() - 1, C(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(c));
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<C> coeffs_;
};

using RationalPolynomial = Polynomial<Rational>;
using IntegerPolynomial = Polynomial<BigInt>;

/// Quotient and remainder over a field of coefficients.
inline std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& num,
                                                                const RationalPolynomial& den) {
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem = num.coeffs();
    const auto dd = static_cast<std::size_t>(den.degree());
    if (rem.size() <= dd) return {RationalPolynomial(), num};
    std::vector<Rational> quot(rem.size() - dd, Rational(0));
    const Rational lead = den[dd];
    for (std::size_t i = rem.size(); i-- > dd;) {
        const Rational factor = rem[i] / lead;
        quot[i - dd] = factor;
        if (factor == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= factor * den[j];
    }
    return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

/// Exact division; throws std::logic_error on a nonzero remainder.
inline RationalPolynomial exact_quotient(const RationalPolynomial& num,
                                         const RationalPolynomial& den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero()) throw std::logic_error("exact_quotient: nonzero remainder");
    return q;
}

inline Rational exact_quotient(const Rational& num, const Rational& den) { return num / den; }

template <class C>
std::vector<std::string> coefficient_strings(const Polynomial<C>& p, std::size_t length) {
    std::vector<std::string> out;
    out.reserve(length);
    for (std::size_t i = 0; i < length; ++i) out.push_back(to_string(C(p[i])));
    return out;
}

}  // namespace pstat
