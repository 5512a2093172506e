#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "canonical.hpp"
#include "determinant.hpp"
#include "errors.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "schur.hpp"
#include "statistics.hpp"

namespace pstat {

/// Truncated power series sum_{N<=nmax} c_N z^N in the fugacity z.
class FugacitySeries {
public:
    /// The constant series 1.
    explicit FugacitySeries(std::size_t nmax) : coeffs_(nmax + 1, Rational(0)) { coeffs_[0] = 1; }

    explicit FugacitySeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("FugacitySeries needs at least c_0");
    }

    std::size_t nmax() const noexcept { return coeffs_.size() - 1; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    const Rational& operator[](std::size_t n) const { return coeffs_[n]; }

    friend bool operator==(const FugacitySeries&, const FugacitySeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// Cauchy product truncated at the common order.
inline FugacitySeries series_mul(const FugacitySeries& a, const FugacitySeries& b) {
    if (a.nmax() != b.nmax())
        throw TruncationMismatch("series_mul: operands truncated at " + std::to_string(a.nmax()) +
                                 " and " + std::to_string(b.nmax()));
    const std::size_t n = a.nmax();
    std::vector<Rational> c(n + 1, Rational(0));
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j <= n; ++j) c[i + j] += a[i] * b[j];
    }
    return FugacitySeries(std::move(c));
}

/// (1 - coef z^a)^{-1} for power = -1, or (1 + coef z^a) for power = +1.
inline FugacitySeries expand_factor(int a_exp, const Rational& coef, int power, std::size_t nmax) {
    if (a_exp < 1) throw std::invalid_argument("expand_factor: exponent must be positive");
    if (power != 1 && power != -1) throw std::invalid_argument("expand_factor: power must be +1 or -1");
    std::vector<Rational> c(nmax + 1, Rational(0));
    c[0] = 1;
    const auto step = static_cast<std::size_t>(a_exp);
    if (power == 1) {
        if (step <= nmax) c[step] = coef;
    } else {
        Rational term = 1;
        for (std::size_t k = step; k <= nmax; k += step) {
            term *= coef;
            c[k] = term;
        }
    }
    return FugacitySeries(std::move(c));
}

/// Grand canonical series straight from the definition: c_N = Z_N(point).
inline FugacitySeries gpf_definition(const StatisticsKind& kind, const EvalPoint& point,
                                     std::size_t nmax) {
    std::vector<Rational> c;
    c.reserve(nmax + 1);
    for (std::size_t n = 0; n <= nmax; ++n) c.push_back(z_canonical(kind, point, static_cast<int>(n)));
    return FugacitySeries(std::move(c));
}

namespace detail {

// In place: s *= 1/(1 - coef z^a), using c_k += coef * c_{k-a} ascending.
inline void multiply_geometric(std::vector<Rational>& s, const Rational& coef, std::size_t a) {
    if (coef == 0) return;
    for (std::size_t k = a; k < s.size(); ++k) s[k] += coef * s[k - a];
}

// In place: s *= (1 + coef z^a), descending so each term is used once.
inline void multiply_linear(std::vector<Rational>& s, const Rational& coef, std::size_t a) {
    if (coef == 0) return;
    for (std::size_t k = s.size(); k-- > a;) s[k] += coef * s[k - a];
}

}  // namespace detail

/// Kinds with a product formula for the grand canonical series.
inline bool has_product_form(const StatisticsKind& kind) {
    return kind.is<kinds::Bose>() || kind.is<kinds::Fermi>() || kind.is<kinds::HST>() ||
           kind.is<kinds::EvenRows>() || kind.is<kinds::EvenCols>();
}

/// Closed product forms with X_i = z x_i:
///   bose       prod_i 1/(1 - X_i)
///   fermi      prod_i (1 + X_i)
///   hst        prod_i 1/(1 - X_i) prod_{i<j} 1/(1 - X_i X_j)
///   even-rows  prod_i 1/(1 - X_i^2) prod_{i<j} 1/(1 - X_i X_j)
///   even-cols  prod_{i<j} 1/(1 - X_i X_j)
inline FugacitySeries gpf_product(const StatisticsKind& kind, const EvalPoint& point,
                                  std::size_t nmax) {
    if (!has_product_form(kind))
        throw UnsupportedKind("gpf_product: no product form for " + to_string(kind));

    std::vector<Rational> s(nmax + 1, Rational(0));
    s[0] = 1;
    const std::size_t m = point.size();
    const bool singles = kind.is<kinds::Bose>() || kind.is<kinds::HST>();
    const bool pairs = kind.is<kinds::HST>() || kind.is<kinds::EvenRows>() || kind.is<kinds::EvenCols>();

    if (kind.is<kinds::Fermi>())
        for (std::size_t i = 0; i < m; ++i) detail::multiply_linear(s, point[i], 1);
    if (singles)
        for (std::size_t i = 0; i < m; ++i) detail::multiply_geometric(s, point[i], 1);
    if (kind.is<kinds::EvenRows>())
        for (std::size_t i = 0; i < m; ++i) detail::multiply_geometric(s, point[i] * point[i], 2);
    if (pairs)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) detail::multiply_geometric(s, point[i] * point[j], 2);
    return FugacitySeries(std::move(s));
}

namespace detail {

// Matrix with (i, j) entry X_j^{top - i} - X_j^{i}, i and j 1-based, as
// polynomials in z with X_j = z x_j.
inline Matrix<RationalPolynomial> parafermi_matrix(const EvalPoint& point, int top) {
    const std::size_t m = point.size();
    Matrix<RationalPolynomial> mat(m, std::vector<RationalPolynomial>(m));
    for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t j = 1; j <= m; ++j) {
            const auto high = static_cast<unsigned>(top - static_cast<int>(i));
            const auto low = static_cast<unsigned>(i);
            const Rational& x = point[j - 1];
            mat[i - 1][j - 1] = RationalPolynomial::monomial(pow(x, high), high) -
                                RationalPolynomial::monomial(pow(x, low), low);
        }
    }
    return mat;
}

}  // namespace detail

/// Parafermi series of order p as the determinant ratio
///   det(X_j^{2M+p+1-i} - X_j^i) / det(X_j^{2M+1-i} - X_j^i),
/// both determinants exact polynomials in z; the common power of z is
/// cancelled and the quotient expanded to order nmax.
inline FugacitySeries gpf_parafermi_det(int p, const EvalPoint& point, std::size_t nmax) {
    if (p < 1) throw std::invalid_argument("gpf_parafermi_det: order must be positive");
    if (!point.pairwise_distinct() || !point.all_nonzero())
        throw DistinctnessViolation(
            "gpf_parafermi_det: coordinates must be pairwise distinct and nonzero");

    const int m = static_cast<int>(point.size());
    const RationalPolynomial num = bareiss_determinant(detail::parafermi_matrix(point, 2 * m + p + 1));
    const RationalPolynomial den = bareiss_determinant(detail::parafermi_matrix(point, 2 * m + 1));

    const auto v_den = den.valuation();
    if (!v_den) throw DivisionInconsistency("gpf_parafermi_det: denominator vanishes identically");
    const auto v_num = num.valuation();
    if (v_num && *v_num < *v_den)
        throw DivisionInconsistency("gpf_parafermi_det: numerator has lower z-order than denominator");

    const RationalPolynomial a = num.unshifted(*v_den);
    const RationalPolynomial d = den.unshifted(*v_den);
    const Rational d0 = d[0];

    std::vector<Rational> c(nmax + 1, Rational(0));
    for (std::size_t n = 0; n <= nmax; ++n) {
        Rational acc = a[n];
        for (std::size_t k = 1; k <= n && static_cast<long>(k) <= d.degree(); ++k) acc -= d[k] * c[n - k];
        c[n] = acc / d0;
    }
    return FugacitySeries(std::move(c));
}

/// Closed form (product or determinant ratio) for the kind, if one exists.
inline bool has_closed_form(const StatisticsKind& kind) {
    return has_product_form(kind) || kind.is<kinds::ParaFermi>();
}

inline FugacitySeries gpf_closed_form(const StatisticsKind& kind, const EvalPoint& point,
                                      std::size_t nmax) {
    if (const auto* pf = kind.get_if<kinds::ParaFermi>()) return gpf_parafermi_det(pf->order, point, nmax);
    if (has_product_form(kind)) return gpf_product(kind, point, nmax);
    throw UnsupportedKind("no closed grand canonical form for " + to_string(kind));
}

struct IdentityReport {
    StatisticsKind kind;
    EvalPoint point;
    std::size_t nmax;
    FugacitySeries lhs;  // restricted Schur sum
    FugacitySeries rhs;  // closed form
    bool equal;
    std::optional<std::size_t> first_mismatch;
};

/// Compares the restricted Schur sum with the closed form coefficient by
/// coefficient.
inline IdentityReport verify_identity(const StatisticsKind& kind, const EvalPoint& point,
                                      std::size_t nmax) {
    FugacitySeries rhs = gpf_closed_form(kind, point, nmax);
    FugacitySeries lhs = gpf_definition(kind, point, nmax);
    std::optional<std::size_t> mismatch;
    for (std::size_t n = 0; n <= nmax; ++n) {
        if (lhs[n] != rhs[n]) {
            mismatch = n;
            break;
        }
    }
    return IdentityReport{kind, point, nmax, std::move(lhs), std::move(rhs), !mismatch, mismatch};
}

}  // namespace pstat
