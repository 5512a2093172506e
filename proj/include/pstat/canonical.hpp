#pragma once

#include <cstddef>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "schur.hpp"
#include "statistics.hpp"

namespace pstat {

/// Canonical N-particle partition function: the sum of s_lambda(point) over
/// the partitions of n admitted by `kind`. M is the point's dimension.
inline Rational z_canonical(const StatisticsKind& kind, const EvalPoint& point, int n) {
    Rational total = 0;
    for (const auto& lam : admitted_partitions(kind, n, point.size())) total += schur_tableau(lam, point);
    return total;
}

/// Same sum on an integer energy grid; the coefficient of q^t counts the
/// N-particle states of total energy t. Truncated above q^emax.
inline IntegerPolynomial z_canonical_qpoly(const StatisticsKind& kind, const QMonomialPoint& point,
                                           int n, std::size_t emax) {
    IntegerPolynomial total;
    for (const auto& lam : admitted_partitions(kind, n, point.size()))
        total += schur_qpoly(lam, point, emax);
    return total;
}

namespace detail {

inline void occupation_sum(const EvalPoint& point, std::size_t level, int remaining, int cap,
                           const Rational& weight, Rational& total) {
    if (level == point.size()) {
        if (remaining == 0) total += weight;
        return;
    }
    Rational w = weight;
    for (int occ = 0; occ <= remaining && occ <= cap; ++occ) {
        occupation_sum(point, level + 1, remaining - occ, cap, w, total);
        w *= point[level];
    }
}

}  // namespace detail

/// Occupation-number count for Bose (n_i >= 0) and Fermi (n_i in {0,1}):
/// the sum over (n_1..n_M) with total n of prod x_i^{n_i}. Independent of
/// the Schur machinery.
inline Rational z_occupation_oracle(const StatisticsKind& kind, const EvalPoint& point, int n) {
    int cap = 0;
    if (kind.is<kinds::Bose>())
        cap = n;
    else if (kind.is<kinds::Fermi>())
        cap = 1;
    else
        throw UnsupportedKind("z_occupation_oracle: only bose and fermi have an occupation form, got " +
                              to_string(kind));
    if (n < 0) return 0;
    Rational total = 0;
    detail::occupation_sum(point, 0, n, cap, Rational(1), total);
    return total;
}

}  // namespace pstat
