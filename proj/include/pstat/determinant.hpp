#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polynomial.hpp"
#include "rational.hpp"

namespace pstat {

template <class T>
using Matrix = std::vector<std::vector<T>>;

namespace detail {

inline bool is_zero(const Rational& r) { return r == 0; }

template <class C>
bool is_zero(const Polynomial<C>& p) {
    return p.is_zero();
}

}  // namespace detail

/// Fraction-free (Bareiss) determinant over an integral domain whose
/// exact_quotient(a, b) is defined: Rational or RationalPolynomial.
/// Every intermediate entry is itself a minor of the input, so the
/// divisions by the previous pivot are exact.
template <class T>
T bareiss_determinant(Matrix<T> m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("bareiss_determinant: matrix not square");
    if (n == 0) return T(Rational(1));

    bool negate = false;
    T previous = T(Rational(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (detail::is_zero(m[k][k])) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && detail::is_zero(m[swap_row][k])) ++swap_row;
            if (swap_row == n) return T();
            std::swap(m[k], m[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_quotient(m[i][j] * m[k][k] - m[i][k] * m[k][j], previous);
            m[i][k] = T();
        }
        previous = m[k][k];
    }
    T det = m[n - 1][n - 1];
    return negate ? T() - det : det;
}

}  // namespace pstat
