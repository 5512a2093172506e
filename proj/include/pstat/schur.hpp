#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "determinant.hpp"
#include "errors.hpp"
#include "partition.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace pstat {

/// Exact values for the variables x_1..x_M. Repeated and zero coordinates
/// are allowed (degenerate spectra).
class EvalPoint {
public:
    explicit EvalPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
        if (coords_.empty()) throw std::invalid_argument("EvalPoint needs at least one coordinate");
    }

    const std::vector<Rational>& coords() const noexcept { return coords_; }
    std::size_t size() const noexcept { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }

    bool pairwise_distinct() const {
        auto sorted = coords_;
        std::sort(sorted.begin(), sorted.end());
        return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    }

    bool all_nonzero() const {
        return std::none_of(coords_.begin(), coords_.end(), [](const Rational& x) { return x == 0; });
    }

    /// Every coordinate multiplied by c.
    EvalPoint scaled(const Rational& c) const {
        auto out = coords_;
        for (auto& x : out) x *= c;
        return EvalPoint(std::move(out));
    }

    friend bool operator==(const EvalPoint&, const EvalPoint&) = default;

private:
    std::vector<Rational> coords_;
};

/// Point x_i = q^{e_i} for a formal variable q; energies on an integer grid.
class QMonomialPoint {
public:
    explicit QMonomialPoint(std::vector<int> exponents) : exponents_(std::move(exponents)) {
        if (exponents_.empty())
            throw std::invalid_argument("QMonomialPoint needs at least one coordinate");
        for (int e : exponents_)
            if (e < 0) throw std::invalid_argument("QMonomialPoint exponents must be nonnegative");
    }

    const std::vector<int>& exponents() const noexcept { return exponents_; }
    std::size_t size() const noexcept { return exponents_.size(); }
    int max_exponent() const { return *std::max_element(exponents_.begin(), exponents_.end()); }

private:
    std::vector<int> exponents_;
};

namespace detail {

using Shape = std::vector<int>;  // padded to the length of the outer shape

// Calls f(next, strip_size) for every shape `next` with inner <= next <= outer
// such that next/inner is a horizontal strip (no two cells in one column).
template <class F>
void for_each_horizontal_strip(const Shape& outer, const Shape& inner, F&& f) {
    Shape next = inner;
    auto rec = [&](auto&& self, std::size_t row, int size) -> void {
        if (row == outer.size()) {
            f(static_cast<const Shape&>(next), size);
            return;
        }
        const int cap = row == 0 ? outer[0] : std::min(outer[row], inner[row - 1]);
        for (int v = inner[row]; v <= cap; ++v) {
            next[row] = v;
            self(self, row + 1, size + v - inner[row]);
        }
        next[row] = inner[row];
    };
    rec(rec, 0, 0);
}

inline std::size_t nonzero_rows(const Shape& s) {
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](int v) { return v > 0; }));
}

}  // namespace detail

/// Sum over semistandard tableaux of the given shape with entries
/// 1..letters, organised letter by letter: the cells holding letter k form
/// a horizontal strip, so a tableau is a chain of strips and the walk over
/// chains is memoised on the intermediate shape.
///
/// Policy must provide
///   bool accepts(std::size_t letter, int strip_size) const;
///   void accumulate(Value& target, const Value& source,
///                   std::size_t letter, int strip_size) const;
/// and `one` is the weight of the empty tableau.
template <class Value, class Policy>
Value sum_over_tableaux(const Partition& shape, std::size_t letters, const Value& one,
                        const Policy& policy) {
    if (shape.length() > letters) return Value();
    const detail::Shape outer(shape.begin(), shape.end());
    const detail::Shape start(outer.size(), 0);
    if (outer.empty()) {
        // the empty tableau uses every letter zero times
        for (std::size_t k = 0; k < letters; ++k)
            if (!policy.accepts(k, 0)) return Value();
        return one;
    }

    std::map<detail::Shape, Value> layer{{start, one}};
    for (std::size_t k = 0; k < letters; ++k) {
        const std::size_t remaining = letters - k - 1;
        std::map<detail::Shape, Value> next_layer;
        for (const auto& [inner, value] : layer) {
            detail::for_each_horizontal_strip(outer, inner, [&](const detail::Shape& next, int size) {
                if (!policy.accepts(k, size)) return;
                // column 1 still needs length(shape) - rows(next) distinct letters
                if (shape.length() - detail::nonzero_rows(next) > remaining) return;
                auto it = next_layer.try_emplace(next).first;
                policy.accumulate(it->second, value, k, size);
            });
        }
        layer = std::move(next_layer);
    }
    const auto it = layer.find(outer);
    return it == layer.end() ? Value() : it->second;
}

namespace detail {

struct RationalTableauPolicy {
    const EvalPoint* point;
    std::vector<std::vector<Rational>> powers;  // powers[k][s] = x_k^s

    RationalTableauPolicy(const EvalPoint& p, int max_power) : point(&p) {
        powers.resize(p.size());
        for (std::size_t k = 0; k < p.size(); ++k) {
            powers[k].reserve(static_cast<std::size_t>(max_power) + 1);
            Rational acc = 1;
            for (int s = 0; s <= max_power; ++s) {
                powers[k].push_back(acc);
                acc *= p[k];
            }
        }
    }

    bool accepts(std::size_t, int) const { return true; }

    void accumulate(Rational& target, const Rational& source, std::size_t k, int s) const {
        target += source * powers[k][static_cast<std::size_t>(s)];
    }
};

struct KostkaPolicy {
    const Partition* content;

    bool accepts(std::size_t k, int s) const { return (*content)[k] == s; }

    void accumulate(BigInt& target, const BigInt& source, std::size_t, int) const {
        target += source;
    }
};

struct QPolyTableauPolicy {
    const QMonomialPoint* point;
    std::size_t emax;

    bool accepts(std::size_t k, int s) const {
        const auto shift = static_cast<long long>(point->exponents()[k]) * s;
        return shift <= static_cast<long long>(emax);
    }

    void accumulate(IntegerPolynomial& target, const IntegerPolynomial& source, std::size_t k,
                    int s) const {
        const auto shift = static_cast<std::size_t>(point->exponents()[k]) * static_cast<std::size_t>(s);
        target.add_scaled_shift(source, BigInt(1), shift, emax);
    }
};

}  // namespace detail

/// s_lambda(x_1..x_M) as the content-weighted sum over semistandard Young
/// tableaux with entries in 1..M. Total: repeated or zero coordinates are
/// fine. Zero when length(lam) > M; 1 for the empty partition.
inline Rational schur_tableau(const Partition& lam, const EvalPoint& point) {
    detail::RationalTableauPolicy policy(point, lam.first());
    return sum_over_tableaux<Rational>(lam, point.size(), Rational(1), policy);
}

/// Bialternant det(x_i^{lam_j + M - j}) / det(x_i^{M - j}) with lam padded
/// to length M. Needs pairwise-distinct coordinates.
inline Rational schur_bialternant(const Partition& lam, const EvalPoint& point) {
    if (!point.pairwise_distinct())
        throw DistinctnessViolation("schur_bialternant: coordinates must be pairwise distinct");
    const std::size_t m = point.size();
    if (lam.length() > m) return 0;

    Matrix<Rational> numerator(m, std::vector<Rational>(m));
    Matrix<Rational> vandermonde(m, std::vector<Rational>(m));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const auto base = static_cast<unsigned>(m - 1 - j);
            numerator[i][j] = pow(point[i], static_cast<unsigned>(lam[j]) + base);
            vandermonde[i][j] = pow(point[i], base);
        }
    }
    const Rational den = bareiss_determinant(std::move(vandermonde));
    return bareiss_determinant(std::move(numerator)) / den;
}

/// Kostka number K_{shape,content}: semistandard tableaux of the given shape
/// containing letter k exactly content[k] times.
inline BigInt kostka(const Partition& shape, const Partition& content) {
    if (shape.weight() != content.weight()) return 0;
    detail::KostkaPolicy policy{&content};
    return sum_over_tableaux<BigInt>(shape, content.length(), BigInt(1), policy);
}

/// Monomial symmetric function m_mu: sum over the distinct rearrangements of
/// the zero-padded exponent vector.
inline Rational monomial_sym(const Partition& mu, const EvalPoint& point) {
    const std::size_t m = point.size();
    if (mu.length() > m) return 0;
    std::vector<int> exps(m, 0);
    for (std::size_t i = 0; i < mu.length(); ++i) exps[i] = mu[i];
    std::sort(exps.begin(), exps.end());
    Rational total = 0;
    do {
        Rational term = 1;
        for (std::size_t i = 0; i < m; ++i) term *= pow(point[i], static_cast<unsigned>(exps[i]));
        total += term;
    } while (std::next_permutation(exps.begin(), exps.end()));
    return total;
}

/// s_lambda at x_i = q^{e_i}, collected by powers of q and truncated above
/// q^emax. Coefficients are nonnegative integers (tableau counts).
inline IntegerPolynomial schur_qpoly(const Partition& lam, const QMonomialPoint& point,
                                     std::size_t emax) {
    detail::QPolyTableauPolicy policy{&point, emax};
    return sum_over_tableaux<IntegerPolynomial>(lam, point.size(), IntegerPolynomial(BigInt(1)),
                                                policy);
}

}  // namespace pstat
