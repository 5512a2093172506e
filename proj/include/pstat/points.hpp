#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "rational.hpp"
#include "schur.hpp"

namespace pstat {

/// (2, 3, 5, 7, ...): the first M primes. Distinct and nonzero, so every
/// backend and closed form applies.
inline EvalPoint prime_point(std::size_t m) {
    static constexpr int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (m == 0 || m > std::size(primes)) throw std::invalid_argument("prime_point: 1 <= M <= 12");
    std::vector<Rational> coords;
    for (std::size_t i = 0; i < m; ++i) coords.emplace_back(primes[i]);
    return EvalPoint(std::move(coords));
}

/// Seeded point of M pairwise-distinct positive rationals num/den with
/// num in [1, 20], den in [1, 7]. Uses raw mt19937_64 output (whose
/// sequence is fixed by the standard) so a seed gives the same point on
/// every platform.
inline EvalPoint random_distinct_point(std::size_t m, std::uint64_t seed) {
    if (m == 0) throw std::invalid_argument("random_distinct_point: M must be positive");
    std::mt19937_64 rng(seed);
    std::vector<Rational> coords;
    while (coords.size() < m) {
        const auto num = static_cast<long>(rng() % 20) + 1;
        const auto den = static_cast<long>(rng() % 7) + 1;
        Rational x(num, den);
        x.canonicalize();
        bool fresh = true;
        for (const auto& c : coords)
            if (c == x) fresh = false;
        if (fresh) coords.push_back(x);
    }
    return EvalPoint(std::move(coords));
}

}  // namespace pstat
