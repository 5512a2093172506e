#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace pstat {

// Energies live on the half-quantum grid: energy_halfq = 2*epsilon/(hbar omega).
// With q = exp(-beta hbar omega),
//   alpha  = exp(-beta(hbar omega/2 - mu))   (one particle on the lowest rung)
//   alpha' = exp(-beta(hbar omega - 2 mu))   (one pair on the two lowest rungs)
// a particle on a level of energy_halfq e carries alpha q^{(e-1)/2} and a pair
// on levels e_a, e_b carries alpha' q^{(e_a+e_b)/2 - 1}.

struct Level {
    int energy_halfq;
    int degeneracy;
    friend bool operator==(const Level&, const Level&) = default;
};

class SpectrumSpec {
public:
    SpectrumSpec(std::vector<Level> levels, int qmax) : levels_(std::move(levels)), qmax_(qmax) {
        if (qmax_ < 0) throw std::invalid_argument("SpectrumSpec: qmax must be nonnegative");
        for (std::size_t i = 0; i < levels_.size(); ++i) {
            const auto& l = levels_[i];
            if (l.energy_halfq <= 0 || l.energy_halfq % 2 == 0)
                throw std::invalid_argument("SpectrumSpec: energies must be positive odd half-quanta");
            if (l.degeneracy < 1) throw std::invalid_argument("SpectrumSpec: degeneracy must be >= 1");
            if (i > 0 && l.energy_halfq <= levels_[i - 1].energy_halfq)
                throw std::invalid_argument("SpectrumSpec: energies must be strictly increasing");
        }
    }

    const std::vector<Level>& levels() const noexcept { return levels_; }
    int qmax() const noexcept { return qmax_; }

    /// Number of single-particle states (levels counted with degeneracy).
    std::size_t state_count() const {
        std::size_t n = 0;
        for (const auto& l : levels_) n += static_cast<std::size_t>(l.degeneracy);
        return n;
    }

    /// Energy of every state, each level repeated by its degeneracy.
    std::vector<int> state_energies() const {
        std::vector<int> out;
        for (const auto& l : levels_) out.insert(out.end(), static_cast<std::size_t>(l.degeneracy), l.energy_halfq);
        return out;
    }

    friend bool operator==(const SpectrumSpec&, const SpectrumSpec&) = default;

private:
    std::vector<Level> levels_;
    int qmax_;
};

enum class SpectrumFamily {
    /// (2n + k + 3/2) hbar omega, n, k >= 0: the 1:2 anisotropic 2-D oscillator
    Anisotropic2D,
    /// (n + 1/2) hbar omega: the 1-D oscillator
    Linear1D,
};

/// Number of (n, k) in Z>=0 x Z>=0 with 2n + k = m, i.e. the degeneracy of
/// the level (m + 3/2) hbar omega. Plain enumeration.
inline int anisotropic_degeneracy(int m) {
    if (m < 0) throw std::invalid_argument("anisotropic_degeneracy: m must be nonnegative");
    int count = 0;
    for (int n = 0; 2 * n <= m; ++n)
        for (int k = 0; 2 * n + k <= m; ++k)
            if (2 * n + k == m) ++count;
    return count;
}

/// Levels relevant below q^qmax: for the 2-D family the levels m = 0..qmax-1
/// (Boltzmann exponent m+1 <= qmax), for the 1-D family n = 0..qmax.
inline SpectrumSpec build_spectrum(SpectrumFamily family, int qmax) {
    if (qmax < 1) throw std::invalid_argument("build_spectrum: qmax must be >= 1");
    std::vector<Level> levels;
    if (family == SpectrumFamily::Anisotropic2D) {
        for (int m = 0; m < qmax; ++m) levels.push_back({2 * m + 3, anisotropic_degeneracy(m)});
    } else {
        for (int n = 0; n <= qmax; ++n) levels.push_back({2 * n + 1, 1});
    }
    return SpectrumSpec(std::move(levels), qmax);
}

/// Truncated bivariate series sum c[j][t] a^j q^t with integer coefficients.
class BiSeries {
public:
    BiSeries(std::size_t amax, std::size_t qmax)
        : amax_(amax), qmax_(qmax), c_(amax + 1, std::vector<BigInt>(qmax + 1, BigInt(0))) {
        c_[0][0] = 1;
    }

    std::size_t amax() const noexcept { return amax_; }
    std::size_t qmax() const noexcept { return qmax_; }
    const BigInt& at(std::size_t j, std::size_t t) const { return c_.at(j).at(t); }
    const std::vector<std::vector<BigInt>>& table() const noexcept { return c_; }

    /// *= 1/(1 - a q^t), in place; a no-op when t > qmax.
    void multiply_geometric(std::size_t t) {
        if (t > qmax_) return;
        for (std::size_t j = 1; j <= amax_; ++j)
            for (std::size_t s = t; s <= qmax_; ++s) c_[j][s] += c_[j - 1][s - t];
    }

    friend bool operator==(const BiSeries&, const BiSeries&) = default;

private:
    std::size_t amax_;
    std::size_t qmax_;
    std::vector<std::vector<BigInt>> c_;
};

/// Bose grand canonical series prod_levels (1 - alpha q^{(e-1)/2})^{-d} in
/// (alpha, q). Only factors with q-exponent <= qmax are applied; the others
/// cannot reach q^qmax. A particle costs at least q^1 unless a level sits at
/// e = 1, so amax = qmax.
inline BiSeries gpf_bose_biseries(const SpectrumSpec& spec, int qmax) {
    if (qmax < 0) throw std::invalid_argument("gpf_bose_biseries: qmax must be nonnegative");
    const auto qm = static_cast<std::size_t>(qmax);
    BiSeries out(qm, qm);
    for (const auto& level : spec.levels()) {
        const auto exponent = static_cast<std::size_t>((level.energy_halfq - 1) / 2);
        for (int d = 0; d < level.degeneracy; ++d) out.multiply_geometric(exponent);
    }
    return out;
}

/// Conjugate-even grand canonical series prod_{a<b} 1/(1 - X_a X_b) with
/// X_a X_b = alpha' q^{(e_a+e_b)/2 - 1}, a < b running over single-particle
/// states. The alpha'-degree counts pairs, i.e. half the particle number.
inline BiSeries gpf_evencols_biseries(const SpectrumSpec& spec, int qmax) {
    if (qmax < 0) throw std::invalid_argument("gpf_evencols_biseries: qmax must be nonnegative");
    const auto qm = static_cast<std::size_t>(qmax);
    BiSeries out(qm, qm);
    const auto energies = spec.state_energies();
    for (std::size_t a = 0; a < energies.size(); ++a)
        for (std::size_t b = a + 1; b < energies.size(); ++b) {
            const int exponent = (energies[a] + energies[b]) / 2 - 1;
            if (exponent <= qmax) out.multiply_geometric(static_cast<std::size_t>(exponent));
        }
    return out;
}

/// Number of pairs a < b of 1-D oscillator levels with a + b = t.
inline int oscillator_pair_count(int t) {
    int count = 0;
    for (int a = 0; a <= t; ++a)
        for (int b = a + 1; a + b <= t; ++b)
            if (a + b == t) ++count;
    return count;
}

struct MultiplicityAudit {
    int t;            // q-exponent of the factor
    int bose;         // degeneracy of the 2-D level whose Bose factor carries q^t
    int pairs;        // number of 1-D level pairs whose product carries q^t
    bool match() const noexcept { return bose == pairs; }
};

struct EquivalenceReport {
    int qmax;
    BiSeries bose;
    BiSeries evencols;
    bool equal;
    std::optional<std::pair<std::size_t, std::size_t>> first_mismatch;  // (j, t)
    std::vector<std::pair<int, int>> degeneracy_table;                  // (m, d_m)
    std::vector<MultiplicityAudit> multiplicity_audit;
};

/// Bose gas on the 2-D anisotropic spectrum against the conjugate-even gas
/// on the 1-D spectrum, with alpha and alpha' as the same formal symbol.
/// Coefficients c[j][t] for all j, t <= qmax are exact and compared.
inline EquivalenceReport check_equivalence(int qmax) {
    if (qmax < 1) throw std::invalid_argument("check_equivalence: qmax must be >= 1");
    const auto bose_spec = build_spectrum(SpectrumFamily::Anisotropic2D, qmax);
    const auto pair_spec = build_spectrum(SpectrumFamily::Linear1D, qmax);
    BiSeries bose = gpf_bose_biseries(bose_spec, qmax);
    BiSeries evencols = gpf_evencols_biseries(pair_spec, qmax);

    std::optional<std::pair<std::size_t, std::size_t>> mismatch;
    for (std::size_t j = 0; j <= bose.amax() && !mismatch; ++j)
        for (std::size_t t = 0; t <= bose.qmax(); ++t)
            if (bose.at(j, t) != evencols.at(j, t)) {
                mismatch = std::pair{j, t};
                break;
            }

    std::vector<std::pair<int, int>> degeneracies;
    for (const auto& level : bose_spec.levels())
        degeneracies.emplace_back((level.energy_halfq - 3) / 2, level.degeneracy);

    std::vector<MultiplicityAudit> audit;
    for (int t = 1; t <= qmax; ++t) audit.push_back({t, anisotropic_degeneracy(t - 1), oscillator_pair_count(t)});

    return EquivalenceReport{qmax,          std::move(bose),         std::move(evencols), !mismatch,
                             mismatch,      std::move(degeneracies), std::move(audit)};
}

}  // namespace pstat
