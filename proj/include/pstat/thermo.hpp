#pragma once

#include <cmath>
#include <cstddef>
#include <cstdio>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmp.h>

#include "canonical.hpp"
#include "equivalence.hpp"
#include "errors.hpp"
#include "polynomial.hpp"
#include "schur.hpp"
#include "statistics.hpp"

namespace pstat {

inline constexpr double kTailBound = 1e-9;
inline constexpr double kMuRelativeTolerance = 1e-8;
inline constexpr int kMaxBracketDoublings = 200;

struct ThermoParams {
    double beta_hw;     // beta hbar omega
    double mu_over_hw;  // mu / (hbar omega)
    int nmax;           // particle-number truncation
};

struct ThermoResult {
    double log_z;
    double mean_n;
    double mean_e_over_hw;
};

namespace detail {

inline double log_bigint(const BigInt& z) {
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

inline double log_sum_exp(const std::vector<double>& xs) {
    double top = -std::numeric_limits<double>::infinity();
    for (double x : xs) top = std::max(top, x);
    if (!std::isfinite(top)) return top;
    double s = 0;
    for (double x : xs) s += std::exp(x - top);
    return top + std::log(s);
}

}  // namespace detail

/// Exact canonical partition functions Z_N(q), N = 0..nmax, of a spectrum on
/// the half-quantum grid. Floating point only enters in evaluate(); building
/// the table once lets a mu sweep or solve reuse it.
class CanonicalTable {
public:
    CanonicalTable(const StatisticsKind& kind, const SpectrumSpec& spec, int nmax)
        : kind_(kind), states_(spec.state_count()), nmax_(nmax) {
        if (nmax < 1) throw std::invalid_argument("CanonicalTable: nmax must be >= 1");
        if (states_ == 0) throw std::invalid_argument("CanonicalTable: empty spectrum");
        const QMonomialPoint point(spec.state_energies());
        const auto top = static_cast<std::size_t>(point.max_exponent());
        for (int n = 0; n <= nmax; ++n)
            z_.push_back(z_canonical_qpoly(kind, point, n, top * static_cast<std::size_t>(n)));
    }

    int nmax() const noexcept { return nmax_; }

    /// Exact Z_N as a polynomial in q^{1/2} = exp(-beta hbar omega / 2).
    const IntegerPolynomial& z(int n) const { return z_.at(static_cast<std::size_t>(n)); }

    /// Index of the highest-order term whose size decides whether the
    /// truncation has converged; nullopt when the sum is already complete.
    std::optional<int> tail_index() const {
        const auto cap = max_particle_number(kind_, states_);
        if (cap && *cap <= nmax_) return std::nullopt;
        if (even_weight_only(kind_) && nmax_ % 2 != 0) return nmax_ - 1;
        return nmax_;
    }

    /// Throws TruncationTail when the last admissible term exceeds the tail bound.
    ThermoResult evaluate(double beta_hw, double mu_over_hw) const {
        if (!(beta_hw > 0)) throw std::invalid_argument("evaluate: beta_hw must be positive");
        const double half = beta_hw / 2.0;
        std::vector<double> log_terms(z_.size(), -std::numeric_limits<double>::infinity());
        std::vector<double> energy(z_.size(), 0.0);
        for (std::size_t n = 0; n < z_.size(); ++n) {
            const auto& coeffs = z_[n].coeffs();
            std::vector<double> parts;
            std::vector<std::size_t> degrees;
            for (std::size_t t = 0; t < coeffs.size(); ++t) {
                if (coeffs[t] == 0) continue;
                parts.push_back(detail::log_bigint(coeffs[t]) - half * static_cast<double>(t));
                degrees.push_back(t);
            }
            if (parts.empty()) continue;
            const double log_zn = detail::log_sum_exp(parts);
            double e = 0;
            for (std::size_t i = 0; i < parts.size(); ++i)
                e += 0.5 * static_cast<double>(degrees[i]) * std::exp(parts[i] - log_zn);
            energy[n] = e;
            log_terms[n] = static_cast<double>(n) * beta_hw * mu_over_hw + log_zn;
        }
        const double log_z = detail::log_sum_exp(log_terms);
        ThermoResult r{log_z, 0.0, 0.0};
        for (std::size_t n = 0; n < z_.size(); ++n) {
            const double w = std::exp(log_terms[n] - log_z);
            r.mean_n += static_cast<double>(n) * w;
            r.mean_e_over_hw += energy[n] * w;
        }
        if (const auto idx = tail_index()) {
            const double tail = std::exp(log_terms[static_cast<std::size_t>(*idx)] - log_z);
            if (tail >= kTailBound) {
                char buf[160];
                std::snprintf(buf, sizeof buf,
                              "truncated sum not converged: term N=%d carries weight %.3g (bound %.0e)", *idx,
                              tail, kTailBound);
                throw TruncationTail(buf);
            }
        }
        return r;
    }

private:
    StatisticsKind kind_;
    std::size_t states_;
    int nmax_;
    std::vector<IntegerPolynomial> z_;
};

/// log Z, <N> and <E>/(hbar omega) of the truncated grand canonical sum.
inline ThermoResult evaluate(const StatisticsKind& kind, const SpectrumSpec& spec,
                             const ThermoParams& params) {
    return CanonicalTable(kind, spec, params.nmax).evaluate(params.beta_hw, params.mu_over_hw);
}

/// mu/(hbar omega) with <N> = target to within 1e-8 max(1, target), by
/// bracket doubling then bisection. <N> must increase with mu; a violation
/// seen while bracketing is reported as BracketFailure.
inline double solve_mu(const CanonicalTable& table, double beta_hw, double target) {
    if (!(target > 0)) throw std::invalid_argument("solve_mu: target must be positive");
    // Aim for the relative tolerance; accept the absolute floor of
    // kMuRelativeTolerance only when bisection runs out of doubles.
    const double tol = kMuRelativeTolerance * target;
    const double floor_tol = kMuRelativeTolerance * std::max(1.0, target);

    // nullopt marks the region where the truncation tail is too large; it
    // only grows with mu, so it behaves as "above every target".
    auto mean_n = [&](double mu) -> std::optional<double> {
        try {
            return table.evaluate(beta_hw, mu).mean_n;
        } catch (const TruncationTail&) {
            return std::nullopt;
        }
    };
    auto fail = [&](const std::string& why) {
        char buf[64];
        std::snprintf(buf, sizeof buf, " (target %.17g)", target);
        return BracketFailure("solve_mu: " + why + buf);
    };

    double step = 1.0;
    double lo = -step;
    double hi = step;
    int doublings = 0;

    std::optional<double> lo_val = mean_n(lo);
    while (!lo_val || *lo_val > target) {
        if (++doublings > kMaxBracketDoublings) throw fail("no lower bracket");
        const double next = lo - step;
        step *= 2;
        const auto next_val = mean_n(next);
        if (lo_val && next_val && *next_val > *lo_val) throw fail("<N> not increasing in mu");
        lo = next;
        lo_val = next_val;
    }
    if (std::abs(*lo_val - target) <= tol) return lo;

    step = 1.0;
    std::optional<double> hi_val = mean_n(hi);
    while (hi_val && *hi_val < target) {
        if (++doublings > kMaxBracketDoublings) throw fail("no upper bracket");
        const double next = hi + step;
        step *= 2;
        const auto next_val = mean_n(next);
        if (next_val && *next_val < *hi_val) throw fail("<N> not increasing in mu");
        hi = next;
        hi_val = next_val;
    }
    if (hi_val && *hi_val < *lo_val) throw fail("<N> not increasing in mu");
    if (hi_val && std::abs(*hi_val - target) <= tol) return hi;

    bool hi_in_tail = !hi_val;
    std::optional<double> best;
    double best_err = std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < 2000; ++iter) {
        const double mid = lo + (hi - lo) / 2;
        if (mid <= lo || mid >= hi) break;
        const auto v = mean_n(mid);
        if (!v) {
            hi = mid;
            hi_in_tail = true;
            continue;
        }
        const double err = std::abs(*v - target);
        if (err <= tol) return mid;
        if (err < best_err) {
            best_err = err;
            best = mid;
        }
        if (*v < target) {
            lo = mid;
        } else {
            hi = mid;
            hi_in_tail = false;
        }
    }
    if (best && best_err <= floor_tol) return *best;
    if (hi_in_tail)
        throw TruncationTail("solve_mu: target mean particle number not reachable before the truncation tail; "
                             "raise nmax");
    throw fail("bisection did not reach tolerance");
}

inline double solve_mu(const StatisticsKind& kind, const SpectrumSpec& spec, double beta_hw,
                       double target, int nmax) {
    return solve_mu(CanonicalTable(kind, spec, nmax), beta_hw, target);
}

/// Chemical potential for the conjugate-even gas on the 1-D spectrum that
/// gives alpha' = alpha for a Bose gas at mu on the 2-D spectrum:
/// hbar omega - 2 mu' = hbar omega / 2 - mu.
inline double pair_matching_mu(double bose_mu_over_hw) { return bose_mu_over_hw / 2.0 + 0.25; }

inline std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

/// CSV rows beta_hw,mu_over_hw,meanN,meanE_over_hw,logZ for each (beta, mu).
inline std::string thermo_sweep_csv(const StatisticsKind& kind, const SpectrumSpec& spec, int nmax,
                                    const std::vector<double>& betas, const std::vector<double>& mus) {
    const CanonicalTable table(kind, spec, nmax);
    std::string out = "beta_hw,mu_over_hw,meanN,meanE_over_hw,logZ\n";
    for (double beta : betas)
        for (double mu : mus) {
            const auto r = table.evaluate(beta, mu);
            out += format_double(beta) + "," + format_double(mu) + "," + format_double(r.mean_n) + "," +
                   format_double(r.mean_e_over_hw) + "," + format_double(r.log_z) + "\n";
        }
    return out;
}

}  // namespace pstat
