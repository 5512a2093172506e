#pragma once

#include <climits>
#include <string>
#include <vector>

#include <json.hpp>

#include "equivalence.hpp"
#include "partition.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "series.hpp"
#include "statistics.hpp"
#include "thermo.hpp"

namespace pstat::io {

using nlohmann::json;

inline json rational_list(const std::vector<Rational>& xs) {
    json out = json::array();
    for (const auto& x : xs) out.push_back(to_string(x));
    return out;
}

/// Integers that fit a signed 64-bit value as JSON numbers, larger ones as
/// decimal strings.
inline json integer(const BigInt& z) {
    if (z.fits_slong_p() && sizeof(long) >= 8) return json(z.get_si());
    return json(z.get_str());
}

/// "[c_0, c_1, ...]" with rationals as num/den.
inline std::string series_text(const std::vector<Rational>& coeffs) {
    std::string s = "[";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i > 0) s += ", ";
        s += to_string(coeffs[i]);
    }
    return s + "]";
}

inline std::string series_text(const FugacitySeries& s) { return series_text(s.coeffs()); }

inline std::string poly_text(const IntegerPolynomial& p, std::size_t length) {
    std::string s = "[";
    for (std::size_t i = 0; i < length; ++i) {
        if (i > 0) s += ", ";
        s += to_string(p[i]);
    }
    return s + "]";
}

inline json partition_json(const Partition& lam) { return json(lam.parts()); }

inline json to_json(const IdentityReport& r) {
    json j;
    j["kind"] = to_string(r.kind);
    j["point"] = rational_list(r.point.coords());
    j["nmax"] = r.nmax;
    j["equal"] = r.equal;
    j["first_mismatch"] = r.first_mismatch ? json(*r.first_mismatch) : json(nullptr);
    j["lhs"] = rational_list(r.lhs.coeffs());
    j["rhs"] = rational_list(r.rhs.coeffs());
    return j;
}

inline json to_json(const BiSeries& s) {
    json rows = json::array();
    for (const auto& row : s.table()) {
        json r = json::array();
        for (const auto& c : row) r.push_back(integer(c));
        rows.push_back(std::move(r));
    }
    return rows;
}

inline json to_json(const EquivalenceReport& r) {
    json j;
    j["qmax"] = r.qmax;
    j["equal"] = r.equal;
    j["first_mismatch"] =
        r.first_mismatch ? json::array({r.first_mismatch->first, r.first_mismatch->second}) : json(nullptr);
    json table = json::array();
    for (const auto& [m, d] : r.degeneracy_table) table.push_back({{"m", m}, {"energy_halfq", 2 * m + 3}, {"degeneracy", d}});
    j["degeneracy_table"] = std::move(table);
    json audit = json::array();
    for (const auto& a : r.multiplicity_audit)
        audit.push_back({{"t", a.t}, {"bose", a.bose}, {"pairs", a.pairs}, {"match", a.match()}});
    j["multiplicity_audit"] = std::move(audit);
    j["bose"] = to_json(r.bose);
    j["evencols"] = to_json(r.evencols);
    return j;
}

/// m,energy_halfq,degeneracy
inline std::string degeneracy_csv(const EquivalenceReport& r) {
    std::string out = "m,energy_halfq,degeneracy\n";
    for (const auto& [m, d] : r.degeneracy_table)
        out += std::to_string(m) + "," + std::to_string(2 * m + 3) + "," + std::to_string(d) + "\n";
    return out;
}

inline json to_json(const ThermoResult& r) {
    return {{"logZ", r.log_z}, {"meanN", r.mean_n}, {"meanE_over_hw", r.mean_e_over_hw}};
}

}  // namespace pstat::io
