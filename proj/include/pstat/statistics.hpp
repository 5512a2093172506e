#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"

namespace pstat {

// Restriction rules on the partitions summed in Z_N. Each alternative is one
// quantum statistics based on the permutation group.
namespace kinds {

struct Bose {
    friend bool operator==(const Bose&, const Bose&) = default;
};
struct Fermi {
    friend bool operator==(const Fermi&, const Fermi&) = default;
};
/// lambda_1 <= order
struct ParaFermi {
    int order;
    friend bool operator==(const ParaFermi&, const ParaFermi&) = default;
};
/// length(lambda) <= order
struct ParaBose {
    int order;
    friend bool operator==(const ParaBose&, const ParaBose&) = default;
};
/// length(lambda) <= row_bound and lambda_1 <= col_bound
struct PQ {
    int row_bound;
    int col_bound;
    friend bool operator==(const PQ&, const PQ&) = default;
};
/// No restriction.
struct HST {
    friend bool operator==(const HST&, const HST&) = default;
};
/// Every part even.
struct EvenRows {
    friend bool operator==(const EvenRows&, const EvenRows&) = default;
};
/// Every part of the conjugate even.
struct EvenCols {
    friend bool operator==(const EvenCols&, const EvenCols&) = default;
};

}  // namespace kinds

class StatisticsKind {
public:
    using Variant = std::variant<kinds::Bose, kinds::Fermi, kinds::ParaFermi, kinds::ParaBose,
                                 kinds::PQ, kinds::HST, kinds::EvenRows, kinds::EvenCols>;

    StatisticsKind(kinds::Bose k) : v_(k) {}
    StatisticsKind(kinds::Fermi k) : v_(k) {}
    StatisticsKind(kinds::HST k) : v_(k) {}
    StatisticsKind(kinds::EvenRows k) : v_(k) {}
    StatisticsKind(kinds::EvenCols k) : v_(k) {}
    StatisticsKind(kinds::ParaFermi k) : v_(k) { require_positive(k.order); }
    StatisticsKind(kinds::ParaBose k) : v_(k) { require_positive(k.order); }
    StatisticsKind(kinds::PQ k) : v_(k) {
        require_positive(k.row_bound);
        require_positive(k.col_bound);
    }

    static StatisticsKind bose() { return kinds::Bose{}; }
    static StatisticsKind fermi() { return kinds::Fermi{}; }
    static StatisticsKind parafermi(int p) { return kinds::ParaFermi{p}; }
    static StatisticsKind parabose(int p) { return kinds::ParaBose{p}; }
    static StatisticsKind pq(int p, int q) { return kinds::PQ{p, q}; }
    static StatisticsKind hst() { return kinds::HST{}; }
    static StatisticsKind even_rows() { return kinds::EvenRows{}; }
    static StatisticsKind even_cols() { return kinds::EvenCols{}; }

    const Variant& variant() const noexcept { return v_; }

    template <class K>
    bool is() const noexcept { return std::holds_alternative<K>(v_); }

    template <class K>
    const K* get_if() const noexcept { return std::get_if<K>(&v_); }

    friend bool operator==(const StatisticsKind&, const StatisticsKind&) = default;

private:
    static void require_positive(int order) {
        if (order <= 0) throw std::invalid_argument("statistics order parameters must be positive");
    }

    Variant v_;
};

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

/// Whether the statistics admits lam as an allowed symmetry type.
inline bool admits(const StatisticsKind& kind, const Partition& lam) {
    const auto len = static_cast<long long>(lam.length());
    return std::visit(
        overloaded{
            [&](kinds::Bose) { return len <= 1; },
            [&](kinds::Fermi) { return lam.first() <= 1; },
            [&](kinds::ParaFermi k) { return lam.first() <= k.order; },
            [&](kinds::ParaBose k) { return len <= k.order; },
            [&](kinds::PQ k) { return len <= k.row_bound && lam.first() <= k.col_bound; },
            [&](kinds::HST) { return true; },
            [&](kinds::EvenRows) {
                for (int part : lam)
                    if (part % 2 != 0) return false;
                return true;
            },
            [&](kinds::EvenCols) { return has_even_multiplicities(lam); },
        },
        kind.variant());
}

/// gen_partitions(n, max_parts) filtered by admits, same order.
inline std::vector<Partition> admitted_partitions(const StatisticsKind& kind, int n,
                                                  std::size_t max_parts) {
    std::vector<Partition> out;
    for (auto& lam : gen_partitions(n, max_parts))
        if (admits(kind, lam)) out.push_back(std::move(lam));
    return out;
}

/// Largest particle number with a nonvanishing Z_N on an M-level system,
/// or nullopt when Z_N never vanishes identically.
inline std::optional<long long> max_particle_number(const StatisticsKind& kind,
                                                    std::size_t levels) {
    const auto m = static_cast<long long>(levels);
    return std::visit(
        overloaded{
            [&](kinds::Fermi) -> std::optional<long long> { return m; },
            [&](kinds::ParaFermi k) -> std::optional<long long> { return m * k.order; },
            [&](kinds::PQ k) -> std::optional<long long> {
                return std::min<long long>(m, k.row_bound) * k.col_bound;
            },
            [&](auto) -> std::optional<long long> { return std::nullopt; },
        },
        kind.variant());
}

/// True for kinds whose admitted partitions all have even weight.
inline bool even_weight_only(const StatisticsKind& kind) {
    return kind.is<kinds::EvenRows>() || kind.is<kinds::EvenCols>();
}

/// Fixed names: bose, fermi, parafermi:p, parabose:p, pq:p:q, hst,
/// even-rows, even-cols.
inline std::string to_string(const StatisticsKind& kind) {
    return std::visit(
        overloaded{
            [](kinds::Bose) -> std::string { return "bose"; },
            [](kinds::Fermi) -> std::string { return "fermi"; },
            [](kinds::ParaFermi k) { return "parafermi:" + std::to_string(k.order); },
            [](kinds::ParaBose k) { return "parabose:" + std::to_string(k.order); },
            [](kinds::PQ k) {
                return "pq:" + std::to_string(k.row_bound) + ":" + std::to_string(k.col_bound);
            },
            [](kinds::HST) -> std::string { return "hst"; },
            [](kinds::EvenRows) -> std::string { return "even-rows"; },
            [](kinds::EvenCols) -> std::string { return "even-cols"; },
        },
        kind.variant());
}

inline StatisticsKind parse_kind(std::string_view text) {
    const std::string s(text);
    auto fail = [&]() -> ParseError { return ParseError("unknown statistics kind '" + s + "'"); };
    auto order = [&](std::string_view digits) {
        if (digits.empty() || digits.size() > 9 ||
            digits.find_first_not_of("0123456789") != std::string_view::npos)
            throw fail();
        const int value = std::stoi(std::string(digits));
        if (value <= 0) throw fail();
        return value;
    };

    if (s == "bose") return kinds::Bose{};
    if (s == "fermi") return kinds::Fermi{};
    if (s == "hst") return kinds::HST{};
    if (s == "even-rows") return kinds::EvenRows{};
    if (s == "even-cols") return kinds::EvenCols{};
    if (s.starts_with("parafermi:")) return kinds::ParaFermi{order(text.substr(10))};
    if (s.starts_with("parabose:")) return kinds::ParaBose{order(text.substr(9))};
    if (s.starts_with("pq:")) {
        const auto rest = text.substr(3);
        const auto colon = rest.find(':');
        if (colon == std::string_view::npos) throw fail();
        return kinds::PQ{order(rest.substr(0, colon)), order(rest.substr(colon + 1))};
    }
    throw fail();
}

}  // namespace pstat
