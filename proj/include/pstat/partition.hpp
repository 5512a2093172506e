#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace pstat {

/// Integer partition: a weakly decreasing sequence of positive parts.
///
/// Trailing zeros are never stored, so (N,0,...,0) and (N) are the same
/// value. The empty partition is the unique partition of 0.
class Partition {
public:
    Partition() = default;

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Accepts trailing zeros and strips them; throws std::invalid_argument
    /// on negative parts or an increasing step.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }

    int weight() const noexcept {
        int w = 0;
        for (int p : parts_) w += p;
        return w;
    }

    /// Largest part, 0 for the empty partition.
    int first() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    /// i-th part (0-based), 0 beyond the length.
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    auto begin() const noexcept { return parts_.begin(); }
    auto end() const noexcept { return parts_.end(); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
};

/// Transposed Young diagram: result[j] = #{i : lam[i] > j}.
inline Partition conjugate(const Partition& lam) {
    std::vector<int> out(static_cast<std::size_t>(lam.first()), 0);
    for (int part : lam)
        for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
    return Partition(std::move(out));
}

/// True when every distinct part occurs an even number of times, which is
/// the same as the conjugate having only even parts.
inline bool has_even_multiplicities(const Partition& lam) {
    const auto& p = lam.parts();
    std::size_t i = 0;
    while (i < p.size()) {
        std::size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        if ((j - i) % 2 != 0) return false;
        i = j;
    }
    return true;
}

inline std::string to_string(const Partition& lam) {
    std::string s = "(";
    for (std::size_t i = 0; i < lam.length(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(lam[i]);
    }
    return s + ")";
}

/// Parses "4,2,1", "(4,2,1)" or "" / "()" / "0" for the empty partition.
inline Partition parse_partition(std::string_view text) {
    std::string s(text);
    if (!s.empty() && s.front() == '(') s.erase(s.begin());
    if (!s.empty() && s.back() == ')') s.pop_back();
    std::vector<int> parts;
    std::size_t start = 0;
    while (start <= s.size() && !s.empty()) {
        const auto comma = s.find(',', start);
        const std::string item = s.substr(start, comma - start);
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("malformed partition '" + std::string(text) + "'");
        parts.push_back(std::stoi(item));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string(e.what()) + ": '" + std::string(text) + "'");
    }
}

namespace detail {

inline void gen_partitions_into(int remaining, int max_part, std::size_t parts_left,
                                std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    if (parts_left == 0) return;
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        // the remaining parts_left-1 slots can hold at most part each
        if (static_cast<long long>(part) * static_cast<long long>(parts_left) < remaining) break;
        prefix.push_back(part);
        gen_partitions_into(remaining - part, part, parts_left - 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace detail

/// Every partition of n with at most max_parts parts, in reverse
/// lexicographic order: (n), (n-1,1), (n-2,2), (n-2,1,1), ...
inline std::vector<Partition> gen_partitions(int n, std::size_t max_parts) {
    if (n < 0) throw std::invalid_argument("gen_partitions: n must be nonnegative");
    if (max_parts == 0) throw std::invalid_argument("gen_partitions: max_parts must be positive");
    std::vector<Partition> out;
    std::vector<int> prefix;
    detail::gen_partitions_into(n, n, max_parts, prefix, out);
    return out;
}

}  // namespace pstat
