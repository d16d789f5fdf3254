#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace markov {

/// Inclusive range first..last of positive integers.
struct IntRange {
    std::uint64_t first = 1;
    std::uint64_t last = 1;

    /// Parses "a..b" or a single "a". Throws DomainError for malformed
    /// text, zero bounds, or first > last.
    static IntRange parse(std::string_view text);
    /// Throws DomainError unless 1 <= first <= last.
    static IntRange of(std::uint64_t first, std::uint64_t last);

    [[nodiscard]] std::uint64_t count() const { return last - first + 1; }
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// One named value supporting a check, rendered as a decimal string.
struct Witness {
    std::string name;
    std::string value;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct Check {
    std::string claim;
    std::optional<std::uint64_t> n;
    std::optional<std::uint64_t> j;
    bool pass = false;
    std::vector<Witness> witnesses;

    friend bool operator==(const Check&, const Check&) = default;
};

/// Outcome of a verification sweep. Failures are entries, never aborts.
struct VerificationReport {
    std::optional<IntRange> n_range;
    std::optional<IntRange> j_range;
    std::vector<Check> checks;

    [[nodiscard]] bool all_pass() const;
    [[nodiscard]] std::size_t failure_count() const;

    /// Appends other's checks and widens the ranges to cover both.
    void merge(VerificationReport other);
    /// Orders checks lexicographically by (claim, n, j).
    void sort();

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

}  // namespace markov
