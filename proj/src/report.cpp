#include "markov/report.hpp"

#include <algorithm>
#include <charconv>
#include <tuple>

#include "markov/error.hpp"

namespace markov {

namespace {

std::uint64_t parse_bound(std::string_view text, std::string_view whole) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        throw DomainError("invalid range '" + std::string(whole) + "'");
    return value;
}

std::optional<IntRange> hull(const std::optional<IntRange>& a, const std::optional<IntRange>& b) {
    if (!a) return b;
    if (!b) return a;
    return IntRange{std::min(a->first, b->first), std::max(a->last, b->last)};
}

}  // namespace

IntRange IntRange::parse(std::string_view text) {
    auto sep = text.find("..");
    if (sep == std::string_view::npos) {
        auto v = parse_bound(text, text);
        return of(v, v);
    }
    return of(parse_bound(text.substr(0, sep), text), parse_bound(text.substr(sep + 2), text));
}

IntRange IntRange::of(std::uint64_t first, std::uint64_t last) {
    if (first == 0 || last < first)
        throw DomainError("invalid range " + std::to_string(first) + ".." + std::to_string(last) +
                          ": need 1 <= first <= last");
    return {first, last};
}

std::string IntRange::to_string() const {
    return std::to_string(first) + ".." + std::to_string(last);
}

bool VerificationReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::size_t VerificationReport::failure_count() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

void VerificationReport::merge(VerificationReport other) {
    n_range = hull(n_range, other.n_range);
    j_range = hull(j_range, other.j_range);
    checks.insert(checks.end(), std::make_move_iterator(other.checks.begin()),
                  std::make_move_iterator(other.checks.end()));
}

void VerificationReport::sort() {
    std::stable_sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) {
        return std::tie(a.claim, a.n, a.j) < std::tie(b.claim, b.n, b.j);
    });
}

}  // namespace markov
