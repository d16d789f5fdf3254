#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "markov/bigint.hpp"
#include "markov/error.hpp"
#include "markov/sequence.hpp"

namespace markov {

/// Parse failure carrying the 0-based offset of the offending character.
class ParseError : public DomainError {
public:
    ParseError(std::size_t position, const std::string& message);
    [[nodiscard]] std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// One "(a,b,...)^k" or "a^k" factor.
struct SeqFactor {
    std::vector<BigInt> group;
    std::uint64_t exponent = 1;

    friend bool operator==(const SeqFactor&, const SeqFactor&) = default;
};

/// Parsed sequence expression: factors concatenated left to right.
struct SeqExpr {
    std::vector<SeqFactor> factors;

    [[nodiscard]] Seq denote() const;
    [[nodiscard]] std::size_t denoted_length() const;
    /// Canonical text. Parsing the rendering gives back an equal SeqExpr.
    [[nodiscard]] std::string render() const;

    friend bool operator==(const SeqExpr&, const SeqExpr&) = default;
};

/// Longest sequence an expression may denote.
inline constexpr std::size_t kMaxDenotedLength = 1u << 22;

/// Grammar, with whitespace allowed between tokens:
///
///   expr   := factor ([","] factor)*
///   factor := group ["^" uint]
///   group  := "(" uint ("," uint)* ")" | uint
///
/// Elements must be >= 1, exponents >= 0. An optional comma between
/// factors lets bare lists like "2,1,3" read naturally. Throws ParseError
/// for syntax errors, zero elements, and expressions denoting the empty
/// sequence or more than kMaxDenotedLength elements.
[[nodiscard]] SeqExpr parse_seq_expr(std::string_view text);

/// parse_seq_expr(text).denote()
[[nodiscard]] Seq parse_seq(std::string_view text);

}  // namespace markov
