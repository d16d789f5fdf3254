#include "markov/seq_expr.hpp"

#include <cctype>
#include <limits>

namespace markov {

ParseError::ParseError(std::size_t position, const std::string& message)
    : DomainError("parse error at column " + std::to_string(position + 1) + ": " + message),
      position_(position) {}

Seq SeqExpr::denote() const {
    std::vector<BigInt> out;
    out.reserve(denoted_length());
    for (const auto& f : factors) {
        for (std::uint64_t k = 0; k < f.exponent; ++k) out.insert(out.end(), f.group.begin(), f.group.end());
    }
    return Seq(std::move(out));
}

std::size_t SeqExpr::denoted_length() const {
    std::size_t total = 0;
    for (const auto& f : factors) total += f.group.size() * f.exponent;
    return total;
}

std::string SeqExpr::render() const {
    std::string out;
    for (const auto& f : factors) {
        bool bare = f.group.size() == 1;
        // Two digit runs in a row need a separator to stay distinct.
        if (!out.empty() && bare && std::isdigit(static_cast<unsigned char>(out.back()))) out += ',';
        if (bare) {
            out += f.group.front().get_str();
        } else {
            out += '(';
            for (std::size_t i = 0; i < f.group.size(); ++i) {
                if (i) out += ',';
                out += f.group[i].get_str();
            }
            out += ')';
        }
        if (f.exponent != 1) out += '^' + std::to_string(f.exponent);
    }
    return out;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    SeqExpr parse() {
        SeqExpr expr;
        skip_ws();
        if (at_end()) fail("empty expression");
        expr.factors.push_back(factor());
        for (;;) {
            skip_ws();
            if (at_end()) break;
            if (peek() == ',') {
                ++pos_;
                skip_ws();
                if (at_end()) fail("expected a factor after ','");
            }
            expr.factors.push_back(factor());
        }
        check_length(expr);
        return expr;
    }

private:
    SeqFactor factor() {
        SeqFactor f;
        if (peek() == '(') {
            ++pos_;
            f.group.push_back(element());
            for (;;) {
                skip_ws();
                if (at_end()) fail("unterminated group, expected ')'");
                if (peek() == ')') {
                    ++pos_;
                    break;
                }
                if (peek() != ',') fail(std::string("expected ',' or ')', found '") + peek() + "'");
                ++pos_;
                f.group.push_back(element());
            }
        } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
            f.group.push_back(element());
        } else {
            fail(std::string("expected '(' or a digit, found '") + peek() + "'");
        }
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            f.exponent = exponent();
        }
        return f;
    }

    BigInt element() {
        skip_ws();
        std::size_t start = pos_;
        std::string_view digits = digit_run();
        BigInt value(std::string(digits), 10);
        if (value == 0) throw ParseError(start, "sequence elements must be >= 1");
        return value;
    }

    std::uint64_t exponent() {
        skip_ws();
        std::size_t start = pos_;
        std::string_view digits = digit_run();
        std::uint64_t value = 0;
        for (char c : digits) {
            auto d = static_cast<std::uint64_t>(c - '0');
            if (value > (std::numeric_limits<std::uint64_t>::max() - d) / 10)
                throw ParseError(start, "exponent too large");
            value = value * 10 + d;
        }
        return value;
    }

    std::string_view digit_run() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) {
            if (at_end()) fail("unexpected end of input, expected a number");
            fail(std::string("expected a number, found '") + peek() + "'");
        }
        return text_.substr(start, pos_ - start);
    }

    void check_length(const SeqExpr& expr) const {
        std::size_t total = 0;
        for (const auto& f : expr.factors) {
            if (f.exponent > kMaxDenotedLength) fail_at(text_.size(), "expression denotes too many elements");
            total += f.group.size() * f.exponent;
            if (total > kMaxDenotedLength) fail_at(text_.size(), "expression denotes too many elements");
        }
        if (total == 0) fail_at(0, "expression denotes the empty sequence");
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }
    [[noreturn]] static void fail_at(std::size_t pos, const std::string& msg) { throw ParseError(pos, msg); }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }
    [[nodiscard]] char peek() const { return text_[pos_]; }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

SeqExpr parse_seq_expr(std::string_view text) { return Parser(text).parse(); }

Seq parse_seq(std::string_view text) { return parse_seq_expr(text).denote(); }

}  // namespace markov
