#include "markov/sequence.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "markov/error.hpp"

namespace markov {

BigInt parse_decimal(std::string_view text) {
    std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (start == text.size()) throw DomainError("expected decimal digits");
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw DomainError("invalid decimal integer: '" + std::string(text) + "'");
    }
    std::string digits(text.substr(text[0] == '+' ? 1 : 0));
    return BigInt(digits, 10);
}

namespace {

void require_positive(const std::vector<BigInt>& elems) {
    for (const auto& e : elems) {
        if (e < 1) throw DomainError("sequence elements must be positive, got " + to_decimal(e));
    }
}

}  // namespace

Seq::Seq(std::initializer_list<BigInt> elems) : elems_(elems) { require_positive(elems_); }

Seq::Seq(std::vector<BigInt> elems) : elems_(std::move(elems)) { require_positive(elems_); }

Seq Seq::drop_first() const {
    Seq out;
    if (!elems_.empty()) out.elems_.assign(elems_.begin() + 1, elems_.end());
    return out;
}

Seq Seq::drop_last() const {
    Seq out;
    if (!elems_.empty()) out.elems_.assign(elems_.begin(), elems_.end() - 1);
    return out;
}

Seq Seq::reversed() const {
    Seq out;
    out.elems_.assign(elems_.rbegin(), elems_.rend());
    return out;
}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw DomainError("zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

std::string Rational::to_string() const { return to_decimal(num_) + "/" + to_decimal(den_); }

Seq concat(const Seq& a, const Seq& b) {
    std::vector<BigInt> out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return Seq(std::move(out));
}

Seq repeat(const Seq& a, std::size_t k) {
    std::vector<BigInt> out;
    out.reserve(a.size() * k);
    for (std::size_t i = 0; i < k; ++i) out.insert(out.end(), a.begin(), a.end());
    return Seq(std::move(out));
}

BigInt continuant(std::span<const BigInt> elems) {
    BigInt prev = 0;  // K of the sequence shorter by two; K_{-1} = 0
    BigInt cur = 1;   // K() = 1
    for (const auto& x : elems) {
        BigInt next = x * cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Rational cf_eval(const Seq& a) {
    if (a.empty()) throw DomainError("undefined continued fraction: empty sequence");
    auto elems = a.elements();
    return Rational(continuant(elems), continuant(elems.subspan(1)));
}

BigInt integer_sine(const Seq& a) {
    if (a.empty()) throw DomainError("integer sine of an empty sequence is undefined");
    auto elems = a.elements();
    return continuant(elems.first(elems.size() - 1));
}

std::string to_string(const Seq& a) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) out << ',';
        out << a[i].get_str();
    }
    out << ')';
    return out.str();
}

}  // namespace markov
