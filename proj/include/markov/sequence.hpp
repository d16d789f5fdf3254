#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "markov/bigint.hpp"

namespace markov {

/// Finite sequence of positive integers (a_1, ..., a_k). Every element is
/// at least 1; the empty sequence is allowed.
class Seq {
public:
    Seq() = default;
    Seq(std::initializer_list<BigInt> elems);
    explicit Seq(std::vector<BigInt> elems);

    [[nodiscard]] std::span<const BigInt> elements() const { return elems_; }
    [[nodiscard]] std::size_t size() const { return elems_.size(); }
    [[nodiscard]] bool empty() const { return elems_.empty(); }
    [[nodiscard]] const BigInt& operator[](std::size_t i) const { return elems_[i]; }
    [[nodiscard]] auto begin() const { return elems_.begin(); }
    [[nodiscard]] auto end() const { return elems_.end(); }

    [[nodiscard]] Seq drop_first() const;
    [[nodiscard]] Seq drop_last() const;
    [[nodiscard]] Seq reversed() const;

    friend bool operator==(const Seq&, const Seq&) = default;

private:
    std::vector<BigInt> elems_;
};

/// Exact fraction in lowest terms with a positive denominator.
class Rational {
public:
    /// Reduces num/den. Throws DomainError when den == 0.
    Rational(BigInt num, BigInt den);

    [[nodiscard]] const BigInt& numerator() const { return num_; }
    [[nodiscard]] const BigInt& denominator() const { return den_; }
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Rational&, const Rational&) = default;

private:
    BigInt num_;
    BigInt den_;
};

/// a followed by b.
[[nodiscard]] Seq concat(const Seq& a, const Seq& b);

/// k-fold self-concatenation; repeat(a, 0) is empty.
[[nodiscard]] Seq repeat(const Seq& a, std::size_t k);

/// Continuant K(a_1..a_k) via K_i = a_i K_{i-1} + K_{i-2}, K() = 1.
[[nodiscard]] BigInt continuant(std::span<const BigInt> elems);
[[nodiscard]] inline BigInt continuant(const Seq& a) { return continuant(a.elements()); }

/// Value of [a_1; a_2 : ... : a_k] as K(a) / K(a_2..a_k).
/// Throws DomainError for the empty sequence.
[[nodiscard]] Rational cf_eval(const Seq& a);

/// Integer sine: numerator of the continued fraction of a with its last
/// element dropped, i.e. K(a_1..a_{k-1}). A single-element sequence
/// yields 1 through the empty-continuant convention; the classical
/// construction only ever uses even lengths >= 2.
/// Throws DomainError for the empty sequence.
[[nodiscard]] BigInt integer_sine(const Seq& a);

/// Canonical text form "(a_1,a_2,...)"; "()" when empty.
[[nodiscard]] std::string to_string(const Seq& a);

}  // namespace markov
