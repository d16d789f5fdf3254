#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "markov/bigint.hpp"

namespace markov {

/// Dense univariate polynomial in n with big-integer coefficients.
/// Coefficient i multiplies n^i. Canonical form has no trailing zero
/// coefficient, so the zero polynomial stores nothing.
class IntPoly {
public:
    struct Term {
        BigInt coeff;
        std::size_t power;
    };

    IntPoly() = default;
    IntPoly(BigInt constant);  // NOLINT(google-explicit-constructor)
    IntPoly(int constant) : IntPoly(BigInt(constant)) {}  // NOLINT

    static IntPoly from_coefficients(std::vector<BigInt> coeffs);
    /// Sum of c n^k over the given terms; repeated powers accumulate.
    static IntPoly from_terms(std::initializer_list<Term> terms);
    /// The indeterminate n.
    static IntPoly var();

    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    [[nodiscard]] long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    [[nodiscard]] BigInt coefficient(std::size_t power) const;
    [[nodiscard]] std::span<const BigInt> coefficients() const { return coeffs_; }

    /// Horner evaluation at n = x.
    [[nodiscard]] BigInt eval(const BigInt& x) const;

    /// "n^3 + 3*n", "0", "-n^2 + 1".
    [[nodiscard]] std::string to_string() const;

    IntPoly& operator+=(const IntPoly& q);
    IntPoly& operator-=(const IntPoly& q);
    IntPoly& operator*=(const IntPoly& q);

    friend IntPoly operator+(IntPoly p, const IntPoly& q) { return p += q; }
    friend IntPoly operator-(IntPoly p, const IntPoly& q) { return p -= q; }
    friend IntPoly operator*(const IntPoly& p, const IntPoly& q);
    friend IntPoly operator-(IntPoly p);

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
    void normalize();

    std::vector<BigInt> coeffs_;
};

[[nodiscard]] inline IntPoly poly_add(const IntPoly& p, const IntPoly& q) { return p + q; }
[[nodiscard]] inline IntPoly poly_sub(const IntPoly& p, const IntPoly& q) { return p - q; }
[[nodiscard]] inline IntPoly poly_mul(const IntPoly& p, const IntPoly& q) { return p * q; }
[[nodiscard]] inline BigInt poly_eval(const IntPoly& p, const BigInt& x) { return p.eval(x); }

}  // namespace markov
