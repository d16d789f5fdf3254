#pragma once

#include <cstdint>
#include <span>

#include "markov/polynomial.hpp"
#include "markov/report.hpp"

namespace markov {

/// Polynomial forms (in n) of the counterexample family parameters.
namespace family_poly {
[[nodiscard]] IntPoly a();   // n^2 + 3
[[nodiscard]] IntPoly b();   // n^4 + 5n^2 + 5
[[nodiscard]] IntPoly na();  // n^3 + 3n
[[nodiscard]] IntPoly nb();  // n^5 + 5n^3 + 5n
[[nodiscard]] IntPoly l();   // (n^3 + 3n)^2 + 2
[[nodiscard]] IntPoly r();   // (n^5 + 5n^3 + 5n)^2 + 2
}  // namespace family_poly

/// Closed forms stated alongside the two subsequence lemmas, kept as
/// literal transcriptions so that they are checked rather than trusted.
namespace transcribed {
[[nodiscard]] IntPoly x1();
[[nodiscard]] IntPoly x2();
[[nodiscard]] IntPoly y1();
[[nodiscard]] IntPoly y2();
[[nodiscard]] IntPoly w1();
[[nodiscard]] IntPoly w2();
[[nodiscard]] IntPoly z1();
[[nodiscard]] IntPoly z2();
[[nodiscard]] IntPoly r1();   // R_n(1) = A_n(10)
[[nodiscard]] IntPoly r2();   // R_n(2) = A_n(20)
[[nodiscard]] IntPoly a16();  // A_n(16) = L_n(2)
}  // namespace transcribed

/// A_n(j) in Z[n]. Throws DomainError for j == 0.
[[nodiscard]] IntPoly symbolic_a(std::uint64_t j);

/// Continuant of all but the last entry, computed in Z[n].
/// Throws DomainError for an empty pattern.
[[nodiscard]] IntPoly symbolic_sine(std::span<const IntPoly> pattern);

/// (p_k, q_k) with A_n(m + k) = p_k A_n(m + 1) + q_k A_n(m) for m >= 1.
/// p_0 = 0, p_1 = 1, p_{k+1} = n p_k + p_{k-1}, and q_k = p_{k-1}.
struct StepCoeffs {
    IntPoly p;
    IntPoly q;
};
[[nodiscard]] StepCoeffs step_coeffs(std::uint64_t k);

/// The eleven polynomial identities behind the lemma proofs, claims
/// "poly.a" through "poly.k". n and j are unset on every entry.
[[nodiscard]] VerificationReport verify_proof_identities();

}  // namespace markov
