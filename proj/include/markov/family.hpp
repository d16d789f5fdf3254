#pragma once

#include <cstdint>
#include <functional>

#include "markov/bigint.hpp"
#include "markov/report.hpp"
#include "markov/sequence.hpp"
#include "markov/triple_tree.hpp"

namespace markov {

/// Parameters of the counterexample tree T_n built from the seeds
/// S_n(0) = (n a_n, n a_n) and S_n(1) = (n b_n, n b_n).
struct Family {
    std::uint64_t n = 0;
    BigInt a;  // n^2 + 3
    BigInt b;  // n^4 + 5n^2 + 5
    Seq s0;
    Seq s1;
    BigInt l;  // (n a)^2 + 2, multiplier of the L recurrence
    BigInt r;  // (n b)^2 + 2, multiplier of the R recurrence

    /// (1 + n^2, 1, 2 + n^2), whose continued fraction equals b/a.
    [[nodiscard]] Seq ratio_expansion() const;
};

/// Builds the family for n >= 1 and checks gcd(a, b) = 1 and the
/// continued-fraction identity for b/a. Throws DomainError for n == 0.
[[nodiscard]] Family make_family(std::uint64_t n);

/// L_n(j): integer sines of S0^j S1 for j = 1, 2, then
/// L(j) = l L(j-1) - L(j-2). Throws DomainError for j == 0.
[[nodiscard]] BigInt l_seq(const Family& f, std::uint64_t j);

/// R_n(j): integer sines of S0 S1^j for j = 1, 2, then
/// R(j) = r R(j-1) - R(j-2). Throws DomainError for j == 0.
[[nodiscard]] BigInt r_seq(const Family& f, std::uint64_t j);

/// A_n(1) = 1, A_n(2) = n(n^2 + 4), A_n(j) = n A_n(j-1) + A_n(j-2).
[[nodiscard]] BigInt a_seq(std::uint64_t n, std::uint64_t j);

/// Integer sine of S0^j S1, straight from the sequence.
[[nodiscard]] BigInt direct_l(const Family& f, std::uint64_t j);
/// Integer sine of S0 S1^j, straight from the sequence.
[[nodiscard]] BigInt direct_r(const Family& f, std::uint64_t j);

/// Maps j to the index of A_n that the claim under test pairs it with.
using IndexMap = std::function<std::uint64_t(std::uint64_t)>;

struct VerifyOptions {
    unsigned threads = 0;  // 0 = hardware concurrency
};

/// R_n(j) == A_n(10 j), claim "lemmaR". `index_map` replaces 10 j.
[[nodiscard]] VerificationReport verify_lemma_r(IntRange n, IntRange j,
                                                const VerifyOptions& opts = {},
                                                IndexMap index_map = {});

/// L_n(j) == A_n(10 + 6 (j - 1)), claim "lemmaL".
[[nodiscard]] VerificationReport verify_lemma_l(IntRange n, IntRange j,
                                                const VerifyOptions& opts = {},
                                                IndexMap index_map = {});

/// Recurrence values against direct integer sines: claims "equivL"
/// (L_n(j) == direct_l) and "equivR" (R_n(j) == direct_r).
[[nodiscard]] VerificationReport verify_equivalence(IntRange n, IntRange j,
                                                    const VerifyOptions& opts = {});

/// direct_l(5j+1) == direct_r(3j+1) == A_n(30j+10), claim "prop2".
[[nodiscard]] VerificationReport verify_proposition2(IntRange n, IntRange j,
                                                     const VerifyOptions& opts = {});

/// Two distinct vertices of T_n that share their largest element.
struct Theorem1Witness {
    Path left_path;    // L^{5j}
    Path right_path;   // R^{3j}
    IntTriple left;    // (K(S0), K(S0^{5j+1} S1), K(S0^{5j} S1))
    IntTriple right;   // (K(S0 S1^{3j}), K(S0 S1^{3j+1}), K(S1))
    BigInt largest;
};

/// Walks both paths in G(S0, S1) and confirms the vertices carry the
/// expected sequence triples, differ, and share their largest entry,
/// which must also equal A_n(30j+10). Throws std::logic_error if any
/// of that fails and DomainError for n == 0 or j == 0.
[[nodiscard]] Theorem1Witness theorem1_witness(std::uint64_t n, std::uint64_t j);

/// theorem1_witness over a grid, claim "theorem1"; a throw becomes a
/// failed entry.
[[nodiscard]] VerificationReport verify_theorem1(IntRange n, IntRange j,
                                                 const VerifyOptions& opts = {});

}  // namespace markov
