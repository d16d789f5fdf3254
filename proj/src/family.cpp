#include "markov/family.hpp"

#include <stdexcept>
#include <string>

#include "markov/error.hpp"
#include "markov/parallel.hpp"

namespace markov {

namespace {

void require_index(std::uint64_t j, const char* what) {
    if (j == 0) throw DomainError(std::string(what) + ": index must be >= 1");
}

template <class T>
BigInt second_order(const BigInt& first, const BigInt& second, const T& mult, std::uint64_t j) {
    if (j == 1) return first;
    BigInt prev = first;
    BigInt cur = second;
    for (std::uint64_t i = 3; i <= j; ++i) {
        BigInt next = mult * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// Evaluates one check per (n, j) grid point in parallel; the resulting
/// order is n-major, which is (n, j) lexicographic within one claim.
template <class Fn>
VerificationReport sweep(IntRange n, IntRange j, unsigned threads, Fn&& per_point) {
    const std::uint64_t rows = n.count();
    const std::uint64_t cols = j.count();
    std::vector<std::vector<Check>> cells(rows * cols);
    parallel_for(rows * cols, threads, [&](std::size_t idx) {
        std::uint64_t nn = n.first + idx / cols;
        std::uint64_t jj = j.first + idx % cols;
        cells[idx] = per_point(nn, jj);
    });
    VerificationReport report{n, j, {}};
    for (auto& cell : cells) {
        for (auto& c : cell) report.checks.push_back(std::move(c));
    }
    report.sort();
    return report;
}

Check make_check(std::string claim, std::uint64_t n, std::uint64_t j, bool pass,
                 std::vector<Witness> witnesses) {
    return Check{std::move(claim), n, j, pass, std::move(witnesses)};
}

}  // namespace

Seq Family::ratio_expansion() const {
    BigInt nn = BigInt(n) * n;
    return Seq{nn + 1, 1, nn + 2};
}

Family make_family(std::uint64_t n) {
    if (n == 0) throw DomainError("family parameter n must be >= 1");
    Family f;
    f.n = n;
    const BigInt big_n(n);
    const BigInt sq = big_n * big_n;
    f.a = sq + 3;
    f.b = sq * sq + 5 * sq + 5;
    BigInt na = big_n * f.a;
    BigInt nb = big_n * f.b;
    f.s0 = Seq{na, na};
    f.s1 = Seq{nb, nb};
    f.l = na * na + 2;
    f.r = nb * nb + 2;

    if (gcd(f.a, f.b) != 1)
        throw std::logic_error("gcd(a_n, b_n) != 1 for n = " + std::to_string(n));
    if (!(cf_eval(f.ratio_expansion()) == Rational(f.b, f.a)))
        throw std::logic_error("continued fraction of b_n/a_n mismatch for n = " +
                               std::to_string(n));
    return f;
}

BigInt l_seq(const Family& f, std::uint64_t j) {
    require_index(j, "L_n");
    // Seeds straight from the defining sequences.
    BigInt first = integer_sine(concat(f.s0, f.s1));
    BigInt second = integer_sine(concat(repeat(f.s0, 2), f.s1));
    return second_order(first, second, f.l, j);
}

BigInt r_seq(const Family& f, std::uint64_t j) {
    require_index(j, "R_n");
    BigInt first = integer_sine(concat(f.s0, f.s1));
    BigInt second = integer_sine(concat(f.s0, repeat(f.s1, 2)));
    return second_order(first, second, f.r, j);
}

BigInt a_seq(std::uint64_t n, std::uint64_t j) {
    if (n == 0) throw DomainError("A_n: n must be >= 1");
    require_index(j, "A_n");
    const BigInt big_n(n);
    if (j == 1) return 1;
    BigInt prev = 1;
    BigInt cur = big_n * (big_n * big_n + 4);
    for (std::uint64_t i = 3; i <= j; ++i) {
        BigInt next = big_n * cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

BigInt direct_l(const Family& f, std::uint64_t j) {
    require_index(j, "direct L");
    return integer_sine(concat(repeat(f.s0, j), f.s1));
}

BigInt direct_r(const Family& f, std::uint64_t j) {
    require_index(j, "direct R");
    return integer_sine(concat(f.s0, repeat(f.s1, j)));
}

VerificationReport verify_lemma_r(IntRange n, IntRange j, const VerifyOptions& opts,
                                  IndexMap index_map) {
    if (!index_map) index_map = [](std::uint64_t jj) { return 10 * jj; };
    return sweep(n, j, opts.threads, [&](std::uint64_t nn, std::uint64_t jj) {
        Family f = make_family(nn);
        std::uint64_t idx = index_map(jj);
        BigInt lhs = r_seq(f, jj);
        BigInt rhs = a_seq(nn, idx);
        return std::vector{make_check("lemmaR", nn, jj, lhs == rhs,
                                      {{"R_n(j)", to_decimal(lhs)},
                                       {"A_n(" + std::to_string(idx) + ")", to_decimal(rhs)}})};
    });
}

VerificationReport verify_lemma_l(IntRange n, IntRange j, const VerifyOptions& opts,
                                  IndexMap index_map) {
    if (!index_map) index_map = [](std::uint64_t jj) { return 10 + 6 * (jj - 1); };
    return sweep(n, j, opts.threads, [&](std::uint64_t nn, std::uint64_t jj) {
        Family f = make_family(nn);
        std::uint64_t idx = index_map(jj);
        BigInt lhs = l_seq(f, jj);
        BigInt rhs = a_seq(nn, idx);
        return std::vector{make_check("lemmaL", nn, jj, lhs == rhs,
                                      {{"L_n(j)", to_decimal(lhs)},
                                       {"A_n(" + std::to_string(idx) + ")", to_decimal(rhs)}})};
    });
}

VerificationReport verify_equivalence(IntRange n, IntRange j, const VerifyOptions& opts) {
    return sweep(n, j, opts.threads, [](std::uint64_t nn, std::uint64_t jj) {
        Family f = make_family(nn);
        BigInt rec_l = l_seq(f, jj);
        BigInt dir_l = direct_l(f, jj);
        BigInt rec_r = r_seq(f, jj);
        BigInt dir_r = direct_r(f, jj);
        return std::vector{
            make_check("equivL", nn, jj, rec_l == dir_l,
                       {{"L_n(j)", to_decimal(rec_l)}, {"K(S0^j S1)", to_decimal(dir_l)}}),
            make_check("equivR", nn, jj, rec_r == dir_r,
                       {{"R_n(j)", to_decimal(rec_r)}, {"K(S0 S1^j)", to_decimal(dir_r)}}),
        };
    });
}

VerificationReport verify_proposition2(IntRange n, IntRange j, const VerifyOptions& opts) {
    return sweep(n, j, opts.threads, [](std::uint64_t nn, std::uint64_t jj) {
        Family f = make_family(nn);
        BigInt left = direct_l(f, 5 * jj + 1);
        BigInt right = direct_r(f, 3 * jj + 1);
        BigInt via_a = a_seq(nn, 30 * jj + 10);
        bool pass = left == right && right == via_a;
        return std::vector{make_check("prop2", nn, jj, pass,
                                      {{"K(S0^(5j+1) S1)", to_decimal(left)},
                                       {"K(S0 S1^(3j+1))", to_decimal(right)},
                                       {"A_n(30j+10)", to_decimal(via_a)}})};
    });
}

Theorem1Witness theorem1_witness(std::uint64_t n, std::uint64_t j) {
    require_index(j, "theorem 1 witness");
    Family f = make_family(n);
    Theorem1Witness w;
    w.left_path = Path::repeated(Move::L, 5 * j);
    w.right_path = Path::repeated(Move::R, 3 * j);
    SeqTriple lv = vertex_at(f.s0, f.s1, w.left_path);
    SeqTriple rv = vertex_at(f.s0, f.s1, w.right_path);

    SeqTriple expect_l{f.s0, concat(repeat(f.s0, 5 * j + 1), f.s1), concat(repeat(f.s0, 5 * j), f.s1)};
    SeqTriple expect_r{concat(f.s0, repeat(f.s1, 3 * j)), concat(f.s0, repeat(f.s1, 3 * j + 1)), f.s1};
    if (!(lv == expect_l) || !(rv == expect_r))
        throw std::logic_error("witness vertices do not carry the expected sequence triples");

    w.left = chi(lv);
    w.right = chi(rv);
    if (w.left == w.right) throw std::logic_error("witness triples coincide");
    BigInt ll = w.left.largest();
    if (ll != w.right.largest()) throw std::logic_error("witness largest elements differ");
    if (ll != a_seq(n, 30 * j + 10))
        throw std::logic_error("shared largest element differs from A_n(30j+10)");
    w.largest = std::move(ll);
    return w;
}

VerificationReport verify_theorem1(IntRange n, IntRange j, const VerifyOptions& opts) {
    return sweep(n, j, opts.threads, [](std::uint64_t nn, std::uint64_t jj) {
        try {
            Theorem1Witness w = theorem1_witness(nn, jj);
            return std::vector{make_check("theorem1", nn, jj, true,
                                          {{w.left_path.str(), w.left.to_string()},
                                           {w.right_path.str(), w.right.to_string()},
                                           {"largest", to_decimal(w.largest)}})};
        } catch (const std::logic_error& e) {
            return std::vector{make_check("theorem1", nn, jj, false, {{"error", e.what()}})};
        }
    });
}

}  // namespace markov
