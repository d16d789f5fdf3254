#include "markov/proof_identities.hpp"

#include <string>
#include <vector>

#include "markov/error.hpp"

namespace markov {

namespace family_poly {
IntPoly a() { return IntPoly::from_terms({{1, 2}, {3, 0}}); }
IntPoly b() { return IntPoly::from_terms({{1, 4}, {5, 2}, {5, 0}}); }
IntPoly na() { return IntPoly::var() * a(); }
IntPoly nb() { return IntPoly::var() * b(); }
IntPoly l() { return na() * na() + 2; }
IntPoly r() { return nb() * nb() + 2; }
}  // namespace family_poly

namespace transcribed {
IntPoly x1() { return IntPoly::from_terms({{1, 9}, {8, 7}, {21, 5}, {20, 3}, {5, 1}}); }
IntPoly x2() { return IntPoly::from_terms({{1, 8}, {7, 6}, {15, 4}, {10, 2}, {1, 0}}); }
IntPoly y1() {
    return IntPoly::from_terms({{1, 19}, {18, 17}, {136, 15}, {560, 13}, {1365, 11},
                                {2002, 9}, {1716, 7}, {792, 5}, {165, 3}, {10, 1}});
}
IntPoly y2() {
    return IntPoly::from_terms({{1, 18}, {17, 16}, {120, 14}, {455, 12}, {1001, 10},
                                {1287, 8}, {924, 6}, {330, 4}, {45, 2}, {1, 0}});
}
IntPoly w1() { return IntPoly::from_terms({{1, 5}, {4, 3}, {3, 1}}); }
IntPoly w2() { return IntPoly::from_terms({{1, 4}, {3, 2}, {1, 0}}); }
IntPoly z1() { return IntPoly::from_terms({{1, 11}, {10, 9}, {36, 7}, {56, 5}, {35, 3}, {6, 1}}); }
IntPoly z2() { return IntPoly::from_terms({{1, 10}, {9, 8}, {28, 6}, {35, 4}, {15, 2}, {1, 0}}); }
IntPoly r1() { return IntPoly::from_terms({{1, 11}, {11, 9}, {44, 7}, {76, 5}, {51, 3}, {8, 1}}); }
IntPoly r2() {
    return IntPoly::from_terms({{1, 21}, {21, 19}, {189, 17}, {951, 15}, {2926, 13}, {5655, 11},
                                {6787, 9}, {4818, 7}, {1827, 5}, {301, 3}, {13, 1}});
}
IntPoly a16() {
    return IntPoly::from_terms({{1, 17}, {17, 15}, {119, 13}, {441, 11}, {925, 9},
                                {1086, 7}, {658, 5}, {169, 3}, {11, 1}});
}
}  // namespace transcribed

IntPoly symbolic_a(std::uint64_t j) {
    if (j == 0) throw DomainError("A_n: index must be >= 1");
    const IntPoly n = IntPoly::var();
    IntPoly prev = 1;
    if (j == 1) return prev;
    IntPoly cur = n * (n * n + 4);
    for (std::uint64_t i = 3; i <= j; ++i) {
        IntPoly next = n * cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

IntPoly symbolic_sine(std::span<const IntPoly> pattern) {
    if (pattern.empty()) throw DomainError("integer sine of an empty pattern is undefined");
    IntPoly prev = 0;
    IntPoly cur = 1;
    for (const auto& x : pattern.first(pattern.size() - 1)) {
        IntPoly next = x * cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

StepCoeffs step_coeffs(std::uint64_t k) {
    if (k == 0) throw DomainError("step coefficients need k >= 1");
    const IntPoly n = IntPoly::var();
    IntPoly before = 0;  // p_0
    IntPoly cur = 1;     // p_1
    for (std::uint64_t i = 1; i < k; ++i) {
        IntPoly next = n * cur + before;
        before = std::move(cur);
        cur = std::move(next);
    }
    return {std::move(cur), std::move(before)};
}

namespace {

Check identity(std::string claim, std::string lhs_name, const IntPoly& lhs, std::string rhs_name,
               const IntPoly& rhs) {
    return Check{std::move(claim),
                 std::nullopt,
                 std::nullopt,
                 lhs == rhs,
                 {{std::move(lhs_name), lhs.to_string()}, {std::move(rhs_name), rhs.to_string()}}};
}

Check pair_identity(std::string claim, std::uint64_t k, const IntPoly& want_p,
                    const IntPoly& want_q, const std::string& names) {
    StepCoeffs s = step_coeffs(k);
    std::string tag = "step_coeffs(" + std::to_string(k) + ")";
    return Check{std::move(claim),
                 std::nullopt,
                 std::nullopt,
                 s.p == want_p && s.q == want_q,
                 {{tag + ".p", s.p.to_string()},
                  {tag + ".q", s.q.to_string()},
                  {names + " (transcribed)", want_p.to_string() + " ; " + want_q.to_string()}}};
}

}  // namespace

VerificationReport verify_proof_identities() {
    using namespace transcribed;
    const IntPoly rn = family_poly::r();
    const IntPoly ln = family_poly::l();
    const IntPoly na = family_poly::na();
    const IntPoly nb = family_poly::nb();

    const StepCoeffs s10 = step_coeffs(10);
    const StepCoeffs s20 = step_coeffs(20);
    const StepCoeffs s6 = step_coeffs(6);
    const StepCoeffs s12 = step_coeffs(12);

    auto sine_with_literal = [](std::string claim, std::uint64_t j, const std::vector<IntPoly>& pat,
                                const IntPoly& literal) {
        IntPoly a = symbolic_a(j);
        IntPoly k = symbolic_sine(pat);
        std::string aname = "A_n(" + std::to_string(j) + ")";
        return Check{std::move(claim),
                     std::nullopt,
                     std::nullopt,
                     a == k && k == literal,
                     {{aname, a.to_string()},
                      {"integer sine", k.to_string()},
                      {"transcribed", literal.to_string()}}};
    };

    VerificationReport report;
    report.checks = {
        pair_identity("poly.a", 10, x1(), x2(), "x1 ; x2"),
        pair_identity("poly.b", 20, y1(), y2(), "y1 ; y2"),
        pair_identity("poly.c", 6, w1(), w2(), "w1 ; w2"),
        pair_identity("poly.d", 12, z1(), z2(), "z1 ; z2"),
        identity("poly.e", "y1", s20.p, "r_n*x1", rn * s10.p),
        identity("poly.f", "y2", s20.q, "r_n*x2 - 1", rn * s10.q - 1),
        identity("poly.g", "z1", s12.p, "l_n*w1", ln * s6.p),
        identity("poly.h", "z2", s12.q, "l_n*w2 - 1", ln * s6.q - 1),
        sine_with_literal("poly.i", 10, {na, na, nb, nb}, r1()),
        sine_with_literal("poly.j", 20, {na, na, nb, nb, nb, nb}, r2()),
        sine_with_literal("poly.k", 16, {na, na, na, na, nb, nb}, a16()),
    };
    return report;
}

}  // namespace markov
