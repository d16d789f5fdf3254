#include "markov/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace markov {

IntPoly::IntPoly(BigInt constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

IntPoly IntPoly::from_coefficients(std::vector<BigInt> coeffs) {
    IntPoly p;
    p.coeffs_ = std::move(coeffs);
    p.normalize();
    return p;
}

IntPoly IntPoly::from_terms(std::initializer_list<Term> terms) {
    IntPoly p;
    for (const auto& t : terms) {
        if (p.coeffs_.size() <= t.power) p.coeffs_.resize(t.power + 1);
        p.coeffs_[t.power] += t.coeff;
    }
    p.normalize();
    return p;
}

IntPoly IntPoly::var() { return from_coefficients({0, 1}); }

BigInt IntPoly::coefficient(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : BigInt(0);
}

BigInt IntPoly::eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string IntPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const BigInt& c = coeffs_[k];
        if (c == 0) continue;
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            out << mag.get_str();
            continue;
        }
        if (mag != 1) out << mag.get_str() << '*';
        out << 'n';
        if (k > 1) out << '^' << k;
    }
    return out.str();
}

IntPoly& IntPoly::operator+=(const IntPoly& q) {
    if (coeffs_.size() < q.coeffs_.size()) coeffs_.resize(q.coeffs_.size());
    for (std::size_t i = 0; i < q.coeffs_.size(); ++i) coeffs_[i] += q.coeffs_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& q) {
    if (coeffs_.size() < q.coeffs_.size()) coeffs_.resize(q.coeffs_.size());
    for (std::size_t i = 0; i < q.coeffs_.size(); ++i) coeffs_[i] -= q.coeffs_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& q) { return *this = *this * q; }

IntPoly operator*(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<BigInt> out(p.coeffs_.size() + q.coeffs_.size() - 1);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
        if (p.coeffs_[i] == 0) continue;
        for (std::size_t k = 0; k < q.coeffs_.size(); ++k) out[i + k] += p.coeffs_[i] * q.coeffs_[k];
    }
    return IntPoly::from_coefficients(std::move(out));
}

IntPoly operator-(IntPoly p) {
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

}  // namespace markov
