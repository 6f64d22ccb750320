#include "az/poly.hpp"

#include <ostream>
#include <vector>

namespace az {

Poly2 Poly2::constant(const mpz_class& c) {
    return monomial(c, 0, 0);
}

Poly2 Poly2::monomial(const mpz_class& coeff, int a_exp, int m_exp) {
    Poly2 p;
    if (coeff != 0) p.terms_[{a_exp, m_exp}] = coeff;
    return p;
}

mpz_class Poly2::coeff(int a_exp, int m_exp) const {
    auto it = terms_.find({a_exp, m_exp});
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void Poly2::add_term(const Monomial& mono, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly2& Poly2::operator+=(const Poly2& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    return *this;
}

Poly2 Poly2::operator-() const {
    Poly2 r;
    for (const auto& [mono, c] : terms_) r.terms_[mono] = -c;
    return r;
}

Poly2 operator*(const Poly2& p, const Poly2& q) {
    Poly2 r;
    for (const auto& [mp, cp] : p.terms_)
        for (const auto& [mq, cq] : q.terms_)
            r.add_term({mp.a_exp + mq.a_exp, mp.m_exp + mq.m_exp}, cp * cq);
    return r;
}

Poly2 operator*(Poly2 p, const mpz_class& c) {
    if (c == 0) return Poly2();
    for (auto& [mono, coeff] : p.terms_) coeff *= c;
    return p;
}

Rat Poly2::eval(const Rat& a, const Rat& m) const {
    int max_a = 0, max_m = 0;
    for (const auto& [mono, c] : terms_) {
        max_a = std::max(max_a, mono.a_exp);
        max_m = std::max(max_m, mono.m_exp);
    }
    std::vector<Rat> pow_a(max_a + 1, Rat(1)), pow_m(max_m + 1, Rat(1));
    for (int i = 1; i <= max_a; ++i) pow_a[i] = pow_a[i - 1] * a;
    for (int j = 1; j <= max_m; ++j) pow_m[j] = pow_m[j - 1] * m;

    Rat total;
    for (const auto& [mono, c] : terms_)
        total += Rat(c) * pow_a[mono.a_exp] * pow_m[mono.m_exp];
    return total;
}

std::string Poly2::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [mono, c] : terms_) {
        mpz_class abs_c = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        const bool has_vars = mono.a_exp > 0 || mono.m_exp > 0;
        if (abs_c != 1 || !has_vars) out += abs_c.get_str();
        if (abs_c != 1 && has_vars) out += "*";
        if (mono.a_exp > 0) {
            out += "a";
            if (mono.a_exp > 1) out += "^" + std::to_string(mono.a_exp);
        }
        if (mono.m_exp > 0) {
            if (mono.a_exp > 0) out += "*";
            out += "m";
            if (mono.m_exp > 1) out += "^" + std::to_string(mono.m_exp);
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Poly2& p) {
    return os << p.to_string();
}

}  // namespace az
