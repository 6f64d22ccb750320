#pragma once
// Sparse bivariate polynomials in the symbols a and m with exact integer
// coefficients. Terms are kept in graded-lexicographic order (total degree
// first, then degree in a); zero coefficients are never stored.
//
// Degrees in this library stay below ~n+2 per variable, so the simple
// map-based representation is plenty.

#include <gmpxx.h>

#include <iosfwd>
#include <map>
#include <string>

#include "az/rational.hpp"

namespace az {

struct Monomial {
    int a_exp = 0;
    int m_exp = 0;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct GradedLex {
    // Highest total degree first, ties by degree in a.
    bool operator()(const Monomial& x, const Monomial& y) const {
        const int dx = x.a_exp + x.m_exp, dy = y.a_exp + y.m_exp;
        if (dx != dy) return dx > dy;
        return x.a_exp > y.a_exp;
    }
};

class Poly2 {
public:
    using TermMap = std::map<Monomial, mpz_class, GradedLex>;

    Poly2() = default;

    static Poly2 constant(const mpz_class& c);
    static Poly2 monomial(const mpz_class& coeff, int a_exp, int m_exp);
    static Poly2 var_a() { return monomial(1, 1, 0); }
    static Poly2 var_m() { return monomial(1, 0, 1); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    mpz_class coeff(int a_exp, int m_exp) const;

    Poly2& operator+=(const Poly2& o);
    Poly2& operator-=(const Poly2& o);
    Poly2 operator-() const;

    friend Poly2 operator+(Poly2 p, const Poly2& q) { return p += q; }
    friend Poly2 operator-(Poly2 p, const Poly2& q) { return p -= q; }
    friend Poly2 operator*(const Poly2& p, const Poly2& q);
    friend Poly2 operator*(Poly2 p, const mpz_class& c);

    friend bool operator==(const Poly2& p, const Poly2& q) { return p.terms_ == q.terms_; }

    // Exact evaluation at a rational point; a ring homomorphism.
    Rat eval(const Rat& a, const Rat& m) const;

    std::string to_string() const;

private:
    void add_term(const Monomial& mono, const mpz_class& c);

    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly2& p);

}  // namespace az
