#pragma once
// Exact rational numbers, backed by GMP. Values are always reduced with a
// positive denominator; zero is 0/1.
//
// Textual form is "p/q" or the integer shorthand "p", with an optional
// leading '-'. No decimals: everything in this library is exact.

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace az {

class Rat {
public:
    Rat() : v_(0) {}
    Rat(long value) : v_(value) {}  // implicit: Rat r = 3 reads like a literal
    Rat(long num, long den);
    explicit Rat(const mpz_class& value) : v_(value) {}
    Rat(const mpz_class& num, const mpz_class& den);

    static Rat parse(const std::string& text);

    const mpz_class num() const { return v_.get_num(); }
    const mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    int sgn() const { return ::sgn(v_); }

    Rat operator-() const;
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    // (num/den)^e, exact; 0^0 = 1.
    Rat pow(unsigned exponent) const;

    std::string to_string() const;

private:
    mpq_class v_;  // canonical: reduced, den > 0
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace az
