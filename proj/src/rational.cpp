#include "az/rational.hpp"

#include <cctype>
#include <ostream>

#include "az/errors.hpp"

namespace az {

namespace {

void require_nonzero_den(const mpz_class& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
}

}  // namespace

Rat::Rat(long num, long den) {
    require_nonzero_den(mpz_class(den));
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
    require_nonzero_den(den);
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat Rat::parse(const std::string& text) {
    const auto is_digits = [](const std::string& s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };

    std::string body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.erase(body.begin());
    }

    std::string num_part = body;
    std::string den_part = "1";
    if (auto slash = body.find('/'); slash != std::string::npos) {
        num_part = body.substr(0, slash);
        den_part = body.substr(slash + 1);
    }
    if (!is_digits(num_part) || !is_digits(den_part))
        throw ParseError("not a rational: \"" + text + "\" (expected p or p/q)");

    mpz_class num(num_part), den(den_part);
    if (den == 0) throw DivisionByZero("rational \"" + text + "\" has zero denominator");
    if (negative) num = -num;
    return Rat(num, den);
}

Rat Rat::operator-() const {
    Rat r;
    r.v_ = -v_;
    return r;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw DivisionByZero("division by zero rational");
    v_ /= o.v_;
    return *this;
}

Rat Rat::pow(unsigned exponent) const {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), exponent);
    return Rat(num, den);  // already coprime; constructor just re-normalizes sign
}

std::string Rat::to_string() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.to_string();
}

}  // namespace az
