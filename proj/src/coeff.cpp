#include "az/coeff.hpp"

#include <cassert>

#include "az/errors.hpp"

namespace az {

PoleDomain scan_poles(const Rat& a, const Rat& m, int l_min, int n) {
    PoleDomain dom{a, m, l_min, n, std::nullopt};
    for (int k = l_min; k <= n; ++k) {
        if ((a * Rat(k) + m).is_zero()) {
            dom.offending_k = k;
            break;
        }
    }
    return dom;
}

void require_pole_free(const Rat& a, const Rat& m, int l_min, int n) {
    const PoleDomain dom = scan_poles(a, m, l_min, n);
    if (!dom.valid()) throw PoleError(*dom.offending_k);
}

Rat coeff_value(const Rat& a, const Rat& m, int n, int l) {
    assert(0 <= l && l <= n);
    Rat denom(1);
    for (int k = l; k <= n; ++k) {
        const Rat factor = a * Rat(k) + m;
        if (factor.is_zero()) throw PoleError(k);
        denom *= factor;
    }
    return Rat(factorial(static_cast<unsigned>(n - l))) * a.pow(static_cast<unsigned>(n - l)) /
           denom;
}

Poly2 coeff_term_poly(int n, int l, int z_size, int l_min) {
    assert(l_min <= l && l <= n);
    assert(0 <= z_size && z_size <= l);
    Poly2 term = linear_factor(z_size) *
                 Poly2::monomial(factorial(static_cast<unsigned>(n - l)), n - l, 0);
    return term * range_factor_product(l_min, l - 1);
}

Rat coeff_binomial(long m, int n, int l) {
    assert(0 <= l && l <= n);
    for (int k = l; k <= n; ++k)
        if (k + m == 0) throw PoleError(k);
    const mpz_class denom = mpz_class(l + m) * binomial_int(n + m, static_cast<unsigned long>(n - l));
    return Rat(1) / Rat(denom);
}

Rat interval_sum(const Rat& a, const Rat& m, int n, const SubsetMask& A,
                 const SubsetMask& B) {
    if (A.is_empty()) throw BadInterval("interval_sum requires a nonempty lower endpoint");
    if (A.ground_n() != B.ground_n())
        throw MismatchedGroundSet("interval_sum endpoints over different ground sets");
    if (!A.subset_of(B))
        throw BadInterval("interval_sum requires " + A.to_string() + " to be a subset of " +
                          B.to_string());
    const int lo = A.size();
    const int gap = B.size() - lo;
    Rat total;
    for (int j = 0; j <= gap; ++j)
        total += Rat(binomial(static_cast<unsigned long>(gap), static_cast<unsigned long>(j))) *
                 coeff_value(a, m, n, lo + j);
    return total;
}

Poly2 linear_factor(long k) {
    return Poly2::monomial(k, 1, 0) + Poly2::var_m();
}

Poly2 range_factor_product(int lo, int hi) {
    Poly2 prod = Poly2::constant(1);
    for (int k = lo; k <= hi; ++k) prod = prod * linear_factor(k);
    return prod;
}

mpz_class factorial(unsigned n) {
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

mpz_class binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

mpz_class binomial_int(long top, unsigned long k) {
    mpz_class num = 1;
    for (unsigned long i = 0; i < k; ++i) num *= mpz_class(top) - static_cast<long>(i);
    mpz_class out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), factorial(static_cast<unsigned>(k)).get_mpz_t());
    return out;
}

}  // namespace az
