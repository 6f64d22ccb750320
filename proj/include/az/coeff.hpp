#pragma once
// The weight coefficient behind the generalized AZ identities:
//
//     c_{a,m}(n, l) = (n-l)! * a^(n-l) / prod_{k=l..n} (a*k + m)
//
// defined whenever no factor a*k + m vanishes for l <= k <= n. At a = 1 it
// collapses to the binomial form 1 / ((l+m) * C(n+m, l+m)), which is how the
// classical AZ and LYM statements are usually written.
//
// coeff_term_poly gives the cleared-denominator form used by the symbolic
// verifiers: the numeric term times the common denominator
// prod_{k=l_min..n} (a*k + m) is a polynomial in Z[a, m].

#include <gmpxx.h>

#include <optional>

#include "az/poly.hpp"
#include "az/rational.hpp"
#include "az/subset.hpp"

namespace az {

// Validity record for the hypothesis "a*k + m != 0 for l_min <= k <= n";
// offending_k holds the first violation when there is one.
struct PoleDomain {
    Rat a;
    Rat m;
    int l_min = 0;
    int n = 0;
    std::optional<int> offending_k;

    bool valid() const { return !offending_k.has_value(); }
};

PoleDomain scan_poles(const Rat& a, const Rat& m, int l_min, int n);

// Throws PoleError at the first offending k.
void require_pole_free(const Rat& a, const Rat& m, int l_min, int n);

// Exact value of c_{a,m}(n, l); 0 <= l <= n required. Throws PoleError when
// some factor in [l, n] vanishes.
Rat coeff_value(const Rat& a, const Rat& m, int n, int l);

// Cleared-denominator term polynomial:
//   (a*z_size + m) * (n-l)! * a^(n-l) * prod_{k=l_min..l-1} (a*k + m)
// i.e. (a*z_size + m) * c_{a,m}(n, l) times prod_{k=l_min..n} (a*k + m).
// Requires l_min <= l <= n and 0 <= z_size <= l.
Poly2 coeff_term_poly(int n, int l, int z_size, int l_min);

// Closed binomial form of c_{1,m}(n, l) for integer m. For l+m >= 1 this is
// the textbook 1 / ((l+m) * C(n+m, l+m)); the implementation uses the
// equivalent 1 / ((l+m) * C(n+m, n-l)), whose generalized binomial (integer
// top, ordinary bottom) also covers negative l+m. Throws PoleError when some
// k+m vanishes for l <= k <= n.
Rat coeff_binomial(long m, int n, int l);

// Sum of c_{a,m}(n, |X|) over the interval A <= X <= B, computed by binomial
// expansion over |X|. Requires nonempty A with A subset of B; equals
// c_{a,m}(n - |B| + |A|, |A|) (checked by tests, not assumed here).
Rat interval_sum(const Rat& a, const Rat& m, int n, const SubsetMask& A,
                 const SubsetMask& B);

// a*k + m as a polynomial.
Poly2 linear_factor(long k);

// prod_{k=lo..hi} (a*k + m); the empty product (lo > hi) is 1.
Poly2 range_factor_product(int lo, int hi);

mpz_class factorial(unsigned n);
mpz_class binomial(unsigned long n, unsigned long k);  // 0 when k > n

// Generalized binomial C(top, k) for integer top (possibly negative) and
// ordinary k >= 0: prod_{i=0..k-1} (top - i) / k!.
mpz_class binomial_int(long top, unsigned long k);

}  // namespace az
