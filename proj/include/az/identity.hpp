#pragma once
// Verifiers for the AZ-style identities over 2^[n] and for the LYM
// inequality, plus the supporting decomposition checks.
//
// Identity ids follow the CLI vocabulary:
//   lym    sum over an antichain of 1/C(n,|X|) <= 1
//   az     sum over the upset of |Z(X)| / (|X| C(n,|X|)) = 1
//   az_m   the integer-shifted form with weights (|Z(X)|+m) / ((|X|+m) C(n+m,|X|+m))
//   ac     the paired-system identity with binomial first-sum terms
//   ac_m   its integer-shifted form
//   main1  the two-parameter family identity: sum of (a|Z(X)|+m) c_{a,m}(n,|X|) = 1
//   main2  the two-parameter paired identity
//
// main1/main2 run numerically at exact rational (a, m) or symbolically: the
// identity is multiplied by prod_{k=l_min..n}(a*k+m) and checked as a
// polynomial identity in Z[a, m], which certifies every real parameter pair
// off the poles.
//
// Verifiers are checkers, not assumers: a sum different from 1 is reported as
// a finding (holds = false), never as an internal error.

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "az/coeff.hpp"
#include "az/lattice.hpp"
#include "az/poly.hpp"
#include "az/rational.hpp"
#include "az/subset.hpp"

namespace az {

enum class IdentityId { lym, az, az_m, ac, ac_m, main1, main2 };
enum class VerifyMode { numeric, symbolic };

const char* to_string(IdentityId id);
const char* to_string(VerifyMode mode);
IdentityId parse_identity_id(const std::string& text);  // throws ParseError

// The (A_i, B_i)_{i=1..q} system: A_i nonempty and A_j subset of B_k exactly
// when j = k. Validation is O(q^2) subset tests; the diagonal condition
// forces all A_i (and all B_i) distinct and each B_i nonempty.
class PairedSystem {
public:
    PairedSystem(int n, std::vector<std::uint32_t> a_bits, std::vector<std::uint32_t> b_bits);

    int ground_n() const { return n_; }
    std::size_t q() const { return a_bits_.size(); }
    SubsetMask a_of(std::size_t i) const { return SubsetMask(a_bits_[i], n_); }
    SubsetMask b_of(std::size_t i) const { return SubsetMask(b_bits_[i], n_); }
    const std::vector<std::uint32_t>& raw_a() const { return a_bits_; }
    const std::vector<std::uint32_t>& raw_b() const { return b_bits_; }

    SetFamily a_family() const { return SetFamily(n_, a_bits_); }
    SetFamily b_family() const { return SetFamily(n_, b_bits_); }
    int min_a_size() const;

    std::string to_string() const;

private:
    int n_;
    std::vector<std::uint32_t> a_bits_;
    std::vector<std::uint32_t> b_bits_;
};

struct IdentityReport {
    IdentityId id = IdentityId::az;
    VerifyMode mode = VerifyMode::numeric;
    std::optional<Rat> a;
    std::optional<Rat> m;
    std::optional<Rat> lhs;        // numeric mode
    std::optional<Poly2> residual; // symbolic mode
    bool holds = false;
    std::uint64_t term_count = 0;
    std::chrono::microseconds elapsed{0};
};

// Counts of upset entries by (|X|, |Z(X)|). Every verifier sums over these
// classes instead of over 2^n masks, since term values only depend on the
// pair; term_count is the number of underlying lattice points.
struct WeightProfile {
    int n = 0;
    int l_min = 0;
    std::uint64_t term_count = 0;
    std::vector<std::vector<std::uint64_t>> counts;  // counts[l][z]
};

WeightProfile family_profile(const SetFamily& family);
// Profile of U_n(A) \ D_n(B) with Z taken over A.
WeightProfile paired_profile(const PairedSystem& system);

IdentityReport verify_main1_numeric(const SetFamily& family, const Rat& a, const Rat& m);
IdentityReport verify_main1_symbolic(const SetFamily& family);
IdentityReport verify_main2_numeric(const PairedSystem& system, const Rat& a, const Rat& m);
IdentityReport verify_main2_symbolic(const PairedSystem& system);

IdentityReport verify_az(const SetFamily& family);
IdentityReport verify_az_m(const SetFamily& family, long m);
IdentityReport verify_ac(const PairedSystem& system);
IdentityReport verify_ac_m(const PairedSystem& system, long m);

IdentityReport check_lym(const SetFamily& antichain);

// |Z_{A∪B}(X)| == |Z_A(X)| + |Z_B(X)| - |Z_{A∨B}(X)|, with absent values
// counted as 0. Requires families of nonempty sets over the same ground set
// and a nonempty X.
bool check_z_decomposition(const SetFamily& a, const SetFamily& b, const SubsetMask& x);

enum class UnionSplitWeight { ones, inverse_coeff };

// Three-term split of sum_{X in U(A1∪A2) \ D(B1∪B2)} (a|Z(X)|+m) / F(X) into
// the two sub-system sums minus the join-family sum, under the disjointness
// hypotheses U(A1)∩D(B2) = {} = U(A2)∩D(B1). F is either constant 1 or
// 1 / c_{a,m}(n,|X|).
bool check_union_split(const SetFamily& a1, const SetFamily& a2, const SetFamily& b1,
                       const SetFamily& b2, const Rat& a, const Rat& m,
                       UnionSplitWeight weight);

// Per-lattice-point term values, keyed by mask; used for term-by-term
// comparisons between the general engine at (1, m) and the binomial forms.
std::map<std::uint32_t, Rat> family_term_values(const SetFamily& family, const Rat& a,
                                                const Rat& m);
std::map<std::uint32_t, Rat> family_term_values_az(const SetFamily& family);
std::map<std::uint32_t, Rat> family_term_values_az_m(const SetFamily& family, long m);

struct PairedTerms {
    std::vector<Rat> first;               // one per index i
    std::map<std::uint32_t, Rat> second;  // one per X in U(A) \ D(B)
};

PairedTerms paired_term_values(const PairedSystem& system, const Rat& a, const Rat& m);
PairedTerms paired_term_values_ac(const PairedSystem& system);
PairedTerms paired_term_values_ac_m(const PairedSystem& system, long m);

}  // namespace az
