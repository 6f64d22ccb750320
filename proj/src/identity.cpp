#include "az/identity.hpp"

#include <algorithm>
#include <bit>

#include "az/errors.hpp"

namespace az {

namespace {

using Clock = std::chrono::steady_clock;

std::chrono::microseconds since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
}

void require_no_empty_member(const SetFamily& family) {
    if (family.contains_empty())
        throw EmptySetInFamily("this identity requires a family of nonempty sets");
}

// Shifted-form hypothesis: |F| + m > 0 for every member.
void require_shift_hypothesis(const SetFamily& family, long m) {
    for (std::size_t i = 0; i < family.size(); ++i) {
        const SubsetMask member = family.member(i);
        if (member.size() + m <= 0)
            throw HypothesisViolated("member " + member.to_string() + " has |F| + m = " +
                                     std::to_string(member.size() + m) + " <= 0");
    }
}

Rat rat_of_count(std::uint64_t c) {
    return Rat(mpz_class(static_cast<unsigned long>(c)));
}

// sum over classes of count * (a*z + m) * c_{a,m}(n, l).
Rat profile_sum_general(const WeightProfile& p, const Rat& a, const Rat& m) {
    require_pole_free(a, m, p.l_min, p.n);
    std::vector<Rat> coeff(p.n + 1, Rat(0));
    Rat suffix(1);
    for (int l = p.n; l >= p.l_min; --l) {
        suffix *= a * Rat(l) + m;  // pole-free by the scan above
        coeff[l] = Rat(factorial(static_cast<unsigned>(p.n - l))) *
                   a.pow(static_cast<unsigned>(p.n - l)) / suffix;
    }
    Rat total;
    for (int l = p.l_min; l <= p.n; ++l)
        for (int z = 0; z <= l; ++z)
            if (const std::uint64_t c = p.counts[l][z])
                total += rat_of_count(c) * (a * Rat(z) + m) * coeff[l];
    return total;
}

// sum over classes of count * z / (l * C(n, l)).
Rat profile_sum_az(const WeightProfile& p) {
    Rat total;
    for (int l = std::max(p.l_min, 1); l <= p.n; ++l) {
        const mpz_class denom = mpz_class(l) * binomial(static_cast<unsigned long>(p.n),
                                                        static_cast<unsigned long>(l));
        for (int z = 1; z <= l; ++z)
            if (const std::uint64_t c = p.counts[l][z])
                total += rat_of_count(c) * Rat(mpz_class(z), denom);
    }
    return total;
}

// sum over classes of count * (z + m) / ((l + m) * C(n + m, l + m)).
Rat profile_sum_az_m(const WeightProfile& p, long m) {
    Rat total;
    for (int l = p.l_min; l <= p.n; ++l) {
        const mpz_class denom =
            mpz_class(l + m) * binomial(static_cast<unsigned long>(p.n + m),
                                        static_cast<unsigned long>(l + m));
        for (int z = 0; z <= l; ++z)
            if (const std::uint64_t c = p.counts[l][z])
                total += rat_of_count(c) * Rat(mpz_class(z + m), denom);
    }
    return total;
}

// sum over classes of count * (a*z + m) * (n-l)! * a^(n-l) * prefix(l), the
// cleared-denominator terms over the common product prefix(n+1).
Poly2 profile_term_sum(const WeightProfile& p) {
    std::vector<Poly2> prefix(p.n + 2);
    prefix[p.l_min] = Poly2::constant(1);
    for (int l = p.l_min; l <= p.n; ++l) prefix[l + 1] = prefix[l] * linear_factor(l);

    Poly2 total;
    for (int l = p.l_min; l <= p.n; ++l) {
        const Poly2 base =
            Poly2::monomial(factorial(static_cast<unsigned>(p.n - l)), p.n - l, 0) * prefix[l];
        for (int z = 0; z <= l; ++z)
            if (const std::uint64_t c = p.counts[l][z])
                total += (linear_factor(z) * base) * mpz_class(static_cast<unsigned long>(c));
    }
    return total;
}

}  // namespace

const char* to_string(IdentityId id) {
    switch (id) {
        case IdentityId::lym: return "lym";
        case IdentityId::az: return "az";
        case IdentityId::az_m: return "az_m";
        case IdentityId::ac: return "ac";
        case IdentityId::ac_m: return "ac_m";
        case IdentityId::main1: return "main1";
        case IdentityId::main2: return "main2";
    }
    return "?";
}

const char* to_string(VerifyMode mode) {
    return mode == VerifyMode::numeric ? "numeric" : "symbolic";
}

IdentityId parse_identity_id(const std::string& text) {
    for (IdentityId id : {IdentityId::lym, IdentityId::az, IdentityId::az_m, IdentityId::ac,
                          IdentityId::ac_m, IdentityId::main1, IdentityId::main2})
        if (text == to_string(id)) return id;
    throw ParseError("unknown identity \"" + text +
                     "\" (expected lym, az, az_m, ac, ac_m, main1 or main2)");
}

PairedSystem::PairedSystem(int n, std::vector<std::uint32_t> a_bits,
                           std::vector<std::uint32_t> b_bits)
    : n_(n), a_bits_(std::move(a_bits)), b_bits_(std::move(b_bits)) {
    if (a_bits_.empty()) throw InvalidPairedSystem("a paired system needs q >= 1");
    if (a_bits_.size() != b_bits_.size())
        throw InvalidPairedSystem("A and B lists have different lengths");
    for (std::uint32_t bits : a_bits_) SubsetMask(bits, n_);
    for (std::uint32_t bits : b_bits_) SubsetMask(bits, n_);
    for (std::size_t i = 0; i < a_bits_.size(); ++i)
        if (a_bits_[i] == 0)
            throw InvalidPairedSystem("A_" + std::to_string(i + 1) + " is empty");
    for (std::size_t j = 0; j < a_bits_.size(); ++j) {
        for (std::size_t k = 0; k < b_bits_.size(); ++k) {
            const bool subset = (a_bits_[j] & b_bits_[k]) == a_bits_[j];
            if (j == k && !subset)
                throw InvalidPairedSystem("A_" + std::to_string(j + 1) +
                                          " is not a subset of B_" + std::to_string(k + 1));
            if (j != k && subset)
                throw InvalidPairedSystem("A_" + std::to_string(j + 1) + " is a subset of B_" +
                                          std::to_string(k + 1) + " with j != k");
        }
    }
}

int PairedSystem::min_a_size() const {
    int best = n_ + 1;
    for (std::uint32_t bits : a_bits_) best = std::min(best, std::popcount(bits));
    return best;
}

std::string PairedSystem::to_string() const {
    std::string out = "A={";
    for (std::size_t i = 0; i < a_bits_.size(); ++i) {
        if (i) out += ",";
        out += a_of(i).to_string();
    }
    out += "} B={";
    for (std::size_t i = 0; i < b_bits_.size(); ++i) {
        if (i) out += ",";
        out += b_of(i).to_string();
    }
    return out + "}";
}

WeightProfile family_profile(const SetFamily& family) {
    const int n = family.ground_n();
    const ZTable z = z_table(family);
    WeightProfile p{n, family.min_size(), 0,
                    std::vector<std::vector<std::uint64_t>>(
                        n + 1, std::vector<std::uint64_t>(n + 1, 0))};
    const std::uint32_t size = std::uint32_t{1} << n;
    for (std::uint32_t x = 0; x < size; ++x) {
        if (z.present(x)) {
            ++p.counts[std::popcount(x)][z.size_or_zero(x)];
            ++p.term_count;
        }
    }
    return p;
}

WeightProfile paired_profile(const PairedSystem& system) {
    const int n = system.ground_n();
    const ZTable z = z_table(system.a_family());
    const MembershipTable down = downset_table(system.b_family());
    WeightProfile p{n, system.min_a_size(), 0,
                    std::vector<std::vector<std::uint64_t>>(
                        n + 1, std::vector<std::uint64_t>(n + 1, 0))};
    const std::uint32_t size = std::uint32_t{1} << n;
    for (std::uint32_t x = 0; x < size; ++x) {
        if (z.present(x) && !down.contains(x)) {
            ++p.counts[std::popcount(x)][z.size_or_zero(x)];
            ++p.term_count;
        }
    }
    return p;
}

IdentityReport verify_main1_numeric(const SetFamily& family, const Rat& a, const Rat& m) {
    const auto start = Clock::now();
    require_no_empty_member(family);
    const WeightProfile p = family_profile(family);
    const Rat lhs = profile_sum_general(p, a, m);
    return {IdentityId::main1, VerifyMode::numeric, a,          m, lhs, std::nullopt,
            lhs == Rat(1),     p.term_count,        since(start)};
}

IdentityReport verify_main1_symbolic(const SetFamily& family) {
    const auto start = Clock::now();
    require_no_empty_member(family);
    const WeightProfile p = family_profile(family);
    const Poly2 residual = profile_term_sum(p) - range_factor_product(p.l_min, p.n);
    return {IdentityId::main1, VerifyMode::symbolic, std::nullopt, std::nullopt, std::nullopt,
            residual,          residual.is_zero(),   p.term_count, since(start)};
}

IdentityReport verify_main2_numeric(const PairedSystem& system, const Rat& a, const Rat& m) {
    const auto start = Clock::now();
    const int n = system.ground_n();
    require_pole_free(a, m, system.min_a_size(), n);
    const WeightProfile p = paired_profile(system);
    Rat lhs = profile_sum_general(p, a, m);
    for (std::size_t i = 0; i < system.q(); ++i) {
        const int la = system.a_of(i).size();
        const int reduced_n = n - system.b_of(i).size() + la;
        lhs += (a * Rat(la) + m) * coeff_value(a, m, reduced_n, la);
    }
    return {IdentityId::main2, VerifyMode::numeric,      a, m, lhs, std::nullopt,
            lhs == Rat(1),     p.term_count + system.q(), since(start)};
}

IdentityReport verify_main2_symbolic(const PairedSystem& system) {
    const auto start = Clock::now();
    const int n = system.ground_n();
    const int l_min = system.min_a_size();
    const WeightProfile p = paired_profile(system);
    Poly2 residual = profile_term_sum(p);
    for (std::size_t i = 0; i < system.q(); ++i) {
        const int la = system.a_of(i).size();
        const int reduced_n = n - system.b_of(i).size() + la;
        // c_{a,m}(reduced_n, la) has pole range [la, reduced_n], so against
        // the common denominator the term picks up the two missing slices.
        Poly2 term = linear_factor(la) *
                     Poly2::monomial(factorial(static_cast<unsigned>(reduced_n - la)),
                                     reduced_n - la, 0);
        term = term * range_factor_product(l_min, la - 1);
        term = term * range_factor_product(reduced_n + 1, n);
        residual += term;
    }
    residual -= range_factor_product(l_min, n);
    return {IdentityId::main2, VerifyMode::symbolic,      std::nullopt, std::nullopt,
            std::nullopt,      residual,                  residual.is_zero(),
            p.term_count + system.q(),                    since(start)};
}

IdentityReport verify_az(const SetFamily& family) {
    const auto start = Clock::now();
    require_no_empty_member(family);
    const WeightProfile p = family_profile(family);
    const Rat lhs = profile_sum_az(p);
    return {IdentityId::az, VerifyMode::numeric, std::nullopt, std::nullopt, lhs, std::nullopt,
            lhs == Rat(1),  p.term_count,        since(start)};
}

IdentityReport verify_az_m(const SetFamily& family, long m) {
    const auto start = Clock::now();
    require_no_empty_member(family);
    require_shift_hypothesis(family, m);
    const WeightProfile p = family_profile(family);
    const Rat lhs = profile_sum_az_m(p, m);
    return {IdentityId::az_m, VerifyMode::numeric, std::nullopt, Rat(m), lhs, std::nullopt,
            lhs == Rat(1),    p.term_count,        since(start)};
}

IdentityReport verify_ac(const PairedSystem& system) {
    const auto start = Clock::now();
    const int n = system.ground_n();
    const WeightProfile p = paired_profile(system);
    Rat lhs = profile_sum_az(p);
    for (std::size_t i = 0; i < system.q(); ++i) {
        const int la = system.a_of(i).size();
        const int reduced_n = n - system.b_of(i).size() + la;
        lhs += Rat(1) / Rat(binomial(static_cast<unsigned long>(reduced_n),
                                     static_cast<unsigned long>(la)));
    }
    return {IdentityId::ac, VerifyMode::numeric,      std::nullopt, std::nullopt, lhs,
            std::nullopt,   lhs == Rat(1),            p.term_count + system.q(),
            since(start)};
}

IdentityReport verify_ac_m(const PairedSystem& system, long m) {
    const auto start = Clock::now();
    const int n = system.ground_n();
    require_shift_hypothesis(system.a_family(), m);
    const WeightProfile p = paired_profile(system);
    Rat lhs = profile_sum_az_m(p, m);
    for (std::size_t i = 0; i < system.q(); ++i) {
        const int la = system.a_of(i).size();
        const int reduced_n = n - system.b_of(i).size() + la;
        lhs += Rat(1) / Rat(binomial(static_cast<unsigned long>(reduced_n + m),
                                     static_cast<unsigned long>(la + m)));
    }
    return {IdentityId::ac_m, VerifyMode::numeric,      std::nullopt, Rat(m), lhs,
            std::nullopt,     lhs == Rat(1),            p.term_count + system.q(),
            since(start)};
}

IdentityReport check_lym(const SetFamily& antichain) {
    const auto start = Clock::now();
    if (antichain.contains_empty())
        throw NotAntichain("the empty set is comparable to every member");
    const auto& members = antichain.raw_members();
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if ((members[i] & members[j]) == members[i] ||
                (members[i] & members[j]) == members[j])
                throw NotAntichain("members " + antichain.member(i).to_string() + " and " +
                                   antichain.member(j).to_string() + " are comparable");
        }
    }
    const unsigned long n = static_cast<unsigned long>(antichain.ground_n());
    Rat lhs;
    for (std::uint32_t bits : members)
        lhs += Rat(1) / Rat(binomial(n, static_cast<unsigned long>(std::popcount(bits))));
    return {IdentityId::lym, VerifyMode::numeric, std::nullopt, std::nullopt, lhs, std::nullopt,
            lhs <= Rat(1),   antichain.size(),    since(start)};
}

bool check_z_decomposition(const SetFamily& a, const SetFamily& b, const SubsetMask& x) {
    if (a.ground_n() != b.ground_n() || a.ground_n() != x.ground_n())
        throw MismatchedGroundSet("z decomposition needs one common ground set");
    if (a.contains_empty() || b.contains_empty())
        throw EmptySetInFamily("z decomposition requires families of nonempty sets");
    if (x.is_empty()) throw HypothesisViolated("z decomposition requires a nonempty X");
    const ZTable z_union = z_table(union_families(a, b));
    const ZTable z_a = z_table(a);
    const ZTable z_b = z_table(b);
    const ZTable z_join = z_table(join_family(a, b));
    const std::uint32_t bits = x.bits();
    return z_union.size_or_zero(bits) ==
           z_a.size_or_zero(bits) + z_b.size_or_zero(bits) - z_join.size_or_zero(bits);
}

bool check_union_split(const SetFamily& a1, const SetFamily& a2, const SetFamily& b1,
                       const SetFamily& b2, const Rat& a, const Rat& m,
                       UnionSplitWeight weight) {
    const int n = a1.ground_n();
    if (a2.ground_n() != n || b1.ground_n() != n || b2.ground_n() != n)
        throw MismatchedGroundSet("union split needs one common ground set");
    for (const SetFamily* fam : {&a1, &a2, &b1, &b2})
        if (fam->contains_empty())
            throw EmptySetInFamily("union split requires families of nonempty sets");

    const ZTable z1 = z_table(a1);
    const ZTable z2 = z_table(a2);
    const MembershipTable d1 = downset_table(b1);
    const MembershipTable d2 = downset_table(b2);
    const std::uint32_t size = std::uint32_t{1} << n;
    for (std::uint32_t x = 0; x < size; ++x) {
        if (z1.present(x) && d2.contains(x))
            throw HypothesisViolated("U(A1) meets D(B2) at " + SubsetMask(x, n).to_string());
        if (z2.present(x) && d1.contains(x))
            throw HypothesisViolated("U(A2) meets D(B1) at " + SubsetMask(x, n).to_string());
    }

    const SetFamily a_all = union_families(a1, a2);
    const SetFamily b_all = union_families(b1, b2);
    const ZTable z_all = z_table(a_all);
    const MembershipTable d_all = downset_table(b_all);
    const SetFamily joined = join_family(a1, a2);
    const ZTable z_join = z_table(joined);

    // 1/F(X): constant 1, or c_{a,m}(n,|X|) for the inverse-coefficient
    // weight. F must be nonzero on all of U(A1 ∪ A2).
    std::vector<Rat> inv_weight(n + 1, Rat(1));
    if (weight == UnionSplitWeight::inverse_coeff) {
        for (int l = a_all.min_size(); l <= n; ++l) inv_weight[l] = coeff_value(a, m, n, l);
        for (std::uint32_t x = 0; x < size; ++x)
            if (z_all.present(x) && inv_weight[std::popcount(x)].is_zero())
                throw ZeroWeight("weight 1/c vanishes at " + SubsetMask(x, n).to_string());
    }

    Rat lhs, sum1, sum2, sum_join;
    for (std::uint32_t x = 0; x < size; ++x) {
        const int l = std::popcount(x);
        if (z_all.present(x) && !d_all.contains(x))
            lhs += (a * Rat(z_all.size_or_zero(x)) + m) * inv_weight[l];
        if (z1.present(x) && !d1.contains(x))
            sum1 += (a * Rat(z1.size_or_zero(x)) + m) * inv_weight[l];
        if (z2.present(x) && !d2.contains(x))
            sum2 += (a * Rat(z2.size_or_zero(x)) + m) * inv_weight[l];
        if (z_join.present(x))
            sum_join += (a * Rat(z_join.size_or_zero(x)) + m) * inv_weight[l];
    }
    return lhs == sum1 + sum2 - sum_join;
}

std::map<std::uint32_t, Rat> family_term_values(const SetFamily& family, const Rat& a,
                                                const Rat& m) {
    require_no_empty_member(family);
    const int n = family.ground_n();
    const ZTable z = z_table(family);
    require_pole_free(a, m, family.min_size(), n);
    std::vector<Rat> coeff(n + 1, Rat(0));
    for (int l = family.min_size(); l <= n; ++l) coeff[l] = coeff_value(a, m, n, l);
    std::map<std::uint32_t, Rat> out;
    const std::uint32_t size = std::uint32_t{1} << n;
    for (std::uint32_t x = 0; x < size; ++x)
        if (z.present(x))
            out.emplace(x, (a * Rat(z.size_or_zero(x)) + m) * coeff[std::popcount(x)]);
    return out;
}

std::map<std::uint32_t, Rat> family_term_values_az(const SetFamily& family) {
    require_no_empty_member(family);
    const int n = family.ground_n();
    const ZTable z = z_table(family);
    std::map<std::uint32_t, Rat> out;
    const std::uint32_t size = std::uint32_t{1} << n;
    for (std::uint32_t x = 0; x < size; ++x) {
        if (!z.present(x)) continue;
        const int l = std::popcount(x);
        const mpz_class denom = mpz_class(l) * binomial(static_cast<unsigned long>(n),
                                                        static_cast<unsigned long>(l));
        out.emplace(x, Rat(mpz_class(z.size_or_zero(x)), denom));
    }
    return out;
}

std::map<std::uint32_t, Rat> family_term_values_az_m(const SetFamily& family, long m) {
    require_no_empty_member(family);
    require_shift_hypothesis(family, m);
    const int n = family.ground_n();
    const ZTable z = z_table(family);
    std::map<std::uint32_t, Rat> out;
    const std::uint32_t size = std::uint32_t{1} << n;
    for (std::uint32_t x = 0; x < size; ++x) {
        if (!z.present(x)) continue;
        const int l = std::popcount(x);
        const mpz_class denom =
            mpz_class(l + m) * binomial(static_cast<unsigned long>(n + m),
                                        static_cast<unsigned long>(l + m));
        out.emplace(x, Rat(mpz_class(z.size_or_zero(x) + m), denom));
    }
    return out;
}

namespace {

template <typename FirstTerm, typename SecondTerm>
PairedTerms paired_terms_with(const PairedSystem& system, FirstTerm first_term,
                              SecondTerm second_term) {
    PairedTerms out;
    const int n = system.ground_n();
    for (std::size_t i = 0; i < system.q(); ++i) {
        const int la = system.a_of(i).size();
        out.first.push_back(first_term(n - system.b_of(i).size() + la, la));
    }
    const ZTable z = z_table(system.a_family());
    const MembershipTable down = downset_table(system.b_family());
    const std::uint32_t size = std::uint32_t{1} << n;
    for (std::uint32_t x = 0; x < size; ++x)
        if (z.present(x) && !down.contains(x))
            out.second.emplace(x, second_term(std::popcount(x), z.size_or_zero(x)));
    return out;
}

}  // namespace

PairedTerms paired_term_values(const PairedSystem& system, const Rat& a, const Rat& m) {
    const int n = system.ground_n();
    require_pole_free(a, m, system.min_a_size(), n);
    return paired_terms_with(
        system,
        [&](int reduced_n, int la) {
            return (a * Rat(la) + m) * coeff_value(a, m, reduced_n, la);
        },
        [&](int l, int z) { return (a * Rat(z) + m) * coeff_value(a, m, n, l); });
}

PairedTerms paired_term_values_ac(const PairedSystem& system) {
    const int n = system.ground_n();
    return paired_terms_with(
        system,
        [](int reduced_n, int la) {
            return Rat(1) / Rat(binomial(static_cast<unsigned long>(reduced_n),
                                         static_cast<unsigned long>(la)));
        },
        [&](int l, int z) {
            const mpz_class denom = mpz_class(l) * binomial(static_cast<unsigned long>(n),
                                                            static_cast<unsigned long>(l));
            return Rat(mpz_class(z), denom);
        });
}

PairedTerms paired_term_values_ac_m(const PairedSystem& system, long m) {
    const int n = system.ground_n();
    require_shift_hypothesis(system.a_family(), m);
    return paired_terms_with(
        system,
        [&](int reduced_n, int la) {
            return Rat(1) / Rat(binomial(static_cast<unsigned long>(reduced_n + m),
                                         static_cast<unsigned long>(la + m)));
        },
        [&](int l, int z) {
            const mpz_class denom =
                mpz_class(l + m) * binomial(static_cast<unsigned long>(n + m),
                                            static_cast<unsigned long>(l + m));
            return Rat(mpz_class(z + m), denom);
        });
}

}  // namespace az
