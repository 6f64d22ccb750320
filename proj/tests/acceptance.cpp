// Acceptance suite: every check is an exact property of the identities at
// desk scale, with a wall-clock budget per criterion. One line per criterion;
// exit status is the number of failed criteria.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "az/coeff.hpp"
#include "az/gen.hpp"
#include "az/identity.hpp"
#include "az/lattice.hpp"

namespace {

using Clock = std::chrono::steady_clock;
using az::Rat;
using az::SetFamily;

int failures = 0;

void report(int index, const char* name, bool ok, double seconds, double budget_s,
            const std::string& detail = "") {
    const bool in_budget = seconds <= budget_s;
    const bool pass = ok && in_budget;
    if (!pass) ++failures;
    std::printf("[%s] C%d %s (%.2fs%s)%s%s\n", pass ? "PASS" : "FAIL", index, name, seconds,
                in_budget ? "" : ", over budget", detail.empty() ? "" : " ", detail.c_str());
    std::fflush(stdout);
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

SetFamily random_family_sized(az::SplitMix64& rng, int n, long max_size) {
    const long cap = std::min<long>((1L << n) - 1, max_size);
    return az::random_family({rng.next(), n, static_cast<int>(rng.range(1, cap)), false});
}

// C1: the classical identity sums to exactly 1 for every one of the 127
// nonempty families of nonempty subsets of [3].
void criterion1() {
    const auto start = Clock::now();
    bool ok = true;
    std::uint64_t count = 0;
    az::FamilyEnumerator families(3, false);
    while (auto family = families.next()) {
        ++count;
        if (az::verify_az(*family).lhs != Rat(1)) ok = false;
    }
    ok = ok && count == 127;
    report(1, "classical identity, exhaustive n=3", ok, seconds_since(start), 1.0,
           std::to_string(count) + " families");
}

// C2: the general identity at 5 random pole-free rational points per family,
// 1000 random families with 4 <= n <= 12.
void criterion2() {
    const auto start = Clock::now();
    bool ok = true;
    az::SplitMix64 rng(20240001);
    int runs = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = static_cast<int>(rng.range(4, 12));
        const SetFamily family = random_family_sized(rng, n, 40);
        for (int point = 0; point < 5; ++point) {
            const auto [a, m] = az::random_pole_free_params(rng, family.min_size(), n);
            if (az::verify_main1_numeric(family, a, m).lhs != Rat(1)) ok = false;
            ++runs;
        }
    }
    report(2, "general identity, numeric", ok, seconds_since(start), 60.0,
           std::to_string(runs) + " runs");
}

// C3: zero cleared-denominator residual for 1000 random families, n <= 8.
void criterion3() {
    const auto start = Clock::now();
    bool ok = true;
    az::SplitMix64 rng(20240002);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = static_cast<int>(rng.range(1, 8));
        const SetFamily family = random_family_sized(rng, n, 30);
        if (!az::verify_main1_symbolic(family).holds) ok = false;
    }
    report(3, "general identity, symbolic", ok, seconds_since(start), 60.0);
}

// C4: the paired identity for 1000 generated systems (n <= 10, q <= 6),
// numerically at 3 random pole-free points and symbolically.
void criterion4() {
    const auto start = Clock::now();
    bool ok = true;
    az::SplitMix64 rng(20240003);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = static_cast<int>(rng.range(2, 10));
        // q cannot exceed the widest antichain, C(n, floor(n/2)).
        const long q_cap = std::min<long>(6, n == 2 ? 2 : n == 3 ? 3 : 6);
        const int q = static_cast<int>(rng.range(1, q_cap));
        const az::PairedSystem system = az::random_paired_system({rng.next(), n, q, false});
        for (int point = 0; point < 3; ++point) {
            const auto [a, m] = az::random_pole_free_params(rng, system.min_a_size(), n);
            if (az::verify_main2_numeric(system, a, m).lhs != Rat(1)) ok = false;
        }
        if (!az::verify_main2_symbolic(system).holds) ok = false;
    }
    report(4, "paired identity, numeric and symbolic", ok, seconds_since(start), 120.0);
}

// C5: binomial-form term multisets coincide with the general engine at
// (1, 0) and (1, m), per mask and per index, on 200 random instances.
void criterion5() {
    const auto start = Clock::now();
    bool ok = true;
    az::SplitMix64 rng(20240004);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = static_cast<int>(rng.range(1, 9));
        const SetFamily family = random_family_sized(rng, n, 24);
        if (az::family_term_values_az(family) !=
            az::family_term_values(family, Rat(1), Rat(0)))
            ok = false;
        const long m = rng.range(1 - family.min_size(), 8);
        if (az::family_term_values_az_m(family, m) !=
            az::family_term_values(family, Rat(1), Rat(m)))
            ok = false;
    }
    for (int trial = 0; trial < 100; ++trial) {
        const int n = static_cast<int>(rng.range(2, 9));
        const long q_cap = std::min<long>(5, n == 2 ? 2 : n == 3 ? 3 : 5);
        const int q = static_cast<int>(rng.range(1, q_cap));
        const az::PairedSystem system = az::random_paired_system({rng.next(), n, q, false});
        const auto general = az::paired_term_values(system, Rat(1), Rat(0));
        const auto classical = az::paired_term_values_ac(system);
        if (general.first != classical.first || general.second != classical.second) ok = false;
        const long m = rng.range(1 - system.min_a_size(), 8);
        const auto shifted_general = az::paired_term_values(system, Rat(1), Rat(m));
        const auto shifted = az::paired_term_values_ac_m(system, m);
        if (shifted_general.first != shifted.first || shifted_general.second != shifted.second)
            ok = false;
    }
    report(5, "specialization coherence, 200 instances", ok, seconds_since(start), 60.0);
}

// C6: the coefficient lemmas, zero tolerance.
void criterion6() {
    const auto start = Clock::now();
    bool ok = true;

    // Recurrence c(n,l) + c(n,l+1) = c(n-1,l) for all 0 <= l < n <= 25,
    // 100 random pole-free parameter pairs.
    az::SplitMix64 rng(20240005);
    for (int pair = 0; pair < 100 && ok; ++pair) {
        const auto [a, m] = az::random_pole_free_params(rng, 0, 25);
        for (int n = 1; n <= 25 && ok; ++n)
            for (int l = 0; l < n; ++l)
                if (az::coeff_value(a, m, n, l) + az::coeff_value(a, m, n, l + 1) !=
                    az::coeff_value(a, m, n - 1, l)) {
                    ok = false;
                    break;
                }
    }

    // Binomial closed form vs the product formula, |m| <= 10, n <= 20.
    for (long m = -10; m <= 10 && ok; ++m)
        for (int n = 1; n <= 20 && ok; ++n)
            for (int l = 0; l <= n; ++l) {
                if (!az::scan_poles(Rat(1), Rat(m), l, n).valid()) continue;
                if (az::coeff_binomial(m, n, l) != az::coeff_value(Rat(1), Rat(m), n, l)) {
                    ok = false;
                    break;
                }
            }

    // Z decomposition across unions, exhaustive at n = 3: all 127 x 127
    // family pairs, every nonempty X.
    {
        az::FamilyEnumerator outer(3, false);
        while (auto a = outer.next()) {
            az::FamilyEnumerator inner(3, false);
            while (auto b = inner.next())
                for (std::uint32_t x = 1; x < 8; ++x)
                    if (!az::check_z_decomposition(*a, *b, az::SubsetMask(x, 3))) ok = false;
            if (!ok) break;
        }
    }

    // Interval sums collapse to a single coefficient, 500 random cases.
    for (int trial = 0; trial < 500 && ok; ++trial) {
        const int n = static_cast<int>(rng.range(1, 14));
        const std::uint32_t full = (std::uint32_t{1} << n) - 1;
        std::uint32_t lo = 0;
        while (lo == 0) lo = static_cast<std::uint32_t>(rng.next()) & full;
        const std::uint32_t hi = lo | (static_cast<std::uint32_t>(rng.next()) & full);
        const az::SubsetMask A(lo, n), B(hi, n);
        const auto [a, m] = az::random_pole_free_params(rng, A.size(), n);
        if (az::interval_sum(a, m, n, A, B) !=
            az::coeff_value(a, m, n - B.size() + A.size(), A.size()))
            ok = false;
    }

    report(6, "coefficient lemma suite", ok, seconds_since(start), 60.0);
}

// C7: fast tables equal naive tables — exhaustively for n <= 4, on 1000
// random families up to n = 12, and via bench checksums at n = 12.
void criterion7() {
    const auto start = Clock::now();
    bool ok = true;
    std::uint64_t exhaustive = 0;
    for (int n = 1; n <= 4 && ok; ++n) {
        az::FamilyEnumerator families(n, false);
        while (auto family = families.next()) {
            ++exhaustive;
            const az::LatticeTables fast = az::dp_tables(*family);
            const az::LatticeTables naive = az::naive_tables(*family);
            if (!(fast.upset == naive.upset) || !(fast.downset == naive.downset) ||
                !(fast.z == naive.z)) {
                ok = false;
                break;
            }
        }
    }
    az::SplitMix64 rng(20240006);
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        const int n = static_cast<int>(rng.range(5, 12));
        const SetFamily family = random_family_sized(rng, n, 32);
        const az::LatticeTables fast = az::dp_tables(family);
        const az::LatticeTables naive = az::naive_tables(family);
        if (!(fast.upset == naive.upset) || !(fast.downset == naive.downset) ||
            !(fast.z == naive.z))
            ok = false;
    }
    const SetFamily bench12 = az::bench_family(12);
    if (az::tables_checksum(az::dp_tables(bench12)) !=
        az::tables_checksum(az::naive_tables(bench12)))
        ok = false;
    report(7, "fast/naive table equivalence", ok, seconds_since(start), 60.0,
           std::to_string(exhaustive) + " exhaustive families");
}

// C8: LYM on 500 random antichains, plus exact 1 on every full level.
void criterion8() {
    const auto start = Clock::now();
    bool ok = true;
    az::SplitMix64 rng(20240007);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = static_cast<int>(rng.range(1, 12));
        const long cap = std::min<long>((1L << n) - 1, 4 * n);
        const SetFamily antichain =
            az::random_antichain({rng.next(), n, static_cast<int>(rng.range(1, cap)), false});
        if (!az::check_lym(antichain).holds) ok = false;
    }
    for (int n = 1; n <= 12 && ok; ++n) {
        for (int k = 1; k <= n; ++k) {
            std::vector<std::uint32_t> level;
            for (std::uint32_t x = 0; x < (std::uint32_t{1} << n); ++x)
                if (std::popcount(x) == k) level.push_back(x);
            if (az::check_lym(SetFamily(n, std::move(level))).lhs != Rat(1)) ok = false;
        }
    }
    report(8, "LYM inequality and full levels", ok, seconds_since(start), 60.0);
}

// C9: soft performance target — full tables at n = 20 within 2 s, and the
// measured fast-vs-naive speedup at n = 14.
void criterion9() {
    const auto start = Clock::now();
    const SetFamily f20 = az::bench_family(20);
    double best_dp20 = 1e9;
    std::uint64_t sum20 = 0;
    bool stable = true;
    for (int rep = 0; rep < 3; ++rep) {
        const auto t0 = Clock::now();
        const az::LatticeTables tables = az::dp_tables(f20);
        best_dp20 = std::min(best_dp20, seconds_since(t0));
        const std::uint64_t sum = az::tables_checksum(tables);
        if (rep > 0 && sum != sum20) stable = false;
        sum20 = sum;
    }

    const SetFamily f14 = az::bench_family(14);
    const auto t_dp = Clock::now();
    const std::uint64_t dp_sum = az::tables_checksum(az::dp_tables(f14));
    const double dp14 = seconds_since(t_dp);
    const auto t_naive = Clock::now();
    const std::uint64_t naive_sum = az::tables_checksum(az::naive_tables(f14));
    const double naive14 = seconds_since(t_naive);

    const bool ok = best_dp20 <= 2.0 && dp_sum == naive_sum && stable;
    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "n=20 build %.3fs (checksum %016llx); n=14 speedup %.1fx (naive %.4fs / fast %.4fs)",
                  best_dp20, static_cast<unsigned long long>(sum20), naive14 / dp14, naive14,
                  dp14);
    report(9, "performance target (soft)", ok, seconds_since(start), 120.0, detail);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (failures == 0)
        std::printf("acceptance: all criteria pass\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
