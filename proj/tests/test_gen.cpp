#include "doctest.h"

#include <set>

#include "az/errors.hpp"
#include "az/gen.hpp"

using az::GenConfig;
using az::SetFamily;

TEST_CASE("splitmix64 reference stream") {
    // First outputs for seed 0, as produced by the pinned constants.
    az::SplitMix64 rng(0);
    const std::uint64_t first = rng.next();
    az::SplitMix64 again(0);
    CHECK(first == again.next());
    CHECK(first == 0xe220a8397b1dcdafULL);
}

TEST_CASE("random families are deterministic and valid") {
    const GenConfig cfg{1, 3, 2, false};
    const SetFamily a = az::random_family(cfg);
    const SetFamily b = az::random_family(cfg);
    CHECK(a == b);
    CHECK(a.size() == 2);
    CHECK(!a.contains_empty());

    // Forced full family.
    const SetFamily full = az::random_family({9, 3, 7, false});
    CHECK(full.size() == 7);

    // With the empty set admitted the universe grows by one.
    const SetFamily with_empty = az::random_family({4, 2, 4, true});
    CHECK(with_empty.size() == 4);
    CHECK(with_empty.contains_empty());

    CHECK_THROWS_AS(az::random_family({1, 3, 8, false}), az::SizeTooLarge);
    CHECK_THROWS_AS(az::random_family({1, 3, 0, false}), az::SizeTooLarge);

    az::SplitMix64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = static_cast<int>(rng.range(1, 12));
        const long cap = std::min<long>((1L << n) - 1, 40);
        const SetFamily f =
            az::random_family({rng.next(), n, static_cast<int>(rng.range(1, cap)), false});
        std::set<std::uint32_t> distinct(f.raw_members().begin(), f.raw_members().end());
        CHECK(distinct.size() == f.size());
        for (std::uint32_t m : f.raw_members()) CHECK(m != 0);
    }
}

TEST_CASE("maximal members") {
    // A dominated member is dropped, the rest survive.
    const SetFamily chain(2, {0b01, 0b11});
    CHECK(az::maximal_members(chain).to_string() == "{{1,2}}");

    // An antichain of maximal members is a fixed point.
    const SetFamily antichain(3, {0b011, 0b101, 0b110});
    CHECK(az::maximal_members(antichain) == antichain);

    const SetFamily mixed(3, {0b001, 0b010, 0b011, 0b100});
    CHECK(az::maximal_members(mixed).to_string() == "{{1,2},{3}}");
}

TEST_CASE("random antichains validate") {
    const GenConfig cfg{7, 5, 8, false};
    CHECK(az::random_antichain(cfg) == az::random_antichain(cfg));

    az::SplitMix64 rng(43);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = static_cast<int>(rng.range(1, 12));
        const long cap = std::min<long>((1L << n) - 1, 40);
        const SetFamily f =
            az::random_antichain({rng.next(), n, static_cast<int>(rng.range(1, cap)), false});
        CHECK(f.is_antichain());
        CHECK(f.size() >= 1);
    }
}

TEST_CASE("random paired systems validate") {
    const GenConfig cfg{11, 5, 3, false};
    const az::PairedSystem a = az::random_paired_system(cfg);
    const az::PairedSystem b = az::random_paired_system(cfg);
    CHECK(a.raw_a() == b.raw_a());
    CHECK(a.raw_b() == b.raw_b());

    az::SplitMix64 rng(47);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = static_cast<int>(rng.range(2, 10));
        // q cannot exceed the widest antichain, C(n, floor(n/2)).
        const long widest = n == 2 ? 2 : n == 3 ? 3 : 6;
        const int q = static_cast<int>(rng.range(1, std::min<long>(6, widest)));
        // Construction validates the cross-containment condition.
        CHECK_NOTHROW(az::random_paired_system({rng.next(), n, q, false}));
    }

    // n = 2, q = 3 uses every nonempty subset; B_3 ⊇ {1,2} always swallows
    // A_1, so no assignment validates.
    CHECK_THROWS_AS(az::random_paired_system({5, 2, 3, false}), az::GenerationExhausted);
}

TEST_CASE("family enumeration") {
    az::FamilyEnumerator n1(1, false);
    CHECK(n1.total() == 1);
    const auto only = n1.next();
    CHECK(only.has_value());
    CHECK(only->to_string() == "{{1}}");
    CHECK(!n1.next().has_value());

    az::FamilyEnumerator n2(2, false);
    CHECK(n2.total() == 7);
    az::FamilyEnumerator n3(3, false);
    CHECK(n3.total() == 127);
    az::FamilyEnumerator with_empty(2, true);
    CHECK(with_empty.total() == 15);

    // Each family exactly once.
    std::set<std::string> seen;
    std::uint64_t count = 0;
    while (auto family = n3.next()) {
        ++count;
        CHECK(seen.insert(family->to_string()).second);
    }
    CHECK(count == 127);

    CHECK_THROWS_AS(az::FamilyEnumerator(5, false), az::GroundSetTooLarge);
}

TEST_CASE("pole-free parameter sampling") {
    az::SplitMix64 rng(53);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = static_cast<int>(rng.range(1, 15));
        const int l_min = static_cast<int>(rng.range(0, n));
        const auto [a, m] = az::random_pole_free_params(rng, l_min, n);
        CHECK(az::scan_poles(a, m, l_min, n).valid());
    }
}

TEST_CASE("bench family depends only on n") {
    CHECK(az::bench_family(12) == az::bench_family(12));
    CHECK(az::bench_family(12).size() == 48);
}
