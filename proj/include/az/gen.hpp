#pragma once
// Seeded, reproducible generators for test corpora: random families,
// antichains, paired systems, exhaustive small-n enumeration, and parameter
// sampling.
//
// The PRNG is splitmix64, pinned here by its constants rather than taken from
// the host library, so equal seeds give identical corpora on every platform.

#include <cstdint>
#include <optional>
#include <utility>

#include "az/identity.hpp"
#include "az/rational.hpp"
#include "az/subset.hpp"

namespace az {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish value in [0, bound); bound >= 1. Modulo reduction is part
    // of the pinned contract.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

struct GenConfig {
    std::uint64_t seed = 0;
    int n = 3;
    int size = 1;  // family size, or q for paired systems
    bool allow_empty = false;
};

// `size` distinct subsets sampled without replacement (Floyd's method, a
// fixed number of draws per member). Nonempty subsets unless allow_empty.
SetFamily random_family(const GenConfig& cfg);

// Members of `family` not strictly contained in another member; an antichain
// already consisting of its maximal members comes back unchanged.
SetFamily maximal_members(const SetFamily& family);

// Maximal members of a random family; output validated pairwise incomparable.
SetFamily random_antichain(const GenConfig& cfg);

// Construct-then-reject sampling of a valid paired system with q = cfg.size;
// throws GenerationExhausted after the retry bound.
PairedSystem random_paired_system(const GenConfig& cfg);
inline constexpr int kPairedSystemRetryBound = 1000;

// Every nonempty family over the subsets of [n] (without the empty set unless
// asked), in canonical order; n <= 4. At n = 3 without the empty set this
// yields 2^7 - 1 = 127 families.
class FamilyEnumerator {
public:
    FamilyEnumerator(int n, bool include_empty_set);

    std::uint64_t total() const { return total_; }
    std::optional<SetFamily> next();

private:
    int n_;
    bool include_empty_;
    std::uint64_t code_ = 0;  // last emitted family code
    std::uint64_t total_;
};

// Rational with numerator in [-max_abs_num, max_abs_num] and denominator in
// [1, max_den]; may be zero.
Rat random_rational(SplitMix64& rng, long max_abs_num = 12, long max_den = 8);

// (a, m) with a*k + m != 0 for all l_min <= k <= n, by rejection.
std::pair<Rat, Rat> random_pole_free_params(SplitMix64& rng, int l_min, int n);

// Fixed family used by the bench command; depends only on n so fast and
// naive runs see identical inputs.
SetFamily bench_family(int n);

}  // namespace az
