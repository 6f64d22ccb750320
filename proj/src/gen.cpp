#include "az/gen.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "az/errors.hpp"

namespace az {

namespace {

// Floyd's sampling: exactly `size` distinct values from [1, universe], one
// draw per value, deterministic per rng state.
std::set<std::uint64_t> sample_distinct(SplitMix64& rng, std::uint64_t universe,
                                        std::uint64_t size) {
    std::set<std::uint64_t> chosen;
    for (std::uint64_t j = universe - size + 1; j <= universe; ++j) {
        const std::uint64_t v = 1 + rng.below(j);
        if (!chosen.insert(v).second) chosen.insert(j);
    }
    return chosen;
}

}  // namespace

SetFamily random_family(const GenConfig& cfg) {
    SubsetMask::full_set(cfg.n);  // validates n
    const std::uint64_t universe =
        (std::uint64_t{1} << cfg.n) - (cfg.allow_empty ? 0 : 1);
    if (cfg.size < 1 || static_cast<std::uint64_t>(cfg.size) > universe)
        throw SizeTooLarge("family size " + std::to_string(cfg.size) +
                           " exceeds the universe of " + std::to_string(universe) +
                           " subsets");
    SplitMix64 rng(cfg.seed);
    const auto values = sample_distinct(rng, universe, static_cast<std::uint64_t>(cfg.size));
    std::vector<std::uint32_t> members;
    members.reserve(values.size());
    for (std::uint64_t v : values)
        members.push_back(static_cast<std::uint32_t>(cfg.allow_empty ? v - 1 : v));
    return SetFamily(cfg.n, std::move(members), cfg.allow_empty);
}

SetFamily maximal_members(const SetFamily& family) {
    const auto& members = family.raw_members();
    std::vector<std::uint32_t> maximal;
    for (std::size_t i = 0; i < members.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < members.size(); ++j) {
            if (i != j && (members[i] & members[j]) == members[i]) {
                dominated = true;
                break;
            }
        }
        if (!dominated) maximal.push_back(members[i]);
    }
    return SetFamily(family.ground_n(), std::move(maximal), family.allows_empty());
}

SetFamily random_antichain(const GenConfig& cfg) {
    GenConfig base = cfg;
    base.allow_empty = false;
    const SetFamily out = maximal_members(random_family(base));
    if (!out.is_antichain()) throw Error("maximal-member filter produced a comparable pair");
    return out;
}

PairedSystem random_paired_system(const GenConfig& cfg) {
    const SubsetMask full = SubsetMask::full_set(cfg.n);
    const std::uint64_t universe = (std::uint64_t{1} << cfg.n) - 1;
    if (cfg.size < 1 || static_cast<std::uint64_t>(cfg.size) > universe)
        throw SizeTooLarge("q = " + std::to_string(cfg.size) + " exceeds the universe of " +
                           std::to_string(universe) + " nonempty subsets");
    SplitMix64 rng(cfg.seed);

    // The cross-containment condition forces the A side to be an antichain
    // (A_j inside A_k would sit inside B_k), so alternate free sampling with
    // sampling from a single cardinality level, which is an antichain by
    // construction and keeps tight instances like q = C(n, n/2) reachable.
    std::vector<int> levels;
    for (int s = 1; s <= cfg.n; ++s) {
        const mpz_class room = binomial(static_cast<unsigned long>(cfg.n),
                                        static_cast<unsigned long>(s));
        if (room >= cfg.size) levels.push_back(s);
    }

    for (int attempt = 0; attempt < kPairedSystemRetryBound; ++attempt) {
        std::vector<std::uint32_t> a_bits;
        if (attempt % 2 == 0 || levels.empty()) {
            const auto values =
                sample_distinct(rng, universe, static_cast<std::uint64_t>(cfg.size));
            a_bits.assign(values.begin(), values.end());
        } else {
            const int level = levels[rng.below(levels.size())];
            std::set<std::uint32_t> chosen;
            for (int draws = 0;
                 chosen.size() < static_cast<std::size_t>(cfg.size) && draws < 64 * cfg.size;
                 ++draws) {
                std::uint32_t x = static_cast<std::uint32_t>(rng.next()) & full.bits();
                // truncate or pad to the target cardinality
                while (std::popcount(x) > level) x &= x - 1;
                while (std::popcount(x) < level)
                    x |= std::uint32_t{1} << rng.below(static_cast<std::uint64_t>(cfg.n));
                chosen.insert(x);
            }
            if (chosen.size() < static_cast<std::size_t>(cfg.size)) continue;
            a_bits.assign(chosen.begin(), chosen.end());
        }

        std::vector<std::uint32_t> b_bits;
        b_bits.reserve(a_bits.size());
        for (std::uint32_t a : a_bits) {
            const std::uint32_t extra = static_cast<std::uint32_t>(rng.next()) &
                                        static_cast<std::uint32_t>(rng.next()) & full.bits();
            b_bits.push_back(a | extra);
        }
        bool ok = true;
        for (std::size_t j = 0; ok && j < a_bits.size(); ++j)
            for (std::size_t k = 0; ok && k < b_bits.size(); ++k)
                if (j != k && (a_bits[j] & b_bits[k]) == a_bits[j]) ok = false;
        if (ok) return PairedSystem(cfg.n, std::move(a_bits), std::move(b_bits));
    }
    throw GenerationExhausted("no valid paired system after " +
                              std::to_string(kPairedSystemRetryBound) + " attempts (n = " +
                              std::to_string(cfg.n) + ", q = " + std::to_string(cfg.size) + ")");
}

FamilyEnumerator::FamilyEnumerator(int n, bool include_empty_set)
    : n_(n), include_empty_(include_empty_set) {
    if (n < 1 || n > 4)
        throw GroundSetTooLarge("exhaustive enumeration requires 1 <= n <= 4, got n = " +
                                std::to_string(n));
    const int universe = (1 << n) - (include_empty_set ? 0 : 1);
    total_ = (std::uint64_t{1} << universe) - 1;
}

std::optional<SetFamily> FamilyEnumerator::next() {
    if (code_ >= total_) return std::nullopt;
    ++code_;
    std::vector<std::uint32_t> members;
    const int universe = (1 << n_) - (include_empty_ ? 0 : 1);
    for (int i = 0; i < universe; ++i)
        if ((code_ >> i) & 1u)
            members.push_back(static_cast<std::uint32_t>(include_empty_ ? i : i + 1));
    return SetFamily(n_, std::move(members), include_empty_);
}

Rat random_rational(SplitMix64& rng, long max_abs_num, long max_den) {
    return Rat(rng.range(-max_abs_num, max_abs_num), rng.range(1, max_den));
}

std::pair<Rat, Rat> random_pole_free_params(SplitMix64& rng, int l_min, int n) {
    while (true) {
        const Rat a = random_rational(rng);
        const Rat m = random_rational(rng);
        if (scan_poles(a, m, l_min, n).valid()) return {a, m};
    }
}

SetFamily bench_family(int n) {
    const std::uint64_t universe = (std::uint64_t{1} << n) - 1;
    GenConfig cfg;
    cfg.seed = 0xb31cULL * 1000003ULL + static_cast<std::uint64_t>(n);
    cfg.n = n;
    cfg.size = static_cast<int>(std::min<std::uint64_t>(universe, 4 * n));
    return random_family(cfg);
}

}  // namespace az
