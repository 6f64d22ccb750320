#include "az/lattice.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "az/errors.hpp"

namespace az {

namespace {

void require_cap(int n, int cap, const char* what) {
    if (n > cap)
        throw GroundSetTooLarge(std::string(what) + " requires n <= " + std::to_string(cap) +
                                ", got n = " + std::to_string(n));
}

}  // namespace

std::uint64_t MembershipTable::count() const {
    std::uint64_t c = 0;
    for (std::uint8_t f : flags_) c += f;
    return c;
}

std::optional<SubsetMask> ZTable::value(std::uint32_t bits) const {
    if (!present_[bits]) return std::nullopt;
    return SubsetMask(meet_[bits], n_);
}

int ZTable::size_or_zero(std::uint32_t bits) const {
    return present_[bits] ? std::popcount(meet_[bits]) : 0;
}

bool operator==(const ZTable& a, const ZTable& b) {
    if (a.n_ != b.n_ || a.present_ != b.present_) return false;
    // Meet values only have meaning where present.
    for (std::uint32_t x = 0; x < a.meet_.size(); ++x)
        if (a.present_[x] && a.meet_[x] != b.meet_[x]) return false;
    return true;
}

MembershipTable upset_table(const SetFamily& family) {
    const int n = family.ground_n();
    require_cap(n, kMaxGroundSet, "upset_table");
    const std::size_t size = std::size_t{1} << n;
    std::vector<std::uint8_t> in(size, 0);
    for (std::uint32_t m : family.raw_members()) in[m] = 1;
    for (int d = 0; d < n; ++d) {
        const std::uint32_t bit = std::uint32_t{1} << d;
        for (std::uint32_t x = 0; x < size; ++x)
            if (x & bit) in[x] |= in[x ^ bit];
    }
    return MembershipTable(n, std::move(in));
}

MembershipTable downset_table(const SetFamily& family) {
    const int n = family.ground_n();
    require_cap(n, kMaxGroundSet, "downset_table");
    const std::size_t size = std::size_t{1} << n;
    std::vector<std::uint8_t> in(size, 0);
    for (std::uint32_t m : family.raw_members()) in[m] = 1;
    for (int d = 0; d < n; ++d) {
        const std::uint32_t bit = std::uint32_t{1} << d;
        for (std::uint32_t x = 0; x < size; ++x)
            if (!(x & bit)) in[x] |= in[x | bit];
    }
    return MembershipTable(n, std::move(in));
}

ZTable z_table(const SetFamily& family) {
    const int n = family.ground_n();
    require_cap(n, kMaxGroundSet, "z_table");
    const std::size_t size = std::size_t{1} << n;
    const std::uint32_t sentinel = static_cast<std::uint32_t>(size - 1);

    // AND-transform with an all-ones sentinel for non-members. The sentinel
    // alone cannot decide presence: the full set is a legitimate Z value when
    // the family is {[n]}, so presence comes from the upset flags instead.
    std::vector<std::uint32_t> meet(size, sentinel);
    std::vector<std::uint8_t> up(size, 0);
    for (std::uint32_t m : family.raw_members()) {
        meet[m] = m;
        up[m] = 1;
    }
    for (int d = 0; d < n; ++d) {
        const std::uint32_t bit = std::uint32_t{1} << d;
        for (std::uint32_t x = 0; x < size; ++x) {
            if (x & bit) {
                meet[x] &= meet[x ^ bit];
                up[x] |= up[x ^ bit];
            }
        }
    }
    return ZTable(n, std::move(meet), std::move(up));
}

LatticeTables dp_tables(const SetFamily& family) {
    return {upset_table(family), downset_table(family), z_table(family)};
}

LatticeTables naive_tables(const SetFamily& family) {
    const int n = family.ground_n();
    require_cap(n, kMaxNaiveGroundSet, "naive_tables");
    const std::size_t size = std::size_t{1} << n;
    const std::uint32_t sentinel = static_cast<std::uint32_t>(size - 1);

    std::vector<std::uint8_t> up(size, 0), down(size, 0), present(size, 0);
    std::vector<std::uint32_t> meet(size, sentinel);
    for (std::uint32_t x = 0; x < size; ++x) {
        for (std::uint32_t m : family.raw_members()) {
            if ((m & x) == m) {  // m subset of x
                up[x] = 1;
                present[x] = 1;
                meet[x] &= m;
            }
            if ((x & m) == x) down[x] = 1;  // x subset of m
        }
    }
    return {MembershipTable(n, std::move(up)), MembershipTable(n, std::move(down)),
            ZTable(n, std::move(meet), std::move(present))};
}

SetFamily join_family(const SetFamily& a, const SetFamily& b) {
    if (a.ground_n() != b.ground_n())
        throw MismatchedGroundSet("join_family over different ground sets");
    std::set<std::uint32_t> out;
    for (std::uint32_t x : a.raw_members())
        for (std::uint32_t y : b.raw_members()) out.insert(x | y);
    return SetFamily(a.ground_n(), {out.begin(), out.end()}, /*allows_empty=*/true);
}

SetFamily union_families(const SetFamily& a, const SetFamily& b) {
    if (a.ground_n() != b.ground_n())
        throw MismatchedGroundSet("union of families over different ground sets");
    std::vector<std::uint32_t> out = a.raw_members();
    out.insert(out.end(), b.raw_members().begin(), b.raw_members().end());
    return SetFamily(a.ground_n(), std::move(out), /*allows_empty=*/true);
}

std::uint64_t tables_checksum(const LatticeTables& tables) {
    constexpr std::uint64_t kOffset = 0xcbf29ce484222325ULL;
    constexpr std::uint64_t kPrime = 0x100000001b3ULL;
    std::uint64_t h = kOffset;
    const auto mix = [&h](std::uint64_t v) {
        for (int shift = 0; shift < 64; shift += 8) {
            h ^= (v >> shift) & 0xffu;
            h *= kPrime;
        }
    };
    const int n = tables.upset.ground_n();
    mix(static_cast<std::uint64_t>(n));
    const std::size_t size = std::size_t{1} << n;
    for (std::uint32_t x = 0; x < size; ++x) {
        const bool present = tables.z.present(x);
        std::uint64_t word = (tables.upset.contains(x) ? 1u : 0u) |
                             (tables.downset.contains(x) ? 2u : 0u) |
                             (present ? 4u : 0u);
        word |= static_cast<std::uint64_t>(present ? tables.z.raw_meet(x) : 0u) << 8;
        mix(word);
    }
    return h;
}

}  // namespace az
