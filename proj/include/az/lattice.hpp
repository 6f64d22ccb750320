#pragma once
// Full-lattice tables over 2^[n]: upset / downset membership and the Z
// operator Z_F(X) = intersection of all members of F contained in X (absent
// when no member lies below X).
//
// Each table has exactly 2^n entries indexed by mask value. The fast builders
// are O(2^n * n) sum-over-subsets dynamic programs; naive_tables recomputes
// the same contracts by direct per-entry scans over the family and serves as
// the brute-force oracle (capped at n <= 16).

#include <cstdint>
#include <optional>
#include <vector>

#include "az/subset.hpp"

namespace az {

class MembershipTable {
public:
    MembershipTable(int n, std::vector<std::uint8_t> flags)
        : n_(n), flags_(std::move(flags)) {}

    int ground_n() const { return n_; }
    std::size_t entries() const { return flags_.size(); }
    bool contains(std::uint32_t bits) const { return flags_[bits] != 0; }
    std::uint64_t count() const;

    friend bool operator==(const MembershipTable&, const MembershipTable&) = default;

private:
    int n_;
    std::vector<std::uint8_t> flags_;  // length 2^n
};

// Z values per mask. Presence coincides with upset membership: X has a Z
// value exactly when some member of F is contained in X. The definitional
// convention Z(X) = {} for X outside the upset is recoverable via
// size_or_zero().
class ZTable {
public:
    ZTable(int n, std::vector<std::uint32_t> meet, std::vector<std::uint8_t> present)
        : n_(n), meet_(std::move(meet)), present_(std::move(present)) {}

    int ground_n() const { return n_; }
    std::size_t entries() const { return meet_.size(); }
    bool present(std::uint32_t bits) const { return present_[bits] != 0; }
    std::optional<SubsetMask> value(std::uint32_t bits) const;
    int size_or_zero(std::uint32_t bits) const;  // |Z(X)|, 0 when absent
    std::uint32_t raw_meet(std::uint32_t bits) const { return meet_[bits]; }

    friend bool operator==(const ZTable& a, const ZTable& b);

private:
    int n_;
    std::vector<std::uint32_t> meet_;    // AND over members below X; all-ones sentinel start
    std::vector<std::uint8_t> present_;  // == upset membership
};

struct LatticeTables {
    MembershipTable upset;
    MembershipTable downset;
    ZTable z;
};

MembershipTable upset_table(const SetFamily& family);
MembershipTable downset_table(const SetFamily& family);
ZTable z_table(const SetFamily& family);

LatticeTables dp_tables(const SetFamily& family);
LatticeTables naive_tables(const SetFamily& family);  // n <= 16

// {A ∪ B : A in first, B in second}, deduplicated, canonical order.
SetFamily join_family(const SetFamily& a, const SetFamily& b);

// Plain family union (members of either), deduplicated.
SetFamily union_families(const SetFamily& a, const SetFamily& b);

// Order-independent digest of all three tables; equal tables hash equal, so
// fast and naive builds can be compared across processes.
std::uint64_t tables_checksum(const LatticeTables& tables);

}  // namespace az
