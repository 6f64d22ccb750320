#pragma once
// Subsets of [n] = {1, ..., n} as machine-word bitmasks, and canonically
// ordered families of such subsets.
//
// Bit convention: element i (1-indexed, as in all external formats) lives at
// bit i-1. A mask is valid for ground-set size n when bits < 2^n. The ground
// set is capped so that full 2^n tables stay desk-sized.

#include <cstdint>
#include <string>
#include <vector>

namespace az {

inline constexpr int kMaxGroundSet = 24;       // 2^n-entry tables, ~16M at the cap
inline constexpr int kMaxNaiveGroundSet = 16;  // brute-force oracle cap

class SubsetMask {
public:
    SubsetMask(std::uint32_t bits, int n);  // validates 1 <= n <= cap, bits < 2^n

    static SubsetMask empty_set(int n) { return SubsetMask(0, n); }
    static SubsetMask full_set(int n);
    static SubsetMask from_elements(const std::vector<int>& elements, int n);

    std::uint32_t bits() const { return bits_; }
    int ground_n() const { return n_; }
    int size() const;  // |X|
    bool is_empty() const { return bits_ == 0; }

    bool contains(int element) const;  // 1-indexed
    bool subset_of(const SubsetMask& other) const;
    SubsetMask set_union(const SubsetMask& other) const;
    SubsetMask set_intersection(const SubsetMask& other) const;

    std::vector<int> elements() const;  // 1-indexed, ascending
    std::string to_string() const;      // "{1,3}", "{}" for the empty set

    friend bool operator==(const SubsetMask&, const SubsetMask&) = default;
    friend bool operator<(const SubsetMask& a, const SubsetMask& b) {
        return a.bits_ < b.bits_;
    }

private:
    std::uint32_t bits_;
    int n_;
};

// Deduplicated family of subsets over a fixed ground set, members strictly
// ascending by bits value. A family always has at least one member. With
// allows_empty = false (the default) the empty set is rejected at
// construction; the theorems verified here require families of nonempty sets.
class SetFamily {
public:
    SetFamily(int n, std::vector<std::uint32_t> member_bits, bool allows_empty = false);

    static SetFamily from_sets(int n, const std::vector<std::vector<int>>& sets,
                               bool allows_empty = false);

    int ground_n() const { return n_; }
    bool allows_empty() const { return allows_empty_; }
    std::size_t size() const { return members_.size(); }
    const std::vector<std::uint32_t>& raw_members() const { return members_; }
    SubsetMask member(std::size_t i) const { return SubsetMask(members_[i], n_); }

    bool contains_empty() const { return !members_.empty() && members_.front() == 0; }
    bool contains_mask(std::uint32_t bits) const;
    int min_size() const;  // smallest member cardinality
    bool is_antichain() const;

    std::string to_string() const;  // "{{1},{2,3}}"

    friend bool operator==(const SetFamily& a, const SetFamily& b) {
        return a.n_ == b.n_ && a.members_ == b.members_;
    }

private:
    int n_;
    std::vector<std::uint32_t> members_;
    bool allows_empty_;
};

}  // namespace az
