#include "az/subset.hpp"

#include <algorithm>
#include <bit>

#include "az/errors.hpp"

namespace az {

SubsetMask::SubsetMask(std::uint32_t bits, int n) : bits_(bits), n_(n) {
    if (n < 1 || n > kMaxGroundSet)
        throw GroundSetTooLarge("ground-set size " + std::to_string(n) +
                                " outside [1, " + std::to_string(kMaxGroundSet) + "]");
    if (n < 32 && bits >= (std::uint32_t{1} << n))
        throw InvalidMask("mask " + std::to_string(bits) + " has elements beyond " +
                          std::to_string(n));
}

SubsetMask SubsetMask::full_set(int n) {
    if (n < 1 || n > kMaxGroundSet)
        throw GroundSetTooLarge("ground-set size " + std::to_string(n) +
                                " outside [1, " + std::to_string(kMaxGroundSet) + "]");
    return SubsetMask((std::uint32_t{1} << n) - 1, n);
}

SubsetMask SubsetMask::from_elements(const std::vector<int>& elements, int n) {
    std::uint32_t bits = 0;
    for (int e : elements) {
        if (e < 1 || e > n)
            throw InvalidMask("element " + std::to_string(e) + " outside [1, " +
                              std::to_string(n) + "]");
        const std::uint32_t bit = std::uint32_t{1} << (e - 1);
        if (bits & bit)
            throw InvalidMask("duplicate element " + std::to_string(e));
        bits |= bit;
    }
    return SubsetMask(bits, n);
}

int SubsetMask::size() const {
    return std::popcount(bits_);
}

bool SubsetMask::contains(int element) const {
    return element >= 1 && element <= n_ && (bits_ >> (element - 1)) & 1u;
}

bool SubsetMask::subset_of(const SubsetMask& other) const {
    return (bits_ & other.bits_) == bits_;
}

SubsetMask SubsetMask::set_union(const SubsetMask& other) const {
    return SubsetMask(bits_ | other.bits_, n_);
}

SubsetMask SubsetMask::set_intersection(const SubsetMask& other) const {
    return SubsetMask(bits_ & other.bits_, n_);
}

std::vector<int> SubsetMask::elements() const {
    std::vector<int> out;
    for (int i = 1; i <= n_; ++i)
        if ((bits_ >> (i - 1)) & 1u) out.push_back(i);
    return out;
}

std::string SubsetMask::to_string() const {
    std::string out = "{";
    bool first = true;
    for (int e : elements()) {
        if (!first) out += ",";
        out += std::to_string(e);
        first = false;
    }
    return out + "}";
}

SetFamily::SetFamily(int n, std::vector<std::uint32_t> member_bits, bool allows_empty)
    : n_(n), members_(std::move(member_bits)), allows_empty_(allows_empty) {
    if (members_.empty()) throw EmptyFamily("a set family must have at least one member");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (std::uint32_t bits : members_) SubsetMask(bits, n_);  // range validation
    if (!allows_empty_ && members_.front() == 0)
        throw EmptySetInFamily("the empty set is not allowed in this family");
}

SetFamily SetFamily::from_sets(int n, const std::vector<std::vector<int>>& sets,
                               bool allows_empty) {
    std::vector<std::uint32_t> bits;
    bits.reserve(sets.size());
    for (const auto& s : sets) bits.push_back(SubsetMask::from_elements(s, n).bits());
    return SetFamily(n, std::move(bits), allows_empty);
}

bool SetFamily::contains_mask(std::uint32_t bits) const {
    return std::binary_search(members_.begin(), members_.end(), bits);
}

int SetFamily::min_size() const {
    int best = n_ + 1;
    for (std::uint32_t bits : members_) best = std::min(best, std::popcount(bits));
    return best;
}

bool SetFamily::is_antichain() const {
    for (std::size_t i = 0; i < members_.size(); ++i)
        for (std::size_t j = 0; j < members_.size(); ++j)
            if (i != j && (members_[i] & members_[j]) == members_[i]) return false;
    return true;
}

std::string SetFamily::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i) out += ",";
        out += member(i).to_string();
    }
    return out + "}";
}

}  // namespace az
