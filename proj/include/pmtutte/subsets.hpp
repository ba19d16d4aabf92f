#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pmtutte {

// Subsets of the ground set [n] = {1,...,n} as bitmasks: bit (i-1) <=> element i.
// Masks index rank tables directly, so a mask is always < 2^n.
using SubsetMask = std::uint32_t;

// Rank tables are materialized as full 2^n arrays; this caps their size.
inline constexpr int kMaxGroundSize = 20;

constexpr SubsetMask full_mask(int n) { return (SubsetMask{1} << n) - 1u; }

// Bit for element i, 1-based.
constexpr SubsetMask element_bit(int i) { return SubsetMask{1} << (i - 1); }

constexpr bool mask_contains(SubsetMask s, int i) { return ((s >> (i - 1)) & 1u) != 0; }

constexpr int mask_size(SubsetMask s) { return std::popcount(s); }

// Smallest element of a non-empty subset, 1-based.
constexpr int min_element(SubsetMask s) { return std::countr_zero(s) + 1; }

// Mask of [k] = {1,...,k}; prefix_mask(0) is the empty set.
constexpr SubsetMask prefix_mask(int k) { return (SubsetMask{1} << k) - 1u; }

inline std::vector<int> subset_elements(SubsetMask s) {
    std::vector<int> out;
    while (s != 0) {
        out.push_back(min_element(s));
        s &= s - 1;
    }
    return out;
}

// "{1,3,4}" with 1-based elements; "{}" for the empty set.
inline std::string subset_to_string(SubsetMask s) {
    std::string out = "{";
    bool first = true;
    for (int e : subset_elements(s)) {
        if (!first) out += ',';
        out += std::to_string(e);
        first = false;
    }
    out += '}';
    return out;
}

inline void require_ground_size(int n) {
    if (n < 1 || n > kMaxGroundSize)
        throw std::invalid_argument("ground size must be in [1, " +
                                    std::to_string(kMaxGroundSize) + "], got " + std::to_string(n));
}

}  // namespace pmtutte
