#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace nochka {

/// Subset of {1..q} (q <= 20) as a bitmask; bit k stands for index k+1.
using Subset = std::uint32_t;

inline constexpr int kMaxGroundSet = 20;

inline int cardinality(Subset s) { return std::popcount(s); }
inline bool contains(Subset s, int index) { return (s >> (index - 1)) & 1U; }
inline Subset singleton(int index) { return Subset{1} << (index - 1); }
inline bool is_subset(Subset a, Subset b) { return (a & ~b) == 0; }
inline Subset full_set(int q) { return q >= 32 ? ~Subset{0} : ((Subset{1} << q) - 1); }

/// Sorted 1-based indices.
std::vector<int> indices_of(Subset s);
Subset subset_of(const std::vector<int>& indices);

/// "{1,2,3}" style rendering used in reports; "{}" for the empty set.
std::string format_subset(Subset s);

/// Lexicographic comparison of the sorted index lists.
bool index_list_less(Subset a, Subset b);

}  // namespace nochka
