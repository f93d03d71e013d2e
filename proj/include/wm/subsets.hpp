#pragma once

// Subsets of the index set I = {1..n} as bit masks (0-based internally,
// 1-based in all printed forms).

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace wm {

using Subset = std::uint32_t;

constexpr Subset subset_bit(int i) { return Subset{1} << i; }
constexpr bool subset_contains(Subset s, int i) { return (s >> i) & 1u; }
constexpr bool subset_of(Subset a, Subset b) { return (a & ~b) == 0; }
constexpr Subset full_subset(int n) {
  return n >= 32 ? ~Subset{0} : (Subset{1} << n) - 1;
}
inline int subset_size(Subset s) { return std::popcount(s); }

inline std::vector<int> subset_members(Subset s) {
  std::vector<int> out;
  for (int i = 0; s != 0; ++i, s >>= 1)
    if (s & 1u) out.push_back(i);
  return out;
}

inline Subset subset_from_members(const std::vector<int>& members) {
  Subset s = 0;
  for (int i : members) s |= subset_bit(i);
  return s;
}

// Printed as "{1,3}" with 1-based indices, "{}" when empty.
inline std::string subset_str(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int i : subset_members(s)) {
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace wm
