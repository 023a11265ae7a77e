#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace cayley {

// A finite set of indices (group elements or vertices), kept sorted
// ascending with no repeats.
using Subset = std::vector<int>;

inline Subset normalized(Subset s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline bool contains(const Subset& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

inline bool is_subset_of(const Subset& a, const Subset& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Bitmask form for searches; only valid when every index is below 64.
inline std::uint64_t to_mask(const Subset& s) {
  std::uint64_t m = 0;
  for (int v : s) m |= std::uint64_t{1} << v;
  return m;
}

// All subsets of {0..n-1} that contain 0 and have at most max_size
// elements, in lexicographic order.
inline std::vector<Subset> identity_subsets(int n, int max_size) {
  std::vector<Subset> out;
  Subset cur{0};
  auto rec = [&](auto&& self, int next) -> void {
    out.push_back(cur);
    if (static_cast<int>(cur.size()) >= max_size) return;
    for (int v = next; v < n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  if (n >= 1 && max_size >= 1) rec(rec, 1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cayley
