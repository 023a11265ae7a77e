#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cayley/error.hpp"
#include "cayley/group.hpp"
#include "cayley/subset.hpp"

namespace cayley {

/// Largest group order for which Aut(G) is computed.
inline constexpr int kAutGroupCutoff = 40;

/// An automorphism of a FiniteGroup, as the image of each element index.
class GroupAutomorphism {
 public:
  explicit GroupAutomorphism(std::vector<int> map) : map_(std::move(map)) {}

  static GroupAutomorphism identity(int n) {
    std::vector<int> m(n);
    std::iota(m.begin(), m.end(), 0);
    return GroupAutomorphism(std::move(m));
  }

  int operator()(int a) const { return map_[a]; }
  const std::vector<int>& map() const { return map_; }
  int degree() const { return static_cast<int>(map_.size()); }
  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (map_[i] != i) return false;
    return true;
  }

  // Image of a subset, normalized.
  Subset apply(const Subset& x) const {
    Subset out;
    out.reserve(x.size());
    for (int a : x) out.push_back(map_[a]);
    return normalized(std::move(out));
  }

  // Left-to-right: (a then b)(x) = b(a(x)).
  friend GroupAutomorphism operator*(const GroupAutomorphism& a,
                                     const GroupAutomorphism& b) {
    std::vector<int> m(a.map_.size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = b.map_[a.map_[i]];
    return GroupAutomorphism(std::move(m));
  }

  GroupAutomorphism inverse() const {
    std::vector<int> m(map_.size());
    for (std::size_t i = 0; i < m.size(); ++i) m[map_[i]] = static_cast<int>(i);
    return GroupAutomorphism(std::move(m));
  }

  friend auto operator<=>(const GroupAutomorphism&,
                          const GroupAutomorphism&) = default;

 private:
  std::vector<int> map_;
};

/// True iff `m` fixes 0, is a bijection and respects the table at all n^2
/// pairs.
inline bool is_group_automorphism(const FiniteGroup& g,
                                  const std::vector<int>& m) {
  const int n = g.order();
  if (static_cast<int>(m.size()) != n || m[0] != 0) return false;
  std::vector<char> hit(n, 0);
  for (int v : m) {
    if (v < 0 || v >= n || hit[v]) return false;
    hit[v] = 1;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m[g.mul(i, j)] != g.mul(m[i], m[j])) return false;
  return true;
}

namespace detail {

// Irredundant generating set, picking elements of larger order first so
// that the set tends to be small.
inline std::vector<int> small_generating_set(const FiniteGroup& g) {
  std::vector<int> by_order(g.order());
  std::iota(by_order.begin(), by_order.end(), 0);
  std::stable_sort(by_order.begin(), by_order.end(), [&](int a, int b) {
    return g.element_order(a) > g.element_order(b);
  });
  std::vector<int> gens;
  Subset span{0};
  for (int a : by_order) {
    if (static_cast<int>(span.size()) == g.order()) break;
    if (contains(span, a)) continue;
    gens.push_back(a);
    span = subgroup_generated(g, Subset(gens.begin(), gens.end()));
  }
  return gens;
}

// Extends generator images to a map on all of G by walking right
// multiplications from the identity. Returns false on a conflict.
inline bool extend_from_generators(const FiniteGroup& g,
                                   const std::vector<int>& gens,
                                   const std::vector<int>& images,
                                   std::vector<int>& map) {
  const int n = g.order();
  map.assign(n, -1);
  map[0] = 0;
  std::vector<int> queue{0};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const int x = queue[k];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const int y = g.mul(x, gens[i]);
      const int fy = g.mul(map[x], images[i]);
      if (map[y] < 0) {
        map[y] = fy;
        queue.push_back(y);
      } else if (map[y] != fy) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace detail

/// The full automorphism group of `g`, sorted by image map.
///
/// Backtracks over images of a small generating set; each generator may only
/// go to an element of the same order. Refuses groups above
/// kAutGroupCutoff with CutoffExceeded.
inline std::vector<GroupAutomorphism> group_automorphisms(const FiniteGroup& g) {
  const int n = g.order();
  if (n > kAutGroupCutoff) {
    throw CutoffExceeded("Aut(G) refused: group order " + std::to_string(n) +
                         " exceeds cutoff " + std::to_string(kAutGroupCutoff));
  }
  const std::vector<int> gens = detail::small_generating_set(g);
  std::vector<std::vector<int>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const int ord = g.element_order(gens[i]);
    for (int a = 0; a < n; ++a)
      if (g.element_order(a) == ord) candidates[i].push_back(a);
  }

  std::vector<GroupAutomorphism> out;
  std::vector<int> images(gens.size());
  std::vector<int> map;
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == gens.size()) {
      if (detail::extend_from_generators(g, gens, images, map) &&
          is_group_automorphism(g, map)) {
        out.emplace_back(map);
      }
      return;
    }
    for (int c : candidates[depth]) {
      images[depth] = c;
      self(self, depth + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

/// Conjugation x -> h^-1 x h for every h, deduplicated and sorted.
inline std::vector<GroupAutomorphism> inner_automorphisms(const FiniteGroup& g) {
  std::set<GroupAutomorphism> seen;
  for (int h = 0; h < g.order(); ++h) {
    std::vector<int> m(g.order());
    for (int x = 0; x < g.order(); ++x) m[x] = g.mul(g.mul(g.inv(h), x), h);
    seen.emplace(std::move(m));
  }
  return {seen.begin(), seen.end()};
}

}  // namespace cayley
