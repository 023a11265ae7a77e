#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "cayley/automorphism.hpp"
#include "cayley/error.hpp"
#include "cayley/group.hpp"
#include "cayley/subset.hpp"

namespace cayley {

/// A set of distinct identity-containing subsets of a group, stored sorted.
class CayleyHyperset {
 public:
  CayleyHyperset() = default;

  int group_order() const { return group_order_; }
  const std::vector<Subset>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(const Subset& x) const {
    return std::binary_search(members_.begin(), members_.end(), x);
  }

  friend bool operator==(const CayleyHyperset&, const CayleyHyperset&) = default;

 private:
  friend CayleyHyperset validate_hyperset(const FiniteGroup&,
                                          std::vector<Subset>);
  CayleyHyperset(int n, std::vector<Subset> members)
      : group_order_(n), members_(std::move(members)) {}

  int group_order_ = 0;
  std::vector<Subset> members_;
};

/// Sorts and deduplicates `raw`. Throws on an empty member, an index out of
/// range, or a member without the identity.
inline CayleyHyperset validate_hyperset(const FiniteGroup& g,
                                        std::vector<Subset> raw) {
  for (auto& x : raw) {
    if (x.empty()) throw Error("hyperset member is empty");
    for (int v : x) {
      if (v < 0 || v >= g.order()) {
        throw Error("hyperset member has index " + std::to_string(v) +
                    " outside 0.." + std::to_string(g.order() - 1));
      }
    }
    x = normalized(std::move(x));
    if (x.front() != 0) throw Error("hyperset member is missing the identity 0");
  }
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  return CayleyHyperset(g.order(), std::move(raw));
}

namespace detail {
inline void check_over(const FiniteGroup& g, const CayleyHyperset& x) {
  if (x.group_order() != g.order()) {
    throw Error("hyperset lives over a group of order " +
                std::to_string(x.group_order()) + ", not " +
                std::to_string(g.order()));
  }
}
}  // namespace detail

/// {x * a^-1 : a in x}.
inline std::vector<Subset> inverse_translates(const FiniteGroup& g,
                                              const Subset& x) {
  std::vector<Subset> out;
  for (int a : x) out.push_back(g.right_translate(x, g.inv(a)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// [X] = {x * a^-1 : x in X, a in x}.
inline CayleyHyperset cayley_closure(const FiniteGroup& g,
                                     const CayleyHyperset& x) {
  detail::check_over(g, x);
  std::vector<Subset> all;
  for (const auto& m : x.members()) {
    auto t = inverse_translates(g, m);
    all.insert(all.end(), t.begin(), t.end());
  }
  return validate_hyperset(g, std::move(all));
}

inline bool is_cayley_closed(const FiniteGroup& g, const CayleyHyperset& x) {
  return cayley_closure(g, x) == x;
}

/// The closure of a single identity-containing subset.
inline CayleyHyperset single_cayley_closure(const FiniteGroup& g, Subset x) {
  x = normalized(std::move(x));
  if (x.empty() || x.front() != 0)
    throw Error("subset is missing the identity 0");
  return validate_hyperset(g, inverse_translates(g, x));
}

/// True iff y = x * a^-1 for some a in x.
inline bool are_cayley_equivalent(const FiniteGroup& g, Subset x, Subset y) {
  x = normalized(std::move(x));
  y = normalized(std::move(y));
  if (x.size() != y.size()) return false;
  for (int a : x)
    if (g.right_translate(x, g.inv(a)) == y) return true;
  return false;
}

/// Groups the members of X into Cayley-equivalence classes. Classes are
/// listed by their smallest member; each class is sorted.
inline std::vector<std::vector<Subset>> cayley_equivalence_classes(
    const FiniteGroup& g, const CayleyHyperset& x) {
  detail::check_over(g, x);
  const auto& ms = x.members();
  std::map<Subset, int> index;
  for (int i = 0; i < static_cast<int>(ms.size()); ++i) index.emplace(ms[i], i);

  std::vector<int> parent(ms.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (int i = 0; i < static_cast<int>(ms.size()); ++i) {
    for (const auto& t : inverse_translates(g, ms[i])) {
      auto it = index.find(t);
      if (it == index.end()) continue;
      const int a = find(i), b = find(it->second);
      // Keep the smaller index as root so roots are lexicographic minima.
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<int, std::vector<Subset>> classes;
  for (int i = 0; i < static_cast<int>(ms.size()); ++i)
    classes[find(i)].push_back(ms[i]);
  std::vector<std::vector<Subset>> out;
  for (auto& [root, members] : classes) out.push_back(std::move(members));
  return out;
}

/// One member per Cayley-equivalence class of X, the lexicographically
/// smallest.
inline CayleyHyperset non_cayley_equivalent_representatives(
    const FiniteGroup& g, const CayleyHyperset& x) {
  std::vector<Subset> reps;
  for (const auto& cls : cayley_equivalence_classes(g, x))
    reps.push_back(cls.front());
  return validate_hyperset(g, std::move(reps));
}

/// True iff no two distinct members of Y are Cayley equivalent.
inline bool is_non_cayley_equivalent(const FiniteGroup& g,
                                     const CayleyHyperset& y) {
  return cayley_equivalence_classes(g, y).size() == y.size();
}

/// True iff sigma maps every member of X to a member of X.
inline bool preserves_hyperset(const GroupAutomorphism& sigma,
                               const CayleyHyperset& x) {
  for (const auto& m : x.members())
    if (!x.contains(sigma.apply(m))) return false;
  return true;
}

inline std::vector<GroupAutomorphism> aut_g_x(const FiniteGroup& g,
                                              const CayleyHyperset& x) {
  detail::check_over(g, x);
  std::vector<GroupAutomorphism> out;
  for (auto& s : group_automorphisms(g))
    if (preserves_hyperset(s, x)) out.push_back(std::move(s));
  return out;
}

inline std::vector<GroupAutomorphism> inn_g_x(const FiniteGroup& g,
                                              const CayleyHyperset& x) {
  detail::check_over(g, x);
  std::vector<GroupAutomorphism> out;
  for (auto& s : inner_automorphisms(g))
    if (preserves_hyperset(s, x)) out.push_back(std::move(s));
  return out;
}

}  // namespace cayley
