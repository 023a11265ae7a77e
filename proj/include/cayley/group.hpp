#pragma once

#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cayley/error.hpp"
#include "cayley/subset.hpp"

namespace cayley {

/// A finite group stored as its Cayley table over element indices 0..n-1.
///
/// mul(i, j) is the index of g_i * g_j. The identity is always index 0.
/// Every instance has passed the identity, inverse and associativity checks,
/// and is immutable afterwards.
class FiniteGroup {
 public:
  /// Validates `table` (n rows of n indices) and builds the group.
  /// Throws Error naming the violated axiom and the offending indices.
  static FiniteGroup from_table(std::string name,
                                const std::vector<std::vector<int>>& table) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw Error("group table is empty");
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(table[i].size()) != n) {
        throw Error("table row " + std::to_string(i) + " has " +
                    std::to_string(table[i].size()) + " entries, expected " +
                    std::to_string(n));
      }
      for (int j = 0; j < n; ++j) {
        if (table[i][j] < 0 || table[i][j] >= n) {
          throw Error("table entry (" + std::to_string(i) + ", " +
                      std::to_string(j) + ") = " + std::to_string(table[i][j]) +
                      " is out of range");
        }
      }
    }

    FiniteGroup g;
    g.name_ = std::move(name);
    g.n_ = n;
    g.table_.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g.table_[g.at(i, j)] = table[i][j];

    g.check_identity();
    g.compute_inverses();
    g.check_associativity();
    return g;
  }

  int order() const { return n_; }
  const std::string& name() const { return name_; }
  int mul(int a, int b) const { return table_[at(a, b)]; }
  int inv(int a) const { return inverse_[a]; }
  static constexpr int identity() { return 0; }

  std::vector<std::vector<int>> table() const {
    std::vector<std::vector<int>> t(n_, std::vector<int>(n_));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) t[i][j] = mul(i, j);
    return t;
  }

  bool is_abelian() const {
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (mul(i, j) != mul(j, i)) return false;
    return true;
  }

  int element_order(int a) const {
    int k = 1;
    for (int x = a; x != 0; x = mul(x, a)) ++k;
    return k;
  }

  // Right translate of a subset: {s * h : s in x}.
  Subset right_translate(const Subset& x, int h) const {
    Subset out;
    out.reserve(x.size());
    for (int s : x) out.push_back(mul(s, h));
    return normalized(std::move(out));
  }

  // Names do not take part in equality; two groups are equal when their
  // tables are.
  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.table_ == b.table_;
  }

 private:
  FiniteGroup() = default;

  std::size_t at(int i, int j) const {
    return static_cast<std::size_t>(i) * n_ + j;
  }

  void check_identity() const {
    bool ok = true;
    for (int j = 0; j < n_ && ok; ++j) ok = mul(0, j) == j && mul(j, 0) == j;
    if (ok) return;
    for (int e = 1; e < n_; ++e) {
      bool is_id = true;
      for (int j = 0; j < n_ && is_id; ++j)
        is_id = mul(e, j) == j && mul(j, e) == j;
      if (is_id) {
        throw Error("identity is element " + std::to_string(e) +
                    ", not 0; renumber the elements so the identity is index 0");
      }
    }
    throw Error("no identity element: row 0 / column 0 is not the identity");
  }

  void compute_inverses() {
    inverse_.assign(n_, -1);
    for (int i = 0; i < n_; ++i) {
      int found = -1;
      for (int j = 0; j < n_; ++j) {
        if (mul(i, j) == 0 && mul(j, i) == 0) {
          if (found >= 0) {
            throw Error("element " + std::to_string(i) +
                        " has more than one inverse");
          }
          found = j;
        }
      }
      if (found < 0) throw Error("no inverse for element " + std::to_string(i));
      inverse_[i] = found;
    }
  }

  void check_associativity() const {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        for (int k = 0; k < n_; ++k)
          if (mul(mul(i, j), k) != mul(i, mul(j, k))) {
            throw Error("associativity fails at (" + std::to_string(i) + ", " +
                        std::to_string(j) + ", " + std::to_string(k) + ")");
          }
  }

  std::string name_;
  int n_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
};

inline FiniteGroup make_cyclic(int n) {
  if (n < 1) throw Error("cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return FiniteGroup::from_table("Z" + std::to_string(n), t);
}

/// Dihedral group of order 2n. Element r + n*f stands for rho^r sigma^f,
/// with sigma rho = rho^-1 sigma; indices 0..n-1 are the rotations.
inline FiniteGroup make_dihedral(int n) {
  if (n < 1) throw Error("dihedral parameter must be positive");
  const int order = 2 * n;
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      const int r1 = a % n, f1 = a / n, r2 = b % n, f2 = b / n;
      const int r = ((f1 ? r1 - r2 : r1 + r2) % n + n) % n;
      t[a][b] = r + n * (f1 ^ f2);
    }
  }
  return FiniteGroup::from_table("D" + std::to_string(n), t);
}

/// Componentwise product; element (i, j) has index i * |b| + j.
inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order();
  std::vector<std::vector<int>> t(na * nb, std::vector<int>(na * nb));
  for (int x = 0; x < na * nb; ++x)
    for (int y = 0; y < na * nb; ++y)
      t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  return FiniteGroup::from_table(a.name() + "x" + b.name(), t);
}

/// Smallest subgroup containing `seed`.
inline Subset subgroup_generated(const FiniteGroup& g, const Subset& seed) {
  for (int s : seed)
    if (s < 0 || s >= g.order())
      throw Error("element " + std::to_string(s) + " is out of range");
  std::vector<char> in(g.order(), 0);
  std::vector<int> members{0};
  in[0] = 1;
  const Subset gens = normalized(seed);
  // In a finite group, closing under right multiplication by the seed also
  // picks up inverses.
  for (std::size_t k = 0; k < members.size(); ++k) {
    for (int s : gens) {
      const int p = g.mul(members[k], s);
      if (!in[p]) {
        in[p] = 1;
        members.push_back(p);
      }
    }
  }
  return normalized(std::move(members));
}

inline bool is_subgroup(const FiniteGroup& g, const Subset& s) {
  if (!contains(s, 0)) return false;
  for (int a : s) {
    if (a < 0 || a >= g.order()) return false;
    if (!contains(s, g.inv(a))) return false;
    for (int b : s)
      if (!contains(s, g.mul(a, b))) return false;
  }
  return true;
}

inline int subgroup_index(const FiniteGroup& g, const Subset& s) {
  if (!is_subgroup(g, s)) throw Error("subgroup_index: not a subgroup");
  return g.order() / static_cast<int>(s.size());
}

inline Subset center(const FiniteGroup& g) {
  Subset z;
  for (int a = 0; a < g.order(); ++a) {
    bool central = true;
    for (int b = 0; b < g.order() && central; ++b)
      central = g.mul(a, b) == g.mul(b, a);
    if (central) z.push_back(a);
  }
  return z;
}

}  // namespace cayley
