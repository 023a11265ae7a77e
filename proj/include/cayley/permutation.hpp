#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cayley/automorphism.hpp"
#include "cayley/error.hpp"
#include "cayley/group.hpp"
#include "cayley/subset.hpp"

namespace cayley {

/// Default ceiling on the size of any fully enumerated permutation group.
inline constexpr std::size_t kPermGroupCap = 1'000'000;

/// A bijection on 0..n-1 in image notation. Products compose left to right:
/// v^(p*q) = (v^p)^q.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> hit(images_.size(), 0);
    for (int v : images_) {
      if (v < 0 || v >= degree() || hit[v])
        throw Error("permutation images are not a bijection");
      hit[v] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> m(n);
    std::iota(m.begin(), m.end(), 0);
    return Permutation(std::move(m), Unchecked{});
  }

  static Permutation from_automorphism(const GroupAutomorphism& a) {
    return Permutation(a.map(), Unchecked{});
  }

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int v) const { return images_[v]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const {
    for (int v = 0; v < degree(); ++v)
      if (images_[v] != v) return false;
    return true;
  }

  bool has_fixed_point() const {
    for (int v = 0; v < degree(); ++v)
      if (images_[v] == v) return true;
    return false;
  }

  Subset apply(const Subset& s) const {
    Subset out;
    out.reserve(s.size());
    for (int v : s) out.push_back(images_[v]);
    return normalized(std::move(out));
  }

  Permutation inverse() const {
    std::vector<int> m(images_.size());
    for (int v = 0; v < degree(); ++v) m[images_[v]] = v;
    return Permutation(std::move(m), Unchecked{});
  }

  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) throw Error("permutation degree mismatch");
    std::vector<int> m(p.images_.size());
    for (int v = 0; v < p.degree(); ++v) m[v] = q.images_[p.images_[v]];
    return Permutation(std::move(m), Unchecked{});
  }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> images, Unchecked) : images_(std::move(images)) {}

  std::vector<int> images_;
};

/// A permutation group stored as its full, sorted element list.
class PermGroup {
 public:
  /// Takes ownership of an element list that is already a group. Sorts and
  /// deduplicates; closure is the caller's responsibility (see
  /// generate_closure for the checked route).
  PermGroup(int degree, std::vector<Permutation> elements) : degree_(degree) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()),
                   elements.end());
    for (const auto& p : elements)
      if (p.degree() != degree) throw Error("permutation degree mismatch");
    elements_ = std::move(elements);
  }

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }

  bool contains(const Permutation& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
  }

  bool is_subset_of(const PermGroup& other) const {
    return std::includes(other.elements_.begin(), other.elements_.end(),
                         elements_.begin(), elements_.end());
  }

  Subset orbit(int v) const {
    Subset o;
    for (const auto& p : elements_) o.push_back(p(v));
    return normalized(std::move(o));
  }

  PermGroup stabilizer(int v) const {
    std::vector<Permutation> s;
    for (const auto& p : elements_)
      if (p(v) == v) s.push_back(p);
    return PermGroup(degree_, std::move(s));
  }

  bool is_abelian() const {
    for (std::size_t i = 0; i < elements_.size(); ++i)
      for (std::size_t j = i + 1; j < elements_.size(); ++j)
        if (elements_[i] * elements_[j] != elements_[j] * elements_[i])
          return false;
    return true;
  }

  friend bool operator==(const PermGroup&, const PermGroup&) = default;

 private:
  int degree_;
  std::vector<Permutation> elements_;
};

namespace detail {

// Closure of `gens` by right multiplication from the identity. Returns
// nullopt once more than `limit` elements appear.
inline std::optional<std::vector<Permutation>> closure_within(
    int degree, const std::vector<Permutation>& gens, std::size_t limit) {
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::vector<Permutation> queue{Permutation::identity(degree)};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (const auto& g : gens) {
      Permutation p = queue[k] * g;
      if (seen.insert(p).second) {
        if (seen.size() > limit) return std::nullopt;
        queue.push_back(std::move(p));
      }
    }
  }
  return std::vector<Permutation>(seen.begin(), seen.end());
}

}  // namespace detail

/// The group generated by `gens` on `degree` points. Throws Error on a
/// degree mismatch and CutoffExceeded when the group outgrows `cap`.
inline PermGroup generate_closure(int degree,
                                  const std::vector<Permutation>& gens,
                                  std::size_t cap = kPermGroupCap) {
  for (const auto& g : gens)
    if (g.degree() != degree) throw Error("generator degree mismatch");
  auto elems = detail::closure_within(degree, gens, cap);
  if (!elems) {
    throw CutoffExceeded("permutation group closure exceeds cap of " +
                         std::to_string(cap) + " elements");
  }
  return PermGroup(degree, std::move(*elems));
}

/// G_R: the permutations v -> v*h for h in G.
inline PermGroup right_regular(const FiniteGroup& g) {
  std::vector<Permutation> elems;
  for (int h = 0; h < g.order(); ++h) {
    std::vector<int> m(g.order());
    for (int v = 0; v < g.order(); ++v) m[v] = g.mul(v, h);
    elems.emplace_back(std::move(m));
  }
  return PermGroup(g.order(), std::move(elems));
}

/// The right translation v -> v*h as a permutation.
inline Permutation right_translation(const FiniteGroup& g, int h) {
  std::vector<int> m(g.order());
  for (int v = 0; v < g.order(); ++v) m[v] = g.mul(v, h);
  return Permutation(std::move(m));
}

/// Transitive on n points with |p| = n.
inline bool is_regular(const PermGroup& p, int n) {
  if (p.degree() != n || static_cast<int>(p.order()) != n) return false;
  return n == 0 || static_cast<int>(p.orbit(0).size()) == n;
}

/// {x in big : x^-1 small x = small}.
inline PermGroup normalizer(const PermGroup& big, const PermGroup& small) {
  if (!small.is_subset_of(big))
    throw Error("normalizer: subgroup is not contained in the ambient group");
  std::vector<Permutation> out;
  for (const auto& x : big.elements()) {
    const Permutation xi = x.inverse();
    bool normalizes = true;
    for (const auto& s : small.elements()) {
      if (!small.contains(xi * s * x)) {
        normalizes = false;
        break;
      }
    }
    if (normalizes) out.push_back(x);
  }
  return PermGroup(big.degree(), std::move(out));
}

inline bool is_normal_in(const PermGroup& sub, const PermGroup& group) {
  return normalizer(group, sub).order() == group.order();
}

}  // namespace cayley
