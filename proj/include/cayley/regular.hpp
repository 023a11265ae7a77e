#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cayley/error.hpp"
#include "cayley/group.hpp"
#include "cayley/hypergraph.hpp"
#include "cayley/hyperset.hpp"
#include "cayley/permutation.hpp"
#include "cayley/search.hpp"

namespace cayley {

/// Every subgroup of `p` of order n that acts regularly on the n points.
///
/// Grows semiregular subgroups from the identity: at each step the smallest
/// point outside the orbit of 0 must be reached, so one fixed-point-free
/// element sending 0 there is adjoined and the closure is kept only while it
/// stays semiregular with order dividing n. Subgroups already expanded are
/// skipped. Results are sorted by element list.
inline std::vector<PermGroup> find_regular_subgroups(
    const PermGroup& p, int n, std::size_t cap = kPermGroupCap) {
  if (p.degree() != n) throw Error("group degree does not match point count");
  if (p.order() > cap) {
    throw CutoffExceeded("regular subgroup search refused: group order " +
                         std::to_string(p.order()) + " exceeds cap " +
                         std::to_string(cap));
  }
  if (n == 0) return {};
  if (n == 1) return {PermGroup(1, {Permutation::identity(1)})};

  std::vector<std::vector<Permutation>> reaching(n);
  for (const auto& x : p.elements())
    if (!x.has_fixed_point()) reaching[x(0)].push_back(x);

  std::set<std::vector<Permutation>> expanded;
  std::vector<PermGroup> found;

  auto rec = [&](auto&& self, const std::vector<Permutation>& elems,
                 std::vector<Permutation>& gens) -> void {
    if (static_cast<int>(elems.size()) == n) {
      found.emplace_back(n, elems);
      return;
    }
    std::vector<char> in_orbit(n, 0);
    for (const auto& e : elems) in_orbit[e(0)] = 1;
    int target = 0;
    while (in_orbit[target]) ++target;

    for (const auto& x : reaching[target]) {
      gens.push_back(x);
      auto next = detail::closure_within(n, gens, static_cast<std::size_t>(n));
      bool ok = next && n % static_cast<int>(next->size()) == 0;
      if (ok) {
        for (const auto& e : *next) {
          if (!e.is_identity() && e.has_fixed_point()) {
            ok = false;
            break;
          }
        }
      }
      if (ok && expanded.insert(*next).second) self(self, *next, gens);
      gens.pop_back();
    }
  };
  std::vector<Permutation> gens;
  rec(rec, {Permutation::identity(n)}, gens);
  std::sort(found.begin(), found.end(),
            [](const PermGroup& a, const PermGroup& b) {
              return a.elements() < b.elements();
            });
  return found;
}

/// A Cayley presentation recovered from a regular subgroup of Aut(H).
///
/// Vertex v is labelled with group element labeling[v]. With base vertex 0
/// the labelling is the identity map: element i is the unique subgroup
/// member sending 0 to i.
struct CayleyRecovery {
  FiniteGroup group;
  CayleyHyperset hyperset;
  std::vector<int> labeling;
};

/// Rebuilds (G, X) with H = CD(G, X) from a subgroup r of Aut(H) acting
/// regularly on the vertices.
///
/// The group is read off r itself: element i is the member r_i sending
/// vertex 0 to i, and g_i * g_j is r_i followed by r_j, i.e. the index
/// r_j(i). Each arc orbit of r has exactly one arc at vertex 0, so X is the
/// set of edges of arcs at vertex 0. Throws if r is not regular, is not
/// made of automorphisms, or if an arc at vertex 0 has an edge without 0.
inline CayleyRecovery regular_to_cayley(const Dihypergraph& h,
                                        const PermGroup& r) {
  const int n = h.vertex_count();
  if (!is_regular(r, n))
    throw Error("regular_to_cayley: subgroup does not act regularly");
  for (const auto& x : r.elements())
    if (!preserves_arcs(h, x))
      throw Error("regular_to_cayley: subgroup is not inside Aut(H)");

  std::vector<const Permutation*> by_image(n, nullptr);
  for (const auto& x : r.elements()) by_image[x(0)] = &x;

  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = (*by_image[j])(i);
  FiniteGroup group = FiniteGroup::from_table("recovered", table);

  std::vector<Subset> members;
  for (const auto& a : h.arcs()) {
    if (a.vertex != 0) continue;
    if (!contains(a.edge, 0)) {
      throw Error("arc at the base vertex has an edge without it; no Cayley "
                  "hyperset exists for this labelling");
    }
    members.push_back(a.edge);
  }
  CayleyHyperset hyperset = validate_hyperset(group, std::move(members));

  std::vector<int> labeling(n);
  std::iota(labeling.begin(), labeling.end(), 0);
  if (cayley_dihypergraph(group, hyperset) != h)
    throw Error("regular_to_cayley: reconstruction does not match the input");
  return {std::move(group), std::move(hyperset), std::move(labeling)};
}

}  // namespace cayley
