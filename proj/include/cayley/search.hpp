#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cayley/error.hpp"
#include "cayley/hypergraph.hpp"
#include "cayley/permutation.hpp"
#include "cayley/subset.hpp"

namespace cayley {

/// Default vertex ceiling for automorphism and isomorphism search.
inline constexpr int kSearchVertexCutoff = 20;

namespace detail {

using Signature = std::vector<int>;

// Per-vertex invariant: sizes of edges on arcs leaving the vertex, then
// sizes of distinct edges containing it.
inline Signature incidence_signature(const Dihypergraph& h, int v,
                                     const std::vector<Subset>& edges) {
  Signature out_sizes, in_sizes;
  for (const auto& a : h.arcs())
    if (a.vertex == v) out_sizes.push_back(static_cast<int>(a.edge.size()));
  for (const auto& e : edges)
    if (contains(e, v)) in_sizes.push_back(static_cast<int>(e.size()));
  std::sort(out_sizes.begin(), out_sizes.end());
  std::sort(in_sizes.begin(), in_sizes.end());
  Signature s = std::move(out_sizes);
  s.push_back(-1);
  s.insert(s.end(), in_sizes.begin(), in_sizes.end());
  return s;
}

// Colours vertices of both hypergraphs with a shared palette: incidence
// signature, refined once by the multiset of co-edge neighbour colours.
inline std::pair<std::vector<int>, std::vector<int>> shared_colouring(
    const Dihypergraph& a, const Dihypergraph& b) {
  const Dihypergraph* hs[2] = {&a, &b};
  std::vector<Subset> edges[2] = {a.edges(), b.edges()};
  std::vector<Signature> sig[2];
  std::map<Signature, int> palette;
  for (int k = 0; k < 2; ++k)
    for (int v = 0; v < hs[k]->vertex_count(); ++v)
      sig[k].push_back(incidence_signature(*hs[k], v, edges[k]));
  for (int k = 0; k < 2; ++k)
    for (const auto& s : sig[k]) palette.emplace(s, 0);
  int next = 0;
  for (auto& [s, c] : palette) c = next++;

  std::vector<int> first[2];
  for (int k = 0; k < 2; ++k)
    for (const auto& s : sig[k]) first[k].push_back(palette.at(s));

  std::map<Signature, int> refined;
  std::vector<Signature> sig2[2];
  for (int k = 0; k < 2; ++k) {
    for (int v = 0; v < hs[k]->vertex_count(); ++v) {
      Signature s{first[k][v], -1};
      for (const auto& e : edges[k])
        if (contains(e, v))
          for (int w : e)
            if (w != v) s.push_back(first[k][w]);
      std::sort(s.begin() + 2, s.end());
      sig2[k].push_back(std::move(s));
    }
  }
  for (int k = 0; k < 2; ++k)
    for (const auto& s : sig2[k]) refined.emplace(s, 0);
  next = 0;
  for (auto& [s, c] : refined) c = next++;
  std::pair<std::vector<int>, std::vector<int>> out;
  for (const auto& s : sig2[0]) out.first.push_back(refined.at(s));
  for (const auto& s : sig2[1]) out.second.push_back(refined.at(s));
  return out;
}

using MaskArc = std::pair<int, std::uint64_t>;

// Calls visit(images) for every vertex bijection mapping the arcs of `a`
// exactly onto the arcs of `b`, in lexicographic order of `images`. Stops
// early when visit returns false.
template <class Visit>
void for_each_isomorphism(const Dihypergraph& a, const Dihypergraph& b,
                          Visit&& visit) {
  const int n = a.vertex_count();
  if (n != b.vertex_count() || a.arcs().size() != b.arcs().size()) return;
  if (n > 64) {
    throw CutoffExceeded("hypergraph search supports at most 64 vertices");
  }
  if (n == 0) {
    visit(std::vector<int>{});
    return;
  }

  std::vector<MaskArc> target;
  for (const auto& arc : b.arcs()) target.emplace_back(arc.vertex, to_mask(arc.edge));
  std::sort(target.begin(), target.end());

  // Arcs of `a` bucketed by the last vertex they need (vertices are assigned
  // in index order).
  std::vector<std::vector<std::pair<int, Subset>>> due(n);
  for (const auto& arc : a.arcs()) {
    const int last = std::max(arc.vertex, arc.edge.back());
    due[last].emplace_back(arc.vertex, arc.edge);
  }

  const auto [ca, cb] = shared_colouring(a, b);
  {
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return;
  }

  std::vector<int> images(n, -1);
  std::vector<char> used(n, 0);
  bool stop = false;

  auto consistent = [&](int k) {
    for (const auto& [v, edge] : due[k]) {
      std::uint64_t m = 0;
      for (int w : edge) m |= std::uint64_t{1} << images[w];
      if (!std::binary_search(target.begin(), target.end(),
                              MaskArc{images[v], m}))
        return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, int k) -> void {
    if (k == n) {
      if (!visit(images)) stop = true;
      return;
    }
    for (int w = 0; w < n && !stop; ++w) {
      if (used[w] || cb[w] != ca[k]) continue;
      images[k] = w;
      used[w] = 1;
      if (consistent(k)) self(self, k + 1);
      used[w] = 0;
    }
    images[k] = -1;
  };
  rec(rec, 0);
}

}  // namespace detail

/// A vertex bijection carrying the arcs of `a` exactly onto those of `b`,
/// or nullopt.
inline std::optional<Permutation> hypergraph_isomorphic(
    const Dihypergraph& a, const Dihypergraph& b,
    int max_vertices = kSearchVertexCutoff) {
  if (a.vertex_count() != b.vertex_count()) return std::nullopt;
  if (a.vertex_count() > max_vertices) {
    throw CutoffExceeded("isomorphism search refused: " +
                         std::to_string(a.vertex_count()) +
                         " vertices exceeds cutoff " +
                         std::to_string(max_vertices));
  }
  std::optional<Permutation> found;
  detail::for_each_isomorphism(a, b, [&](const std::vector<int>& images) {
    found.emplace(images);
    return false;
  });
  return found;
}

/// True iff sigma maps the arc set of h onto itself.
inline bool preserves_arcs(const Dihypergraph& h, const Permutation& sigma) {
  if (sigma.degree() != h.vertex_count()) return false;
  for (const auto& a : h.arcs())
    if (!h.has_arc({sigma(a.vertex), sigma.apply(a.edge)})) return false;
  return true;
}

/// Aut(H), fully enumerated by signature-pruned backtracking.
inline PermGroup aut_hypergraph(const Dihypergraph& h,
                                int max_vertices = kSearchVertexCutoff,
                                std::size_t cap = kPermGroupCap) {
  const int n = h.vertex_count();
  if (n > max_vertices) {
    throw CutoffExceeded("Aut(H) refused: " + std::to_string(n) +
                         " vertices exceeds cutoff " +
                         std::to_string(max_vertices));
  }
  std::vector<Permutation> out;
  bool overflow = false;
  detail::for_each_isomorphism(h, h, [&](const std::vector<int>& images) {
    if (out.size() >= cap) {
      overflow = true;
      return false;
    }
    out.emplace_back(images);
    return true;
  });
  if (overflow) {
    throw CutoffExceeded("Aut(H) refused: more than " + std::to_string(cap) +
                         " automorphisms");
  }
  return PermGroup(n, std::move(out));
}

}  // namespace cayley
