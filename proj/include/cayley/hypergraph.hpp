#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cayley/error.hpp"
#include "cayley/group.hpp"
#include "cayley/hyperset.hpp"
#include "cayley/subset.hpp"

namespace cayley {

/// A (vertex, edge) incidence. The edge is a sorted vertex subset.
struct Arc {
  int vertex = 0;
  Subset edge;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Vertices 0..n-1 plus a set of arcs, kept sorted by vertex then edge.
class Dihypergraph {
 public:
  Dihypergraph(int vertex_count, std::vector<Arc> arcs) : n_(vertex_count) {
    if (n_ < 0) throw Error("negative vertex count");
    for (auto& a : arcs) {
      a.edge = normalized(std::move(a.edge));
      if (a.edge.empty()) throw Error("arc has an empty edge");
      if (a.vertex < 0 || a.vertex >= n_ || a.edge.front() < 0 ||
          a.edge.back() >= n_) {
        throw Error("arc refers to a vertex outside 0.." +
                    std::to_string(n_ - 1));
      }
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    arcs_ = std::move(arcs);
  }

  int vertex_count() const { return n_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  bool has_arc(const Arc& a) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), a);
  }

  // Distinct edges appearing in some arc, sorted.
  std::vector<Subset> edges() const {
    std::vector<Subset> e;
    for (const auto& a : arcs_) e.push_back(a.edge);
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    return e;
  }

  friend bool operator==(const Dihypergraph&, const Dihypergraph&) = default;

 private:
  int n_;
  std::vector<Arc> arcs_;
};

/// Vertices 0..n-1 plus a set of distinct non-empty edges.
class UndirectedHypergraph {
 public:
  UndirectedHypergraph(int vertex_count, std::vector<Subset> edges)
      : n_(vertex_count) {
    for (auto& e : edges) {
      e = normalized(std::move(e));
      if (e.empty()) throw Error("hypergraph edge is empty");
      if (e.front() < 0 || e.back() >= n_)
        throw Error("edge refers to a vertex outside the vertex range");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
  }

  int vertex_count() const { return n_; }
  const std::vector<Subset>& edges() const { return edges_; }

  friend bool operator==(const UndirectedHypergraph&,
                         const UndirectedHypergraph&) = default;

 private:
  int n_;
  std::vector<Subset> edges_;
};

/// CD(G, X): arcs (g, x*g) for every g in G and x in X.
inline Dihypergraph cayley_dihypergraph(const FiniteGroup& g,
                                        const CayleyHyperset& x) {
  detail::check_over(g, x);
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(g.order()) * x.size());
  for (int v = 0; v < g.order(); ++v)
    for (const auto& m : x.members()) arcs.push_back({v, g.right_translate(m, v)});
  return Dihypergraph(g.order(), std::move(arcs));
}

/// CH(G, Y): all right translates of members of Y. Y must be
/// non-Cayley-equivalent; anything else is refused.
inline UndirectedHypergraph cayley_hypergraph(const FiniteGroup& g,
                                              const CayleyHyperset& y) {
  detail::check_over(g, y);
  if (!is_non_cayley_equivalent(g, y)) {
    throw Error("hyperset has Cayley-equivalent members; pass one "
                "representative per class");
  }
  std::vector<Subset> edges;
  for (const auto& m : y.members())
    for (int h = 0; h < g.order(); ++h) edges.push_back(g.right_translate(m, h));
  return UndirectedHypergraph(g.order(), std::move(edges));
}

inline UndirectedHypergraph underlying(const Dihypergraph& h) {
  return UndirectedHypergraph(h.vertex_count(), h.edges());
}

/// Connectivity of the vertex/edge incidence structure. Every vertex must be
/// reachable from vertex 0 through edges; the empty hypergraph counts as
/// connected.
inline bool is_connected(const Dihypergraph& h) {
  const int n = h.vertex_count();
  if (n == 0) return true;
  const auto edges = h.edges();
  std::vector<std::vector<int>> incident(n);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e)
    for (int v : edges[e]) incident[v].push_back(e);
  // Arc vertices of general dihypergraphs may lie outside their edge; the
  // incidence still links them.
  for (const auto& a : h.arcs()) {
    auto it = std::lower_bound(edges.begin(), edges.end(), a.edge);
    const int e = static_cast<int>(it - edges.begin());
    if (!contains(a.edge, a.vertex)) incident[a.vertex].push_back(e);
  }
  std::vector<std::vector<int>> members(edges.size());
  for (int v = 0; v < n; ++v)
    for (int e : incident[v]) members[e].push_back(v);

  std::vector<char> seen_v(n, 0), seen_e(edges.size(), 0);
  std::vector<int> queue{0};
  seen_v[0] = 1;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (int e : incident[queue[k]]) {
      if (seen_e[e]) continue;
      seen_e[e] = 1;
      for (int w : members[e]) {
        if (!seen_v[w]) {
          seen_v[w] = 1;
          queue.push_back(w);
        }
      }
    }
  }
  return static_cast<int>(queue.size()) == n;
}

/// Arc-entry symmetry: (v, e) an arc and w in e imply (w, e) is an arc.
inline bool is_undirected(const Dihypergraph& h) {
  for (const auto& a : h.arcs())
    for (int w : a.edge)
      if (!h.has_arc({w, a.edge})) return false;
  return true;
}

/// r if every edge has exactly r vertices; empty when sizes differ or there
/// are no edges.
inline std::optional<int> uniformity(const Dihypergraph& h) {
  std::optional<int> r;
  for (const auto& a : h.arcs()) {
    const int s = static_cast<int>(a.edge.size());
    if (r && *r != s) return std::nullopt;
    r = s;
  }
  return r;
}

/// For a 2-uniform X: the arcs (g, s*g) of the Cayley digraph Cay(G, S)
/// with S the union of the members minus the identity.
inline std::vector<std::pair<int, int>> to_cayley_digraph(
    const FiniteGroup& g, const CayleyHyperset& x) {
  detail::check_over(g, x);
  Subset s;
  for (const auto& m : x.members()) {
    if (m.size() != 2) throw Error("Cayley digraph needs a 2-uniform hyperset");
    s.push_back(m[1]);
  }
  s = normalized(std::move(s));
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < g.order(); ++v)
    for (int c : s) out.emplace_back(v, g.mul(c, v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cayley
