#pragma once

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <utility>
#include <vector>

#include "cayley/automorphism.hpp"
#include "cayley/group.hpp"
#include "cayley/hypergraph.hpp"
#include "cayley/hyperset.hpp"
#include "cayley/permutation.hpp"
#include "cayley/search.hpp"

namespace cayley {

/// Outcome of checking N_{Aut(H)}(G_R) = G_R x| Aut(G, X) for H = CD(G, X).
struct NormalizerReport {
  std::size_t aut_order = 0;         // |Aut(H)|
  std::size_t aut_g_x_order = 0;     // |Aut(G, X)|
  std::size_t normalizer_order = 0;  // |N|
  bool normalizer_abelian = false;

  bool product_set_matches = false;   // N = {sigma * h_R}
  bool order_matches = false;         // |N| = |G| |Aut(G, X)|
  bool trivial_intersection = false;  // G_R meets Aut(G, X) only in 1
  bool regular_is_normal = false;     // G_R normal in N
  bool stabilizer_matches = false;    // N_0 = Aut(G, X)

  bool passed() const {
    return product_set_matches && order_matches && trivial_intersection &&
           regular_is_normal && stabilizer_matches;
  }
};

/// Aut(G, X) as permutations of the vertex set G.
inline PermGroup aut_g_x_on_vertices(const FiniteGroup& g,
                                     const CayleyHyperset& x) {
  std::vector<Permutation> perms;
  for (const auto& s : aut_g_x(g, x)) perms.push_back(Permutation::from_automorphism(s));
  return PermGroup(g.order(), std::move(perms));
}

/// Checks the factorisation against a precomputed Aut(H).
inline NormalizerReport verify_normalizer_factorization(
    const FiniteGroup& g, const CayleyHyperset& x, const PermGroup& aut) {
  NormalizerReport r;
  const PermGroup gr = right_regular(g);
  const PermGroup agx = aut_g_x_on_vertices(g, x);
  const PermGroup n = normalizer(aut, gr);

  r.aut_order = aut.order();
  r.aut_g_x_order = agx.order();
  r.normalizer_order = n.order();
  r.normalizer_abelian = n.is_abelian();

  std::vector<Permutation> product;
  for (const auto& s : agx.elements())
    for (const auto& h : gr.elements()) product.push_back(s * h);
  r.product_set_matches = PermGroup(g.order(), std::move(product)) == n;
  r.order_matches = n.order() == gr.order() * agx.order();

  std::vector<Permutation> common;
  std::set_intersection(gr.elements().begin(), gr.elements().end(),
                        agx.elements().begin(), agx.elements().end(),
                        std::back_inserter(common));
  r.trivial_intersection = common.size() == 1 && common.front().is_identity();
  r.regular_is_normal = gr.is_subset_of(n) && is_normal_in(gr, n);
  r.stabilizer_matches = n.stabilizer(0) == agx;
  return r;
}

inline NormalizerReport verify_normalizer_factorization(
    const FiniteGroup& g, const CayleyHyperset& x,
    int max_vertices = kSearchVertexCutoff) {
  return verify_normalizer_factorization(
      g, x, aut_hypergraph(cayley_dihypergraph(g, x), max_vertices));
}

}  // namespace cayley
