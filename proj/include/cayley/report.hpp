#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cayley/error.hpp"
#include "cayley/group.hpp"
#include "cayley/holomorph.hpp"
#include "cayley/hypergraph.hpp"
#include "cayley/hyperset.hpp"
#include "cayley/search.hpp"

namespace cayley {

struct AnalysisOptions {
  bool skip_aut = false;
  int aut_vertex_cutoff = 12;
};

/// Ordered key/value lines describing CD(G, X). The key order never changes;
/// automorphism fields read `skipped: <reason>` when not computed.
struct AnalysisReport {
  std::vector<std::pair<std::string, std::string>> fields;

  const std::string& at(const std::string& key) const {
    for (const auto& [k, v] : fields)
      if (k == key) return v;
    throw Error("report has no field '" + key + "'");
  }

  std::string render() const {
    std::string out;
    for (const auto& [k, v] : fields) out += k + ": " + v + '\n';
    return out;
  }
};

inline AnalysisReport analyze(const FiniteGroup& g, const CayleyHyperset& x,
                              const AnalysisOptions& opt = {}) {
  auto flag = [](bool b) { return std::string(b ? "true" : "false"); };
  auto verdict = [](bool b) { return std::string(b ? "pass" : "fail"); };

  AnalysisReport r;
  auto add = [&](std::string k, std::string v) {
    r.fields.emplace_back(std::move(k), std::move(v));
  };
  const Dihypergraph h = cayley_dihypergraph(g, x);
  const auto r_uniform = uniformity(h);

  add("group", g.name());
  add("order", std::to_string(g.order()));
  add("hyperset_size", std::to_string(x.size()));
  add("cayley_closed", flag(is_cayley_closed(g, x)));
  add("connected", flag(is_connected(h)));
  add("undirected", flag(is_undirected(h)));
  add("uniformity", r_uniform ? std::to_string(*r_uniform) : "none");
  add("arcs", std::to_string(h.arcs().size()));
  add("edges", std::to_string(h.edges().size()));

  const char* aut_keys[] = {"aut_hypergraph",
                            "aut_g_x",
                            "normalizer",
                            "normalizer_factorization.product_set",
                            "normalizer_factorization.order",
                            "normalizer_factorization.trivial_intersection",
                            "normalizer_factorization.regular_normal",
                            "normalizer_factorization.stabilizer",
                            "normalizer_factorization"};
  auto skip_all = [&](const std::string& why) {
    for (const char* k : aut_keys) add(k, "skipped: " + why);
  };

  if (opt.skip_aut) {
    skip_all("--no-aut");
    return r;
  }
  if (g.order() > opt.aut_vertex_cutoff) {
    skip_all("over cutoff (" + std::to_string(g.order()) + " vertices > " +
             std::to_string(opt.aut_vertex_cutoff) + ")");
    return r;
  }
  try {
    const auto rep = verify_normalizer_factorization(
        g, x, aut_hypergraph(h, opt.aut_vertex_cutoff));
    add("aut_hypergraph", std::to_string(rep.aut_order));
    add("aut_g_x", std::to_string(rep.aut_g_x_order));
    add("normalizer", std::to_string(rep.normalizer_order));
    add("normalizer_factorization.product_set", verdict(rep.product_set_matches));
    add("normalizer_factorization.order", verdict(rep.order_matches));
    add("normalizer_factorization.trivial_intersection",
        verdict(rep.trivial_intersection));
    add("normalizer_factorization.regular_normal", verdict(rep.regular_is_normal));
    add("normalizer_factorization.stabilizer", verdict(rep.stabilizer_matches));
    add("normalizer_factorization", verdict(rep.passed()));
  } catch (const CutoffExceeded& e) {
    skip_all(e.what());
  }
  return r;
}

}  // namespace cayley
