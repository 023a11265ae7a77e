#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cayley/automorphism.hpp"
#include "cayley/error.hpp"
#include "cayley/group.hpp"
#include "cayley/holomorph.hpp"
#include "cayley/hypergraph.hpp"
#include "cayley/hyperset.hpp"
#include "cayley/io.hpp"
#include "cayley/permutation.hpp"
#include "cayley/regular.hpp"
#include "cayley/search.hpp"

namespace cayley {

inline constexpr int kCensusMaxOrder = 10;
inline constexpr int kCensusMaxMemberSize = 4;

struct CensusOptions {
  int max_order = 8;
  int max_member_size = 3;
  // Instances with more vertices skip the Aut(H)-based checks.
  int aut_vertex_cutoff = 12;
  // Subset-level properties (equivalence relation, closure laws) run on
  // groups up to this order.
  int property_max_order = 6;
};

struct CheckTally {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
};

struct CensusReport {
  CensusOptions options;
  std::vector<std::string> groups;
  std::size_t instances = 0;
  std::vector<CheckTally> checks;
  std::vector<std::string> failures;
  std::vector<std::string> skips;

  bool ok() const { return failures.empty(); }

  const CheckTally& tally(std::string_view name) const {
    for (const auto& c : checks)
      if (c.name == name) return c;
    throw Error("unknown census check '" + std::string(name) + "'");
  }

  std::string render() const {
    std::string out = "census max_order=" + std::to_string(options.max_order) +
                      " max_member_size=" +
                      std::to_string(options.max_member_size) + '\n';
    out += "groups: " + std::to_string(groups.size()) + '\n';
    for (const auto& g : groups) out += "group " + g + '\n';
    out += "instances: " + std::to_string(instances) + '\n';
    for (const auto& c : checks) {
      out += "check " + c.name + ": passed=" + std::to_string(c.passed) +
             " failed=" + std::to_string(c.failed) +
             " skipped=" + std::to_string(c.skipped) + '\n';
    }
    for (const auto& f : failures) out += "failure " + f + '\n';
    for (const auto& s : skips) out += "skipped: " + s + '\n';
    out += std::string("result: ") + (ok() ? "PASS" : "FAIL") + '\n';
    return out;
  }
};

/// Built-in corpus up to `max_order`: cyclic groups, dihedral groups D_n
/// with n >= 3, products Z_a x Z_b with 2 <= a <= b, and Z2 x Z2 x Z2.
inline std::vector<FiniteGroup> census_groups(int max_order) {
  std::vector<FiniteGroup> out;
  for (int n = 1; n <= max_order; ++n) out.push_back(make_cyclic(n));
  for (int n = 3; 2 * n <= max_order; ++n) out.push_back(make_dihedral(n));
  for (int a = 2; a * a <= max_order; ++a)
    for (int b = a; a * b <= max_order; ++b)
      out.push_back(direct_product(make_cyclic(a), make_cyclic(b)));
  if (max_order >= 8) {
    out.push_back(direct_product(
        direct_product(make_cyclic(2), make_cyclic(2)), make_cyclic(2)));
  }
  return out;
}

inline std::string describe(const CayleyHyperset& x) {
  std::string out = "{";
  for (std::size_t i = 0; i < x.members().size(); ++i) {
    if (i) out += ',';
    out += '{';
    const auto& m = x.members()[i];
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(m[k]);
    }
    out += '}';
  }
  return out + "}";
}

/// Hypersets the census runs on for one group: for every identity-containing
/// subset within the size bound, its single Cayley closure and the
/// one-member hyperset {x}. Deduplicated, in first-seen order.
inline std::vector<CayleyHyperset> census_hypersets(const FiniteGroup& g,
                                                    int max_member_size) {
  std::vector<CayleyHyperset> out;
  std::set<std::vector<Subset>> seen;
  for (const auto& x : identity_subsets(g.order(), max_member_size)) {
    for (auto h : {single_cayley_closure(g, x), validate_hyperset(g, {x})}) {
      if (seen.insert(h.members()).second) out.push_back(std::move(h));
    }
  }
  return out;
}

namespace detail {

class CensusRunner {
 public:
  explicit CensusRunner(CensusReport& report) : report_(report) {}

  void pass(std::string_view check) { slot(check).passed++; }

  void fail(std::string_view check, const std::string& where,
            const std::string& what) {
    slot(check).failed++;
    report_.failures.push_back(std::string(check) + ": " + where + ": " + what);
  }

  void skip(std::string_view check, const std::string& where,
            const std::string& why) {
    slot(check).skipped++;
    report_.skips.push_back(std::string(check) + ": " + where + ": " + why);
  }

  void expect(std::string_view check, bool ok, const std::string& where,
              const std::string& what) {
    if (ok)
      pass(check);
    else
      fail(check, where, what);
  }

  // Runs `body`; an escaping exception counts as a failure of `check`.
  void guarded(std::string_view check, const std::string& where,
               const std::function<void()>& body) {
    try {
      body();
    } catch (const CutoffExceeded& e) {
      skip(check, where, e.what());
    } catch (const std::exception& e) {
      fail(check, where, std::string("exception: ") + e.what());
    }
  }


 private:
  CheckTally& slot(std::string_view check) {
    for (auto& c : report_.checks)
      if (c.name == check) return c;
    report_.checks.push_back({std::string(check)});
    return report_.checks.back();
  }

  CensusReport& report_;
};

inline bool is_subgroup_of_aut(const std::vector<GroupAutomorphism>& sub,
                               const std::vector<GroupAutomorphism>& aut) {
  if (sub.empty() || !std::binary_search(sub.begin(), sub.end(),
                                         GroupAutomorphism::identity(sub.front().degree())))
    return false;
  for (const auto& a : sub) {
    if (!std::binary_search(aut.begin(), aut.end(), a)) return false;
    if (!std::binary_search(sub.begin(), sub.end(), a.inverse())) return false;
    for (const auto& b : sub)
      if (!std::binary_search(sub.begin(), sub.end(), a * b)) return false;
  }
  return true;
}

inline void check_group(CensusRunner& run, const FiniteGroup& g) {
  const std::string where = g.name();
  run.guarded("group_roundtrip", where, [&] {
    run.expect("group_roundtrip", load_group(serialize_group(g)) == g, where,
               "load_group(serialize_group(G)) differs from G");
  });

  run.guarded("aut_group_closed", where, [&] {
    const auto aut = group_automorphisms(g);
    bool ok = is_subgroup_of_aut(aut, aut);
    for (const auto& a : aut) ok = ok && is_group_automorphism(g, a.map());
    run.expect("aut_group_closed", ok, where,
               "Aut(G) is not a group of automorphisms");
  });

  run.guarded("inner_center_order", where, [&] {
    const auto inn = inner_automorphisms(g);
    const auto z = center(g);
    run.expect("inner_center_order",
               inn.size() * z.size() == static_cast<std::size_t>(g.order()),
               where,
               "|Inn(G)| = " + std::to_string(inn.size()) + " but |G|/|Z| = " +
                   std::to_string(g.order() / static_cast<int>(z.size())));
  });

  if (g.order() > 12) return;
  run.guarded("subgroup_generated_minimal", where, [&] {
    for (const auto& seed : identity_subsets(g.order(), 3)) {
      const Subset s(seed.begin() + 1, seed.end());
      const Subset h = subgroup_generated(g, s);
      bool ok = is_subgroup(g, h) && is_subset_of(s, h);
      for (int e : h) {
        if (e == 0 || contains(s, e)) continue;
        Subset smaller;
        for (int v : h)
          if (v != e) smaller.push_back(v);
        ok = ok && !is_subgroup(g, smaller);
      }
      run.expect("subgroup_generated_minimal", ok, where,
                 "seed " + join(s) + " gives non-minimal closure " + join(h));
    }
  });
}

inline bool is_subset_of_members(const CayleyHyperset& a,
                                 const CayleyHyperset& b) {
  return std::includes(b.members().begin(), b.members().end(),
                       a.members().begin(), a.members().end());
}

// Closure laws and the equivalence relation over every identity-containing
// subset of a small group.
inline void check_subset_properties(CensusRunner& run, const FiniteGroup& g) {
  const std::string where = g.name();
  const auto subsets = identity_subsets(g.order(), g.order());
  for (const auto& x : subsets) {
    const auto one = validate_hyperset(g, {x});
    const auto closed = cayley_closure(g, one);
    run.expect("closure_contains", is_subset_of_members(one, closed), where,
               "{" + join(x) + "} not inside its closure");
    run.expect("closure_idempotent", cayley_closure(g, closed) == closed,
               where, "closure of [{" + join(x) + "}] grows");
    run.expect("single_closure_matches",
               single_cayley_closure(g, x) == closed && is_cayley_closed(g, closed),
               where, "single closure of " + join(x) + " disagrees");
  }

  // equiv[i][j] over all pairs, then the three laws.
  const std::size_t m = subsets.size();
  std::vector<std::vector<char>> eq(m, std::vector<char>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      eq[i][j] = are_cayley_equivalent(g, subsets[i], subsets[j]);
  bool reflexive = true, symmetric = true, transitive = true;
  for (std::size_t i = 0; i < m; ++i) {
    reflexive = reflexive && eq[i][i];
    for (std::size_t j = 0; j < m; ++j) {
      symmetric = symmetric && eq[i][j] == eq[j][i];
      if (!eq[i][j]) continue;
      for (std::size_t k = 0; k < m; ++k)
        if (eq[j][k] && !eq[i][k]) transitive = false;
    }
  }
  run.expect("equivalence_reflexive", reflexive, where, "not reflexive");
  run.expect("equivalence_symmetric", symmetric, where, "not symmetric");
  run.expect("equivalence_transitive", transitive, where, "not transitive");
}

// Every choice of one member per equivalence class, up to `limit` choices.
inline std::vector<std::vector<Subset>> representative_choices(
    const std::vector<std::vector<Subset>>& classes, std::size_t limit) {
  std::vector<std::vector<Subset>> out{{}};
  for (const auto& cls : classes) {
    std::vector<std::vector<Subset>> next;
    for (const auto& partial : out) {
      for (const auto& m : cls) {
        if (next.size() >= limit) break;
        auto p = partial;
        p.push_back(m);
        next.push_back(std::move(p));
      }
    }
    out = std::move(next);
  }
  return out;
}

inline void check_instance(CensusRunner& run, const FiniteGroup& g,
                           const CayleyHyperset& x,
                           const CensusOptions& opt) {
  const std::string where = g.name() + " X=" + describe(x);
  const Dihypergraph h = cayley_dihypergraph(g, x);

  run.expect("arc_count", h.arcs().size() == g.order() * x.size(), where,
             "|D| = " + std::to_string(h.arcs().size()));

  Subset support;
  for (const auto& m : x.members()) support.insert(support.end(), m.begin(), m.end());
  const bool generates =
      static_cast<int>(subgroup_generated(g, normalized(support)).size()) ==
      g.order();
  run.expect("connectivity_matches_generation", is_connected(h) == generates,
             where, "is_connected disagrees with subgroup generation");

  const bool closed = is_cayley_closed(g, x);
  run.expect("undirected_matches_closed", is_undirected(h) == closed, where,
             "is_undirected disagrees with is_cayley_closed");

  const bool all_subgroups =
      std::all_of(x.members().begin(), x.members().end(),
                  [&](const Subset& m) { return is_subgroup(g, m); });
  if (all_subgroups) {
    std::size_t expected = 0;
    for (const auto& m : x.members()) expected += subgroup_index(g, m);
    run.expect("subgroup_edge_count",
               closed && is_undirected(h) && h.edges().size() == expected, where,
               "|E| = " + std::to_string(h.edges().size()) + ", expected " +
                   std::to_string(expected));
  }

  const auto closure = cayley_closure(g, x);
  run.expect("closure_contains", is_subset_of_members(x, closure), where,
             "X not inside [X]");
  run.expect("closure_idempotent", cayley_closure(g, closure) == closure, where,
             "[[X]] != [X]");

  const auto classes = cayley_equivalence_classes(g, x);
  const auto y = non_cayley_equivalent_representatives(g, x);
  {
    bool ok = is_subset_of_members(y, x);
    for (std::size_t i = 0; i < y.size(); ++i)
      for (std::size_t j = i + 1; j < y.size(); ++j)
        ok = ok && !are_cayley_equivalent(g, y.members()[i], y.members()[j]);
    for (const auto& m : x.members()) {
      ok = ok && std::any_of(y.members().begin(), y.members().end(),
                             [&](const Subset& r) {
                               return are_cayley_equivalent(g, m, r);
                             });
    }
    run.expect("representatives_valid", ok, where,
               "Y=" + describe(y) + " violates the representative conditions");
  }

  run.guarded("ch_matches_closure_underlying", where, [&] {
    run.expect("ch_matches_closure_underlying",
               underlying(cayley_dihypergraph(g, cayley_closure(g, y))) ==
                   cayley_hypergraph(g, y),
               where, "underlying(CD(G,[Y])) != CH(G,Y)");
  });

  const auto choices = representative_choices(classes, 256);
  if (choices.size() >= 2) {
    run.guarded("ch_well_defined", where, [&] {
      const UndirectedHypergraph target = underlying(h);
      bool ok = true;
      for (const auto& c : choices)
        ok = ok && cayley_hypergraph(g, validate_hyperset(g, c)) == target;
      run.expect("ch_well_defined", ok, where,
                 "representative choices give different CH edge sets");
    });
  }

  const std::vector<std::string_view> aut_checks = {
      "right_regular_in_aut",    "aut_preserves_arcs",
      "regular_subgroups_include_right_regular",
      "round_trip_right_regular", "round_trip_other_regular",
      "aut_intersection",               "inn_intersection",
      "aut_g_x_subgroup",        "normalizer_factorization"};
  if (g.order() > opt.aut_vertex_cutoff) {
    for (auto c : aut_checks)
      run.skip(c, where, "over aut cutoff of " +
                             std::to_string(opt.aut_vertex_cutoff) + " vertices");
    return;
  }

  std::optional<PermGroup> aut;
  try {
    aut = aut_hypergraph(h, opt.aut_vertex_cutoff);
  } catch (const CutoffExceeded& e) {
    for (auto c : aut_checks) run.skip(c, where, e.what());
    return;
  }
  const PermGroup gr = right_regular(g);

  run.expect("right_regular_in_aut", gr.is_subset_of(*aut), where,
             "G_R not inside Aut(H)");
  run.expect("aut_preserves_arcs",
             std::all_of(aut->elements().begin(), aut->elements().end(),
                         [&](const Permutation& p) { return preserves_arcs(h, p); }),
             where, "an element of Aut(H) moves an arc out of D");

  run.guarded("round_trip_right_regular", where, [&] {
    const auto rec = regular_to_cayley(h, gr);
    const auto iso = hypergraph_isomorphic(cayley_dihypergraph(rec.group, rec.hyperset), h);
    run.expect("round_trip_right_regular",
               iso && rec.group == g && rec.hyperset == x, where,
               "recovery from G_R is not (G, X)");
  });

  run.guarded("regular_subgroups_include_right_regular", where, [&] {
    const auto regs = find_regular_subgroups(*aut, g.order());
    run.expect("regular_subgroups_include_right_regular",
               std::find(regs.begin(), regs.end(), gr) != regs.end(), where,
               "G_R missing from the regular subgroups of Aut(H)");
    for (const auto& r : regs) {
      if (r == gr) continue;
      run.guarded("round_trip_other_regular", where, [&] {
        const auto rec = regular_to_cayley(h, r);
        const auto rebuilt = cayley_dihypergraph(rec.group, rec.hyperset);
        const auto iso = hypergraph_isomorphic(rebuilt, h);
        run.expect("round_trip_other_regular",
                   iso && preserves_arcs(h, *iso) &&
                       hypergraph_isomorphic(rebuilt, cayley_dihypergraph(g, x)),
                   where, "recovery from another regular subgroup failed");
      });
    }
  });

  run.guarded("aut_intersection", where, [&] {
    const auto aut_g = group_automorphisms(g);
    std::vector<GroupAutomorphism> inside;
    for (const auto& s : aut_g)
      if (aut->contains(Permutation::from_automorphism(s))) inside.push_back(s);
    const auto agx = aut_g_x(g, x);
    run.expect("aut_intersection", inside == agx, where,
               "Aut(G) meet Aut(H) has " + std::to_string(inside.size()) +
                   " elements, Aut(G,X) has " + std::to_string(agx.size()));

    std::vector<GroupAutomorphism> inn_inside;
    for (const auto& s : inner_automorphisms(g))
      if (aut->contains(Permutation::from_automorphism(s))) inn_inside.push_back(s);
    const auto igx = inn_g_x(g, x);
    run.expect("inn_intersection", inn_inside == igx, where,
               "Inn(G) meet Aut(H) differs from Inn(G,X)");

    run.expect("aut_g_x_subgroup",
               is_subgroup_of_aut(agx, aut_g) && is_subgroup_of_aut(igx, aut_g),
               where, "Aut(G,X) or Inn(G,X) is not a subgroup of Aut(G)");
  });

  run.guarded("normalizer_factorization", where, [&] {
    const auto rep = verify_normalizer_factorization(g, x, *aut);
    run.expect("normalizer_factorization", rep.passed(), where,
               "|N|=" + std::to_string(rep.normalizer_order) +
                   " |Aut(G,X)|=" + std::to_string(rep.aut_g_x_order));
  });
}

}  // namespace detail

/// Runs every invariant check over the built-in corpus. Throws Error when a
/// bound exceeds its cap.
inline CensusReport run_census(const CensusOptions& opt = {}) {
  if (opt.max_order < 1 || opt.max_order > kCensusMaxOrder) {
    throw Error("census max order must be in 1.." +
                std::to_string(kCensusMaxOrder));
  }
  if (opt.max_member_size < 1 || opt.max_member_size > kCensusMaxMemberSize) {
    throw Error("census max member size must be in 1.." +
                std::to_string(kCensusMaxMemberSize));
  }
  CensusReport report;
  report.options = opt;
  detail::CensusRunner run(report);

  const auto groups = census_groups(opt.max_order);
  for (const auto& g : groups) {
    report.groups.push_back(g.name());
    detail::check_group(run, g);
    if (g.order() <= opt.property_max_order) detail::check_subset_properties(run, g);
    for (const auto& x : census_hypersets(g, opt.max_member_size)) {
      ++report.instances;
      detail::check_instance(run, g, x, opt);
    }
  }
  return report;
}

}  // namespace cayley
