// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "cayley/cayley.hpp"
#include "oracles.hpp"

namespace {

using namespace cayley;
using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail) {
  std::printf("criterion %2d %s: %s (%s)\n", id, ok ? "PASS" : "FAIL", title.c_str(),
              detail.c_str());
  if (!ok) ++failures;
}

void run(int id, const std::string& title, const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  report(id, title, ok, detail);
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

const std::vector<Subset> kFanoLines = {{0, 1, 3}, {1, 2, 4}, {2, 3, 5}, {3, 4, 6},
                                        {4, 5, 0}, {5, 6, 1}, {6, 0, 2}};
const std::vector<Subset> kFanoX = {{0, 1, 3}, {0, 4, 5}, {0, 2, 6}};

bool clean(const CheckTally& t, std::string& detail) {
  if (!detail.empty()) detail += "; ";
  detail += t.name + " passed=" + std::to_string(t.passed) +
            " failed=" + std::to_string(t.failed) +
            " skipped=" + std::to_string(t.skipped);
  return t.failed == 0 && t.skipped == 0 && t.passed > 0;
}

// y ~ x by direct table lookup: y = x g^-1 for some g in x.
bool equivalent_by_table(const FiniteGroup& g, const Subset& x, const Subset& y) {
  for (int a : x) {
    Subset t;
    for (int s : x) t.push_back(g.mul(s, g.inv(a)));
    if (normalized(t) == y) return true;
  }
  return false;
}

}  // namespace

int main() {
  const auto z7 = make_cyclic(7);

  run(1, "Fano construction", [&](std::string& detail) {
    const auto start = Clock::now();
    const auto h = cayley_dihypergraph(z7, validate_hyperset(z7, kFanoX));
    const double secs = seconds_since(start);
    std::set<Subset> expected;
    for (const auto& e : kFanoLines) expected.insert(normalized(e));
    const auto edges = h.edges();
    const std::set<Subset> got(edges.begin(), edges.end());
    detail = "edges=" + std::to_string(edges.size()) +
             " arcs=" + std::to_string(h.arcs().size()) +
             " time=" + std::to_string(secs) + "s";
    return got == expected && edges.size() == 7 && h.arcs().size() == 21 &&
           uniformity(h) == 3 && is_connected(h) && is_undirected(h) && secs < 1.0;
  });

  run(2, "single closure identity", [&](std::string& detail) {
    const auto closure = single_cayley_closure(z7, {0, 1, 3});
    detail = "members=" + std::to_string(closure.size());
    return closure == validate_hyperset(z7, kFanoX);
  });

  run(3, "normalizer of the regular representation", [&](std::string& detail) {
    const auto start = Clock::now();
    const auto x = validate_hyperset(z7, kFanoX);
    const auto h = cayley_dihypergraph(z7, x);
    std::vector<Permutation> perms;
    for (const auto& p : oracle::all_automorphisms(h)) perms.emplace_back(p);
    const PermGroup aut(7, std::move(perms));
    const auto r = verify_normalizer_factorization(z7, x, aut);
    const bool search_agrees = aut_hypergraph(h) == aut;
    const double secs = seconds_since(start);
    detail = "aut=" + std::to_string(r.aut_order) +
             " normalizer=" + std::to_string(r.normalizer_order) +
             " stabilizer=" + std::to_string(r.aut_g_x_order) +
             (r.normalizer_abelian ? " abelian" : " nonabelian") +
             " time=" + std::to_string(secs) + "s";
    return r.aut_order == 168 && search_agrees && r.normalizer_order == 21 &&
           r.regular_is_normal && r.stabilizer_matches && r.aut_g_x_order == 3 &&
           r.product_set_matches && r.order_matches && r.trivial_intersection &&
           !r.normalizer_abelian && secs < 10.0;
  });

  const auto census_start = Clock::now();
  const CensusReport census = run_census(CensusOptions{});
  const double census_secs = seconds_since(census_start);
  const std::string census_info = "instances=" + std::to_string(census.instances) +
                                  " time=" + std::to_string(census_secs) + "s";

  run(4, "connectivity matches generation", [&](std::string& detail) {
    const bool ok = clean(census.tally("connectivity_matches_generation"), detail);
    detail += "; " + census_info;
    return ok && census.instances > 0 && census_secs < 300.0;
  });

  run(5, "undirected matches Cayley closed", [&](std::string& detail) {
    return clean(census.tally("undirected_matches_closed"), detail);
  });

  run(6, "subgroup edge count", [&](std::string& detail) {
    return clean(census.tally("subgroup_edge_count"), detail);
  });

  run(7, "regular subgroup round trip", [&](std::string& detail) {
    const bool a = clean(census.tally("round_trip_right_regular"), detail);
    const bool b = clean(census.tally("round_trip_other_regular"), detail);
    return a && b;
  });

  run(8, "Cayley hypergraph well defined", [&](std::string& detail) {
    const bool a = clean(census.tally("ch_well_defined"), detail);
    const bool b = clean(census.tally("ch_matches_closure_underlying"), detail);
    return a && b;
  });

  run(9, "automorphism intersections", [&](std::string& detail) {
    const bool a = clean(census.tally("aut_intersection"), detail);
    const bool b = clean(census.tally("inn_intersection"), detail);
    return a && b;
  });

  run(10, "closure and equivalence properties", [&](std::string& detail) {
    bool ok = true;
    for (const char* name : {"closure_contains", "closure_idempotent", "equivalence_reflexive",
                             "equivalence_symmetric", "equivalence_transitive"})
      ok = clean(census.tally(name), detail) && ok;

    // Direct recheck against table lookups, independent of the census runner.
    std::size_t groups = 0, pairs = 0;
    for (const auto& g : census_groups(6)) {
      ++groups;
      const auto subsets = identity_subsets(g.order(), g.order());
      for (const auto& x : subsets) {
        const auto c = cayley_closure(g, validate_hyperset(g, {x}));
        ok = ok && c.contains(x) && cayley_closure(g, c) == c;
      }
      const std::size_t m = subsets.size();
      std::vector<std::vector<char>> eq(m, std::vector<char>(m));
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          eq[i][j] = equivalent_by_table(g, subsets[i], subsets[j]);
          ok = ok && (eq[i][j] != 0) == are_cayley_equivalent(g, subsets[i], subsets[j]);
          ++pairs;
        }
      for (std::size_t i = 0; i < m; ++i) {
        ok = ok && eq[i][i];
        for (std::size_t j = 0; j < m; ++j) {
          ok = ok && eq[i][j] == eq[j][i];
          if (!eq[i][j]) continue;
          for (std::size_t k = 0; k < m; ++k) ok = ok && (!eq[j][k] || eq[i][k]);
        }
      }
    }
    detail += "; direct groups=" + std::to_string(groups) + " pairs=" + std::to_string(pairs);
    return ok && groups > 0;
  });

  std::printf("acceptance: %s\n", failures == 0 ? "PASS" : "FAIL");
  return failures == 0 ? 0 : 1;
}
