// Command-line front end: build, analyze, aut, census.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cayley/cayley.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw cayley::Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw cayley::Error("cannot write '" + out_path + "'");
  out << text;
}

struct Inputs {
  std::string group_file;
  std::string hyperset_file;
};

void add_inputs(CLI::App* cmd, Inputs& in) {
  cmd->add_option("--group", in.group_file, "Group table file")->required();
  cmd->add_option("--hyperset", in.hyperset_file, "Cayley hyperset file")
      ->required();
}

std::pair<cayley::FiniteGroup, cayley::CayleyHyperset> load(const Inputs& in) {
  auto g = cayley::load_group(read_file(in.group_file));
  auto x = cayley::load_hyperset(g, read_file(in.hyperset_file));
  return {std::move(g), std::move(x)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley dihypergraphs over small finite groups"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "Write output here instead of stdout");

  Inputs build_in;
  auto* build = app.add_subcommand("build", "Dump the arcs of CD(G, X)");
  add_inputs(build, build_in);

  Inputs analyze_in;
  cayley::AnalysisOptions analyze_opt;
  auto* analyze = app.add_subcommand("analyze", "Report the properties of CD(G, X)");
  add_inputs(analyze, analyze_in);
  analyze->add_flag("--no-aut", analyze_opt.skip_aut,
                    "Skip automorphism-dependent fields");
  analyze->add_option("--aut-cutoff", analyze_opt.aut_vertex_cutoff,
                      "Largest vertex count for Aut(H) search")
      ->capture_default_str();

  Inputs aut_in;
  int aut_cutoff = 12;
  auto* aut = app.add_subcommand("aut", "Dump Aut(CD(G, X)) as permutations");
  add_inputs(aut, aut_in);
  aut->add_option("--aut-cutoff", aut_cutoff, "Largest vertex count for Aut(H) search")
      ->capture_default_str();

  cayley::CensusOptions census_opt;
  auto* census = app.add_subcommand("census", "Check every invariant over the built-in corpus");
  census->add_option("--max-order", census_opt.max_order, "Largest group order")
      ->capture_default_str();
  census->add_option("--max-member-size", census_opt.max_member_size,
                     "Largest generating subset size")
      ->capture_default_str();
  census->add_option("--aut-cutoff", census_opt.aut_vertex_cutoff,
                     "Largest vertex count for Aut(H)-based checks")
      ->capture_default_str();

  // --out is accepted after the subcommand too.
  for (auto* cmd : {build, analyze, aut, census})
    cmd->add_option("--out", out_path, "Write output here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*build) {
      auto [g, x] = load(build_in);
      emit(cayley::dump_dihypergraph(cayley::cayley_dihypergraph(g, x)), out_path);
    } else if (*analyze) {
      auto [g, x] = load(analyze_in);
      emit(cayley::analyze(g, x, analyze_opt).render(), out_path);
    } else if (*aut) {
      auto [g, x] = load(aut_in);
      emit(cayley::dump_perm_group(
               cayley::aut_hypergraph(cayley::cayley_dihypergraph(g, x), aut_cutoff)),
           out_path);
    } else if (*census) {
      const auto report = cayley::run_census(census_opt);
      emit(report.render(), out_path);
      return report.ok() ? 0 : 1;
    }
  } catch (const cayley::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
