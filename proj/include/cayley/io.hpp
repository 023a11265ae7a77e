#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cayley/error.hpp"
#include "cayley/group.hpp"
#include "cayley/hypergraph.hpp"
#include "cayley/hyperset.hpp"
#include "cayley/permutation.hpp"

namespace cayley {

namespace detail {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

// Non-blank lines with `#` comments stripped, split on whitespace.
inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string w; words >> w;) line.tokens.push_back(std::move(w));
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

inline int parse_index(const std::string& token, int line) {
  std::size_t used = 0;
  int v = -1;
  try {
    v = std::stoi(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || token.empty() || v < 0) {
    throw Error("line " + std::to_string(line) + ": expected a non-negative "
                "integer, got '" + token + "'");
  }
  return v;
}

inline std::string join(const Subset& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(s[i]);
  }
  return out;
}

}  // namespace detail

/// Parses the group file format:
///
///     group <name>
///     order <n>
///     table
///     <n rows of n indices>
inline FiniteGroup load_group(std::string_view text) {
  const auto lines = detail::tokenize(text);
  auto expect = [&](std::size_t i, const char* keyword) -> const detail::Line& {
    if (i >= lines.size())
      throw Error(std::string("missing '") + keyword + "' line");
    if (lines[i].tokens[0] != keyword) {
      throw Error("line " + std::to_string(lines[i].number) + ": expected '" +
                  keyword + "', got '" + lines[i].tokens[0] + "'");
    }
    return lines[i];
  };
  const auto& head = expect(0, "group");
  if (head.tokens.size() != 2)
    throw Error("line " + std::to_string(head.number) + ": expected 'group <name>'");
  const auto& ord = expect(1, "order");
  if (ord.tokens.size() != 2)
    throw Error("line " + std::to_string(ord.number) + ": expected 'order <n>'");
  const int n = detail::parse_index(ord.tokens[1], ord.number);
  if (n == 0) throw Error("group order must be positive");
  if (expect(2, "table").tokens.size() != 1)
    throw Error("line " + std::to_string(lines[2].number) + ": expected 'table'");
  if (lines.size() != static_cast<std::size_t>(3 + n)) {
    throw Error("expected " + std::to_string(n) + " table rows, got " +
                std::to_string(lines.size() - 3));
  }
  std::vector<std::vector<int>> table;
  for (int i = 0; i < n; ++i) {
    const auto& row = lines[3 + i];
    if (static_cast<int>(row.tokens.size()) != n) {
      throw Error("line " + std::to_string(row.number) + ": expected " +
                  std::to_string(n) + " entries, got " +
                  std::to_string(row.tokens.size()));
    }
    std::vector<int> r;
    for (const auto& t : row.tokens) r.push_back(detail::parse_index(t, row.number));
    table.push_back(std::move(r));
  }
  return FiniteGroup::from_table(head.tokens[1], table);
}

inline std::string serialize_group(const FiniteGroup& g) {
  std::string out = "group " + g.name() + "\norder " +
                    std::to_string(g.order()) + "\ntable\n";
  for (int i = 0; i < g.order(); ++i) {
    for (int j = 0; j < g.order(); ++j) {
      if (j) out += ' ';
      out += std::to_string(g.mul(i, j));
    }
    out += '\n';
  }
  return out;
}

/// One member per line; validated against `g`.
inline CayleyHyperset load_hyperset(const FiniteGroup& g, std::string_view text) {
  std::vector<Subset> raw;
  for (const auto& line : detail::tokenize(text)) {
    Subset m;
    for (const auto& t : line.tokens) m.push_back(detail::parse_index(t, line.number));
    raw.push_back(std::move(m));
  }
  return validate_hyperset(g, std::move(raw));
}

inline std::string serialize_hyperset(const CayleyHyperset& x) {
  std::string out;
  for (const auto& m : x.members()) out += detail::join(m) + '\n';
  return out;
}

/// `dihypergraph <n>` then `arc <v> : <edge>` per arc, sorted by vertex then
/// edge.
inline std::string dump_dihypergraph(const Dihypergraph& h) {
  std::string out = "dihypergraph " + std::to_string(h.vertex_count()) + '\n';
  for (const auto& a : h.arcs())
    out += "arc " + std::to_string(a.vertex) + " : " + detail::join(a.edge) + '\n';
  return out;
}

inline Dihypergraph load_dihypergraph(std::string_view text) {
  const auto lines = detail::tokenize(text);
  if (lines.empty() || lines[0].tokens[0] != "dihypergraph" ||
      lines[0].tokens.size() != 2)
    throw Error("expected 'dihypergraph <n>' header");
  const int n = detail::parse_index(lines[0].tokens[1], lines[0].number);
  std::vector<Arc> arcs;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& t = lines[i].tokens;
    if (t.size() < 4 || t[0] != "arc" || t[2] != ":") {
      throw Error("line " + std::to_string(lines[i].number) +
                  ": expected 'arc <v> : <edge indices>'");
    }
    Arc a{detail::parse_index(t[1], lines[i].number), {}};
    for (std::size_t k = 3; k < t.size(); ++k)
      a.edge.push_back(detail::parse_index(t[k], lines[i].number));
    arcs.push_back(std::move(a));
  }
  return Dihypergraph(n, std::move(arcs));
}

/// One `perm 0->a 1->b ...` line per element, in sorted element order.
inline std::string dump_perm_group(const PermGroup& p) {
  std::string out;
  for (const auto& x : p.elements()) {
    out += "perm";
    for (int v = 0; v < x.degree(); ++v)
      out += ' ' + std::to_string(v) + "->" + std::to_string(x(v));
    out += '\n';
  }
  return out;
}

}  // namespace cayley
