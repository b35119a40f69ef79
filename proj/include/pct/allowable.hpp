#pragma once

// Allowable pairs of permutations, the graph G(s_1, ..., s_k) and its
// topological labelings, which are standard permuted composition tableaux
// of rectangular shape (k^n).

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pct/core.hpp"
#include "pct/error.hpp"
#include "pct/tableau.hpp"

namespace pct {

inline bool is_2112_avoiding(const Permutation& a, const Permutation& b) {
  require_same_size(a, b);
  for (int i = 1; i <= a.size(); ++i)
    for (int j = i + 1; j <= a.size(); ++j)
      if (a(i) > a(j) && b(i) < b(j)) return false;
  return true;
}

inline bool is_123312_avoiding(const Permutation& a, const Permutation& b) {
  require_same_size(a, b);
  const int n = a.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (a(i) > a(j)) continue;
      for (int k = j + 1; k <= n; ++k) {
        if (a(j) > a(k)) continue;
        // b restricted to (i,j,k) standardizes to 312.
        if (b(j) < b(k) && b(k) < b(i)) return false;
      }
    }
  return true;
}

inline bool is_allowable_pair(const Permutation& a, const Permutation& b) {
  return is_2112_avoiding(a, b) && is_123312_avoiding(a, b);
}

inline bool is_allowable_sequence(const std::vector<Permutation>& seq) {
  for (std::size_t j = 1; j < seq.size(); ++j)
    if (!is_allowable_pair(seq[j - 1], seq[j])) return false;
  if (!seq.empty())
    for (const auto& p : seq) require_same_size(seq.front(), p);
  return true;
}

/// All allowable pairs in S_n, lexicographic in (a, b).
inline std::vector<std::pair<Permutation, Permutation>> allowable_pairs(int n) {
  const auto perms = all_permutations(n);
  std::vector<std::pair<Permutation, Permutation>> out;
  for (const auto& a : perms)
    for (const auto& b : perms)
      if (is_allowable_pair(a, b)) out.emplace_back(a, b);
  return out;
}

enum class EdgeKind { horizontal, vertical, diagonal };

inline const char* to_string(EdgeKind k) {
  switch (k) {
    case EdgeKind::horizontal: return "horizontal";
    case EdgeKind::vertical: return "vertical";
    case EdgeKind::diagonal: return "diagonal";
  }
  return "?";
}

struct GraphEdge {
  Cell from;
  Cell to;
  EdgeKind kind;
  auto operator<=>(const GraphEdge&) const = default;
};

/// Nodes are cells (row i, column j) with 1 <= i <= n, 1 <= j <= k.
struct PermGraph {
  int n = 0;
  int k = 0;
  std::vector<GraphEdge> edges;

  int node_count() const { return n * k; }
  int id(Cell c) const { return (c.col - 1) * n + (c.row - 1); }
  Cell cell(int id) const { return {id % n + 1, id / n + 1}; }

  std::size_t count(EdgeKind kind) const {
    return static_cast<std::size_t>(std::count_if(edges.begin(), edges.end(), [&](const GraphEdge& e) { return e.kind == kind; }));
  }
};

/// Builds the graph without checking allowability.
inline PermGraph build_graph_permissive(const std::vector<Permutation>& seq) {
  if (seq.size() < 2) throw std::invalid_argument("graph needs at least two columns");
  for (const auto& p : seq) require_same_size(seq.front(), p);
  PermGraph g;
  g.n = seq.front().size();
  g.k = static_cast<int>(seq.size());
  for (int j = 1; j <= g.k; ++j) {
    const Permutation& s = seq[static_cast<std::size_t>(j - 1)];
    for (int i = 1; i <= g.n; ++i) {
      if (j < g.k) g.edges.push_back({{i, j}, {i, j + 1}, EdgeKind::horizontal});
      for (int p = 1; p <= g.n; ++p) {
        if (p == i || s(i) >= s(p)) continue;
        g.edges.push_back({{p, j}, {i, j}, EdgeKind::vertical});
        if (j >= 2 && i < p) g.edges.push_back({{p, j}, {i, j - 1}, EdgeKind::diagonal});
      }
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

inline PermGraph build_graph(const std::vector<Permutation>& seq) {
  if (!is_allowable_sequence(seq)) throw std::invalid_argument("sequence is not allowable");
  return build_graph_permissive(seq);
}

inline bool is_acyclic(const PermGraph& g) {
  const int nodes = g.node_count();
  std::vector<int> indegree(static_cast<std::size_t>(nodes), 0);
  std::vector<std::vector<int>> out(static_cast<std::size_t>(nodes));
  for (const auto& e : g.edges) {
    out[g.id(e.from)].push_back(g.id(e.to));
    ++indegree[g.id(e.to)];
  }
  std::vector<int> ready;
  for (int v = 0; v < nodes; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  int removed = 0;
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    ++removed;
    for (int w : out[v])
      if (--indegree[w] == 0) ready.push_back(w);
  }
  return removed == nodes;
}

/// Canonical labeling: repeatedly take the smallest (column, row) among
/// unlabeled nodes whose out-neighbours are all labeled, and give it the
/// smallest unused label. Edges then point from larger to smaller labels.
inline Tableau topological_spct(const PermGraph& g) {
  const int nodes = g.node_count();
  std::vector<int> pending(static_cast<std::size_t>(nodes), 0);  // unlabeled out-neighbours
  std::vector<std::vector<int>> in(static_cast<std::size_t>(nodes));
  for (const auto& e : g.edges) {
    ++pending[g.id(e.from)];
    in[g.id(e.to)].push_back(g.id(e.from));
  }
  std::vector<int> label(static_cast<std::size_t>(nodes), 0);
  // Node ids already increase with (column, row), so the smallest id wins.
  for (int next = 1; next <= nodes; ++next) {
    int pick = -1;
    for (int v = 0; v < nodes; ++v) {
      if (label[v] == 0 && pending[v] == 0) {
        pick = v;
        break;
      }
    }
    if (pick < 0) throw std::invalid_argument("graph has a cycle");
    label[pick] = next;
    for (int u : in[pick]) --pending[u];
  }
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(g.n), std::vector<int>(static_cast<std::size_t>(g.k)));
  for (int v = 0; v < nodes; ++v) {
    const Cell c = g.cell(v);
    rows[c.row - 1][c.col - 1] = label[v];
  }
  return Tableau(Composition::rectangle(g.k, g.n), std::move(rows));
}

/// Checks that t is a valid SPCT of shape (k^n) with st_j(t) = seq_j for every j.
inline bool realizes(const Tableau& t, const std::vector<Permutation>& seq) {
  if (!validate_pct(t).valid()) return false;
  if (t.num_cols() != static_cast<int>(seq.size())) return false;
  for (std::size_t j = 0; j < seq.size(); ++j)
    if (st(t, static_cast<int>(j) + 1) != seq[j]) return false;
  return true;
}

/// The allowable sequence (identity, ..., a, b) built from the maximal chain to a.
inline std::vector<Permutation> chain_sequence(const Permutation& a, const Permutation& b) {
  std::vector<Permutation> seq = maximal_chain_to(a);
  seq.push_back(b);
  return seq;
}

/// A standard composition tableau (type identity) whose last two
/// standardized columns are a and b.
inline Tableau realize_sct(const Permutation& a, const Permutation& b) {
  require_same_size(a, b);
  if (!is_allowable_pair(a, b)) throw std::invalid_argument("pair is not allowable");
  const auto seq = chain_sequence(a, b);
  const PermGraph g = build_graph(seq);
  if (!is_acyclic(g)) throw internal_error("graph of an allowable sequence has a cycle");
  Tableau t = topological_spct(g);
  const PctCheck check = validate_pct(t);
  if (!check.valid()) throw internal_error("topological labeling is not a PCT: " + describe(check));
  const int k = t.num_cols();
  if (st(t, k - 1) != a || st(t, k) != b || !st(t, 1).is_identity())
    throw internal_error("topological labeling does not reproduce the pair");
  return t;
}

}  // namespace pct
