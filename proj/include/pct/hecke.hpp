#pragma once

/**
 * @file hecke.hpp
 * @brief 0-Hecke operators pi_i on standard PCTs, the column-word
 * equivalence relation, and source/sink tableaux.
 */

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "pct/error.hpp"
#include "pct/tableau.hpp"

namespace pct {

enum class DescentKind { not_descent, attacking, nonattacking };

/// Whether i is a descent of t and, if so, whether i and i+1 attack.
inline DescentKind classify(const Tableau& t, int i) {
  if (i < 1 || i >= t.size()) throw std::out_of_range("descent index out of range");
  const auto pos = positions(t);
  const Cell a = pos[i];
  const Cell b = pos[i + 1];
  if (b.col < a.col) return DescentKind::not_descent;
  if (b.col == a.col) return DescentKind::attacking;
  if (b.col == a.col + 1 && b.row > a.row) return DescentKind::attacking;
  return DescentKind::nonattacking;
}

/// Outcome of pi_i: the tableau is fixed, sent to zero, or moved to s_i(t).
struct HeckeResult {
  struct Fixed {};
  struct Zero {};
  std::variant<Fixed, Zero, Tableau> outcome;

  bool fixed() const { return std::holds_alternative<Fixed>(outcome); }
  bool zero() const { return std::holds_alternative<Zero>(outcome); }
  bool moved() const { return std::holds_alternative<Tableau>(outcome); }
  const Tableau& tableau() const { return std::get<Tableau>(outcome); }
};

inline HeckeResult pi(const Tableau& t, int i) {
  switch (classify(t, i)) {
    case DescentKind::not_descent:
      return {HeckeResult::Fixed{}};
    case DescentKind::attacking:
      return {HeckeResult::Zero{}};
    case DescentKind::nonattacking:
      break;
  }
  Tableau moved = t.swap_values(i);
  const PctCheck check = validate_pct(moved);
  if (!check.valid()) throw internal_error("pi_" + std::to_string(i) + " left SPCT: " + describe(check));
  return {std::move(moved)};
}

/// The action on "tableau or zero": nullopt stands for 0 and absorbs.
using HeckeValue = std::optional<Tableau>;

inline HeckeValue apply_pi(const HeckeValue& v, int i) {
  if (!v) return std::nullopt;
  HeckeResult r = pi(*v, i);
  if (r.zero()) return std::nullopt;
  if (r.fixed()) return v;
  return r.tableau();
}

inline HeckeValue apply_word(HeckeValue v, const std::vector<int>& word) {
  // Rightmost operator acts first.
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = apply_pi(v, *it);
  return v;
}

struct HeckeCounterexample {
  Tableau tableau;
  std::vector<int> lhs;
  std::vector<int> rhs;
};

struct HeckeReport {
  bool pass = true;
  std::uint64_t tableaux = 0;
  std::uint64_t checks = 0;
  std::optional<HeckeCounterexample> counterexample;
};

/// Checks pi_i^2 = pi_i, commutation for |i-j| >= 2 and the braid relation
/// pointwise on every SPCT of the shape.
inline HeckeReport verify_hecke_relations(const Composition& shape) {
  HeckeReport report;
  const int n = shape.size();
  auto check = [&](const Tableau& t, const std::vector<int>& lhs, const std::vector<int>& rhs) {
    ++report.checks;
    if (report.pass && apply_word(t, lhs) != apply_word(t, rhs)) {
      report.pass = false;
      report.counterexample = HeckeCounterexample{t, lhs, rhs};
    }
  };
  for_each_spct(shape, [&](const Tableau& t) {
    ++report.tableaux;
    for (int i = 1; i < n; ++i) {
      check(t, {i, i}, {i});
      for (int j = i + 2; j < n; ++j) check(t, {i, j}, {j, i});
      if (i + 1 < n) check(t, {i, i + 1, i}, {i + 1, i, i + 1});
    }
  });
  return report;
}

/// Every non-descent i < n has i+1 immediately to the left of i.
inline bool is_source(const Tableau& t) {
  const auto pos = positions(t);
  for (int i = 1; i < t.size(); ++i) {
    if (pos[i + 1].col >= pos[i].col) continue;
    if (pos[i + 1].row != pos[i].row || pos[i + 1].col != pos[i].col - 1) return false;
  }
  return true;
}

/// Every descent is attacking.
inline bool is_sink(const Tableau& t) {
  for (int i = 1; i < t.size(); ++i)
    if (classify(t, i) == DescentKind::nonattacking) return false;
  return true;
}

struct EquivalenceClass {
  std::vector<Permutation> signature;  // st(t) shared by all members
  std::vector<Tableau> members;        // enumeration order
  std::vector<Tableau> sources;
  std::vector<Tableau> sinks;
  bool closed_under_pi = true;  // every Moved result stays in the class
  bool connected = true;        // Moved-transitions connect the class (undirected)
};

/// Partitions SPCT(shape) by standardized column word, ordered by signature.
inline std::vector<EquivalenceClass> equivalence_classes(const Composition& shape) {
  std::map<std::vector<Permutation>, EquivalenceClass> by_key;
  for_each_spct(shape, [&](const Tableau& t) {
    auto key = st(t);
    auto& cls = by_key[key];
    if (cls.members.empty()) cls.signature = key;
    cls.members.push_back(t);
    if (is_source(t)) cls.sources.push_back(t);
    if (is_sink(t)) cls.sinks.push_back(t);
  });

  const int n = shape.size();
  std::vector<EquivalenceClass> out;
  for (auto& [key, cls] : by_key) {
    std::map<Tableau, int> index;
    for (std::size_t m = 0; m < cls.members.size(); ++m) index.emplace(cls.members[m], static_cast<int>(m));
    std::vector<int> parent(cls.members.size());
    for (std::size_t m = 0; m < parent.size(); ++m) parent[m] = static_cast<int>(m);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t m = 0; m < cls.members.size(); ++m) {
      for (int i = 1; i < n; ++i) {
        HeckeResult r = pi(cls.members[m], i);
        if (!r.moved()) continue;
        auto it = index.find(r.tableau());
        if (it == index.end()) {
          cls.closed_under_pi = false;
          continue;
        }
        parent[find(static_cast<int>(m))] = find(it->second);
      }
    }
    std::set<int> roots;
    for (std::size_t m = 0; m < parent.size(); ++m) roots.insert(find(static_cast<int>(m)));
    cls.connected = roots.size() == 1;
    out.push_back(std::move(cls));
  }
  return out;
}

}  // namespace pct
