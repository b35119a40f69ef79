#pragma once

/**
 * @file dyck.hpp
 * @brief Dyck paths, labeled Dyck paths and the labeled Dyck word.
 *
 * A labeled Dyck path stores labels on its down-steps only. Up-step labels
 * are derived on demand by labeled_dyck_word(): scanning up-steps from right
 * to left, each receives the smallest down-step label to its right that no
 * up-step to its right has taken yet.
 *
 * Also hosts the bijection between standard PCTs of shape (2^n) and labeled
 * Dyck paths of semi-length n, and the folklore map SRT((2^n)) -> Dyck paths.
 */

#include <algorithm>
#include <compare>
#include <numeric>
#include <set>
#include <type_traits>
#include <stdexcept>
#include <string>
#include <vector>

#include "pct/error.hpp"
#include "pct/tableau.hpp"

namespace pct {

enum class StepKind { up, down };

class DyckPath {
 public:
  DyckPath() = default;
  explicit DyckPath(std::vector<StepKind> steps) : steps_(std::move(steps)) {
    int height = 0;
    for (StepKind s : steps_) {
      height += s == StepKind::up ? 1 : -1;
      if (height < 0) throw std::invalid_argument("Dyck path dips below the axis");
    }
    if (height != 0) throw std::invalid_argument("Dyck path does not return to the axis");
  }

  const std::vector<StepKind>& steps() const { return steps_; }
  int semi_length() const { return static_cast<int>(steps_.size()) / 2; }
  auto operator<=>(const DyckPath&) const = default;

 private:
  std::vector<StepKind> steps_;
};

/// A step of a labeled Dyck path: an up-step (label 0) or a labeled down-step.
struct LabeledStep {
  StepKind kind = StepKind::up;
  int label = 0;
  static LabeledStep up() { return {StepKind::up, 0}; }
  static LabeledStep down(int label) { return {StepKind::down, label}; }
  auto operator<=>(const LabeledStep&) const = default;
};

class LabeledDyckPath {
 public:
  LabeledDyckPath() = default;

  /// `labels_must_cover` = false allows factors whose labels are a subset of [n].
  explicit LabeledDyckPath(std::vector<LabeledStep> steps, bool labels_must_cover = true) : steps_(std::move(steps)) {
    std::vector<StepKind> kinds;
    std::set<int> labels;
    for (const auto& s : steps_) {
      kinds.push_back(s.kind);
      if (s.kind == StepKind::up) {
        if (s.label != 0) throw std::invalid_argument("up-steps carry no stored label");
      } else if (s.label < 1 || !labels.insert(s.label).second) {
        throw std::invalid_argument("down-step labels must be distinct positive integers");
      }
    }
    DyckPath check(std::move(kinds));
    if (labels_must_cover && !labels.empty() && (*labels.rbegin() != semi_length()))
      throw std::invalid_argument("down-step labels must form a permutation of [n]");
  }

  const std::vector<LabeledStep>& steps() const { return steps_; }
  int semi_length() const { return static_cast<int>(steps_.size()) / 2; }

  DyckPath unlabeled() const {
    std::vector<StepKind> kinds;
    for (const auto& s : steps_) kinds.push_back(s.kind);
    return DyckPath(std::move(kinds));
  }

  /// Down-step labels from left to right.
  std::vector<int> down_labels() const {
    std::vector<int> out;
    for (const auto& s : steps_)
      if (s.kind == StepKind::down) out.push_back(s.label);
    return out;
  }

  auto operator<=>(const LabeledDyckPath&) const = default;

 private:
  std::vector<LabeledStep> steps_;
};

/// A letter U_k or D_k of a fully labeled Dyck word.
struct LabeledLetter {
  StepKind kind;
  int label;
  auto operator<=>(const LabeledLetter&) const = default;
};

using LabeledDyckWord = std::vector<LabeledLetter>;

namespace detail {
template <class Step>
bool is_up(const Step& s) {
  if constexpr (std::is_same_v<Step, StepKind>) {
    return s == StepKind::up;
  } else {
    return s.kind == StepKind::up;
  }
}
}  // namespace detail

/// Splits at every return to the axis. Concatenating the factors gives d back.
inline std::vector<DyckPath> prime_factors(const DyckPath& d) {
  std::vector<DyckPath> out;
  std::vector<StepKind> cur;
  int height = 0;
  for (StepKind s : d.steps()) {
    cur.push_back(s);
    height += detail::is_up(s) ? 1 : -1;
    if (height == 0) {
      out.emplace_back(std::move(cur));
      cur.clear();
    }
  }
  return out;
}

inline std::vector<LabeledDyckPath> prime_factors(const LabeledDyckPath& d) {
  std::vector<LabeledDyckPath> out;
  std::vector<LabeledStep> cur;
  int height = 0;
  for (const auto& s : d.steps()) {
    cur.push_back(s);
    height += detail::is_up(s) ? 1 : -1;
    if (height == 0) {
      out.emplace_back(std::move(cur), false);
      cur.clear();
    }
  }
  return out;
}

/// Maximal block of consecutive down-steps.
struct Run {
  std::vector<int> labels;  // left to right
  int last_step = 0;        // 0-based index of the run's rightmost step
};

/// Runs of d ordered right to left, i.e. the run sequence (R_1, ..., R_m).
inline std::vector<Run> runs(const LabeledDyckPath& d) {
  std::vector<Run> out;
  const auto& steps = d.steps();
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i].kind != StepKind::down) continue;
    if (i > 0 && steps[i - 1].kind == StepKind::down) {
      out.back().labels.push_back(steps[i].label);
      out.back().last_step = static_cast<int>(i);
    } else {
      out.push_back({{steps[i].label}, static_cast<int>(i)});
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

/// Labels of the up-steps, in left-to-right order.
inline std::vector<int> up_step_labels(const LabeledDyckPath& d) {
  const auto& steps = d.steps();
  std::vector<int> labels;
  std::set<int> down_after;  // D_i: down-step labels right of the current up-step
  std::set<int> up_after;    // U_i: up-step labels right of the current up-step
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    if (it->kind == StepKind::down) {
      down_after.insert(it->label);
      continue;
    }
    int chosen = 0;
    for (int l : down_after) {
      if (!up_after.count(l)) {
        chosen = l;
        break;
      }
    }
    if (chosen == 0) throw internal_error("labeled Dyck word: no label available for an up-step");
    up_after.insert(chosen);
    labels.push_back(chosen);
  }
  std::reverse(labels.begin(), labels.end());
  return labels;
}

inline LabeledDyckWord labeled_dyck_word(const LabeledDyckPath& d) {
  const auto ups = up_step_labels(d);
  LabeledDyckWord word;
  std::size_t u = 0;
  for (const auto& s : d.steps()) {
    if (s.kind == StepKind::up) {
      word.push_back({StepKind::up, ups[u++]});
    } else {
      word.push_back({StepKind::down, s.label});
    }
  }
  return word;
}

/// Recovers the path from a fully labeled word by dropping up-step labels.
/// Throws if the word is not the labeled Dyck word of that path.
inline LabeledDyckPath path_of_word(const LabeledDyckWord& word) {
  std::vector<LabeledStep> steps;
  for (const auto& l : word) steps.push_back(l.kind == StepKind::up ? LabeledStep::up() : LabeledStep::down(l.label));
  LabeledDyckPath d(std::move(steps));
  if (labeled_dyck_word(d) != word) throw std::invalid_argument("word is not a labeled Dyck word");
  return d;
}

/// Step i is an up-step when i sits in column 2, otherwise a down-step
/// labeled by the row of i.
inline LabeledDyckPath spct_to_ldyck(const Tableau& t) {
  for (int p : t.shape().parts())
    if (p != 2) throw std::invalid_argument("spct_to_ldyck requires shape (2^n)");
  const auto pos = positions(t);
  std::vector<LabeledStep> steps;
  for (int i = 1; i <= t.size(); ++i)
    steps.push_back(pos[i].col == 2 ? LabeledStep::up() : LabeledStep::down(pos[i].row));
  return LabeledDyckPath(std::move(steps));
}

/// Inverse: row i holds the positions of D_i and U_i in the labeled word.
inline Tableau ldyck_to_spct(const LabeledDyckPath& d) {
  const int n = d.semi_length();
  const auto word = labeled_dyck_word(d);
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n), std::vector<int>(2, 0));
  for (std::size_t p = 0; p < word.size(); ++p) {
    const auto& l = word[p];
    rows[l.label - 1][l.kind == StepKind::down ? 0 : 1] = static_cast<int>(p) + 1;
  }
  Tableau t(Composition::rectangle(2, n), std::move(rows));
  const PctCheck check = validate_pct(t);
  if (!check.valid()) throw internal_error("ldyck_to_spct produced an invalid filling: " + describe(check));
  return t;
}

/// Folklore bijection: step i is an up-step iff i is in the second column.
inline DyckPath srt_to_dyck(const ReverseTableau& rt) {
  for (int p : rt.shape().parts())
    if (p != 2) throw std::invalid_argument("srt_to_dyck requires shape (2^n)");
  const auto pos = positions(rt.filling());
  std::vector<StepKind> steps;
  for (int i = 1; i <= rt.size(); ++i) steps.push_back(pos[i].col == 2 ? StepKind::up : StepKind::down);
  return DyckPath(std::move(steps));
}

/// All Dyck paths of semi-length n, lexicographic with U < D.
inline std::vector<DyckPath> enumerate_dyck(int n) {
  std::vector<DyckPath> out;
  std::vector<StepKind> cur;
  auto rec = [&](auto&& self, int ups, int downs) -> void {
    if (ups == n && downs == n) {
      out.emplace_back(cur);
      return;
    }
    if (ups < n) {
      cur.push_back(StepKind::up);
      self(self, ups + 1, downs);
      cur.pop_back();
    }
    if (downs < ups) {
      cur.push_back(StepKind::down);
      self(self, ups, downs + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

/// Visits all n! Cat_n labeled Dyck paths: each unlabeled path, then every
/// labeling of its down-steps in lexicographic order.
template <class Visitor>
void for_each_ldyck(int n, Visitor&& visit) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  for (const DyckPath& d : enumerate_dyck(n)) {
    std::vector<int> labels(static_cast<std::size_t>(n));
    std::iota(labels.begin(), labels.end(), 1);
    do {
      std::vector<LabeledStep> steps;
      std::size_t k = 0;
      for (StepKind s : d.steps()) steps.push_back(s == StepKind::up ? LabeledStep::up() : LabeledStep::down(labels[k++]));
      visit(LabeledDyckPath(std::move(steps)));
    } while (std::next_permutation(labels.begin(), labels.end()));
  }
}

inline std::vector<LabeledDyckPath> enumerate_ldyck(int n) {
  std::vector<LabeledDyckPath> out;
  for_each_ldyck(n, [&](const LabeledDyckPath& d) { out.push_back(d); });
  return out;
}

}  // namespace pct
