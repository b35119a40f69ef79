#pragma once

/**
 * @file tableau.hpp
 * @brief Permuted composition tableaux (PCT) and reverse tableaux (RT).
 *
 * Cells are addressed (row, column), both 1-indexed, rows counted from the
 * top. A Tableau only guarantees that row lengths match its shape; whether
 * the filling is a PCT is decided by validate_pct().
 *
 * Triple condition: for rows i < k and a column j such that cells (i, j)
 * and (k, j+1) exist, with a = T(i, j), b = T(i, j+1), c = T(k, j+1),
 * a >= c must imply b > c. When row i is too short to hold b it is read as
 * 0, i.e. the filling is supplemented by zeros on the right.
 */

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pct/core.hpp"
#include "pct/error.hpp"

namespace pct {

struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

inline std::string to_string(const Cell& c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

class Tableau {
 public:
  Tableau() = default;

  Tableau(Composition shape, std::vector<std::vector<int>> rows) : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != shape_.length()) throw std::invalid_argument("row count does not match shape");
    for (int r = 1; r <= shape_.length(); ++r) {
      if (static_cast<int>(rows_[r - 1].size()) != shape_.part(r)) {
        throw std::invalid_argument("row " + std::to_string(r) + " length does not match shape");
      }
    }
  }

  /// Shape inferred from the row lengths.
  explicit Tableau(std::vector<std::vector<int>> rows) : Tableau(shape_of(rows), rows) {}

  const Composition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int size() const { return shape_.size(); }
  int num_rows() const { return shape_.length(); }
  int num_cols() const { return shape_.max_part(); }

  bool has_cell(int row, int col) const {
    return row >= 1 && row <= num_rows() && col >= 1 && col <= shape_.part(row);
  }
  int at(int row, int col) const { return rows_[row - 1][col - 1]; }
  int at(Cell c) const { return at(c.row, c.col); }

  /// Entry of the zero-supplemented filling.
  int at_or_zero(int row, int col) const { return has_cell(row, col) ? at(row, col) : 0; }

  /// i-th column word, read top to bottom over the rows that reach column i.
  std::vector<int> column_word(int col) const {
    if (col < 1 || col > num_cols()) throw std::out_of_range("column index out of range");
    std::vector<int> w;
    for (int r = 1; r <= num_rows(); ++r)
      if (has_cell(r, col)) w.push_back(at(r, col));
    return w;
  }

  /// Filling with the entries v and v+1 interchanged.
  Tableau swap_values(int v) const {
    Tableau t = *this;
    for (auto& row : t.rows_)
      for (int& x : row) {
        if (x == v) {
          x = v + 1;
        } else if (x == v + 1) {
          x = v;
        }
      }
    return t;
  }

  auto operator<=>(const Tableau&) const = default;

 private:
  static Composition shape_of(const std::vector<std::vector<int>>& rows) {
    std::vector<int> parts;
    for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
    return Composition(std::move(parts));
  }

  Composition shape_;
  std::vector<std::vector<int>> rows_;
};

/// Partition-shaped filling whose rows weakly decrease and whose columns
/// strictly decrease, with entries in [1, |shape|]. Checked on construction.
class ReverseTableau {
 public:
  ReverseTableau() = default;

  ReverseTableau(Composition shape, std::vector<std::vector<int>> rows) : filling_(std::move(shape), std::move(rows)) {
    const Composition& s = filling_.shape();
    if (!s.is_partition()) throw std::invalid_argument("reverse tableau shape must be a partition");
    const int n = s.size();
    for (int r = 1; r <= filling_.num_rows(); ++r) {
      for (int c = 1; c <= s.part(r); ++c) {
        const int v = filling_.at(r, c);
        if (v < 1 || v > n) throw std::invalid_argument("reverse tableau entry out of range at " + to_string(Cell{r, c}));
        if (c > 1 && filling_.at(r, c - 1) < v)
          throw std::invalid_argument("reverse tableau row increases at " + to_string(Cell{r, c}));
        if (r > 1 && filling_.at(r - 1, c) <= v)
          throw std::invalid_argument("reverse tableau column does not strictly decrease at " + to_string(Cell{r, c}));
      }
    }
  }

  explicit ReverseTableau(std::vector<std::vector<int>> rows)
      : ReverseTableau(Tableau(rows).shape(), rows) {}

  const Composition& shape() const { return filling_.shape(); }
  const std::vector<std::vector<int>>& rows() const { return filling_.rows(); }
  const Tableau& filling() const { return filling_; }
  int size() const { return filling_.size(); }

  auto operator<=>(const ReverseTableau&) const = default;

 private:
  Tableau filling_;
};

// ---------------------------------------------------------------------------
// Validation

struct Violation {
  enum class Kind { non_positive_entry, repeated_first_column, row_increase, triple };
  Kind kind;
  std::vector<Cell> cells;
  std::string message;
};

struct PctCheck {
  std::optional<Permutation> type;
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

namespace detail {

/// Triple condition for the configuration at rows i < k, column j.
/// Cells (i, j) and (k, j+1) must exist.
inline bool triple_holds(const Tableau& t, int i, int k, int j) {
  const int a = t.at(i, j);
  const int b = t.at_or_zero(i, j + 1);
  const int c = t.at(k, j + 1);
  return !(a >= c) || b > c;
}

}  // namespace detail

/// Checks the three PCT conditions; on success reports the type, i.e. the
/// standardization of the first column word.
inline PctCheck validate_pct(const Tableau& t) {
  PctCheck out;
  for (int r = 1; r <= t.num_rows(); ++r)
    for (int c = 1; c <= t.shape().part(r); ++c)
      if (t.at(r, c) < 1)
        out.violations.push_back({Violation::Kind::non_positive_entry, {{r, c}}, "entry at " + to_string(Cell{r, c}) + " is not positive"});

  for (int r1 = 1; r1 <= t.num_rows(); ++r1)
    for (int r2 = r1 + 1; r2 <= t.num_rows(); ++r2)
      if (t.at(r1, 1) == t.at(r2, 1))
        out.violations.push_back({Violation::Kind::repeated_first_column,
                                  {{r1, 1}, {r2, 1}},
                                  "first column repeats " + std::to_string(t.at(r1, 1)) + " at " + to_string(Cell{r1, 1}) + " and " +
                                      to_string(Cell{r2, 1})});

  for (int r = 1; r <= t.num_rows(); ++r)
    for (int c = 2; c <= t.shape().part(r); ++c)
      if (t.at(r, c) > t.at(r, c - 1))
        out.violations.push_back({Violation::Kind::row_increase, {{r, c - 1}, {r, c}}, "row increases at " + to_string(Cell{r, c})});

  for (int j = 1; j < t.num_cols(); ++j)
    for (int i = 1; i <= t.num_rows(); ++i) {
      if (!t.has_cell(i, j)) continue;
      for (int k = i + 1; k <= t.num_rows(); ++k) {
        if (!t.has_cell(k, j + 1) || detail::triple_holds(t, i, k, j)) continue;
        std::ostringstream msg;
        msg << "triple condition fails: a=" << t.at(i, j) << " at " << to_string({i, j}) << ", b=" << t.at_or_zero(i, j + 1) << " at "
            << to_string({i, j + 1}) << ", c=" << t.at(k, j + 1) << " at " << to_string({k, j + 1});
        out.violations.push_back({Violation::Kind::triple, {{i, j}, {i, j + 1}, {k, j + 1}}, msg.str()});
      }
    }

  if (out.valid() && t.num_rows() > 0) out.type = standardize(t.column_word(1));
  return out;
}

inline std::string describe(const PctCheck& check) {
  std::string s;
  for (const auto& v : check.violations) {
    if (!s.empty()) s += "; ";
    s += v.message;
  }
  return s;
}

inline void require_valid_pct(const Tableau& t) {
  const PctCheck check = validate_pct(t);
  if (!check.valid()) throw std::invalid_argument("not a permuted composition tableau: " + describe(check));
}

/// Entries are exactly {1, ..., |shape|}.
inline bool is_standard(const Tableau& t) {
  const int n = t.size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (const auto& row : t.rows())
    for (int v : row) {
      if (v < 1 || v > n || seen[v]) return false;
      seen[v] = true;
    }
  return true;
}

inline Permutation st(const Tableau& t, int col) { return standardize(t.column_word(col)); }

/// st_1(t) st_2(t) ... st_max(t).
inline std::vector<Permutation> st(const Tableau& t) {
  std::vector<Permutation> out;
  for (int c = 1; c <= t.num_cols(); ++c) out.push_back(st(t, c));
  return out;
}

/// Cell of each value in a standard tableau, indexed by value (slot 0 unused).
inline std::vector<Cell> positions(const Tableau& t) {
  if (!is_standard(t)) throw std::invalid_argument("tableau is not standard");
  std::vector<Cell> pos(static_cast<std::size_t>(t.size()) + 1);
  for (int r = 1; r <= t.num_rows(); ++r)
    for (int c = 1; c <= t.shape().part(r); ++c) pos[t.at(r, c)] = {r, c};
  return pos;
}

/// i in [n-1] such that i+1 lies weakly right of i.
inline std::vector<int> descent_set(const Tableau& t) {
  const auto pos = positions(t);
  std::vector<int> des;
  for (int i = 1; i < t.size(); ++i)
    if (pos[i + 1].col >= pos[i].col) des.push_back(i);
  return des;
}

struct DescentQuadruple {
  int north = 0;       // i+1 in the first column, above i
  int south = 0;       // i+1 in the first column, below i
  int north_east = 0;  // i+1 in the second column, above i
  int south_east = 0;  // i+1 in the second column, below i
  auto operator<=>(const DescentQuadruple&) const = default;
};

/// Refined first-column descents of a standard tableau of shape (2^n).
inline DescentQuadruple descent_quadruple(const Tableau& t) {
  for (int p : t.shape().parts())
    if (p != 2) throw std::invalid_argument("descent_quadruple requires shape (2^n)");
  const auto pos = positions(t);
  DescentQuadruple q;
  for (int i = 1; i < t.size(); ++i) {
    if (pos[i].col != 1) continue;
    const Cell next = pos[i + 1];
    const bool above = next.row < pos[i].row;
    if (next.col == 1) {
      (above ? q.north : q.south) += 1;
    } else {
      (above ? q.north_east : q.south_east) += 1;
    }
  }
  return q;
}

// ---------------------------------------------------------------------------
// PCT <-> RT

/// Sorts each column decreasingly into the Young diagram of the sorted shape.
inline ReverseTableau pct_to_rt(const Tableau& t) {
  require_valid_pct(t);
  const Composition lambda = to_partition(t.shape());
  std::vector<std::vector<int>> rows;
  for (int p : lambda.parts()) rows.emplace_back(static_cast<std::size_t>(p));
  for (int c = 1; c <= t.num_cols(); ++c) {
    std::vector<int> col = t.column_word(c);
    std::sort(col.begin(), col.end(), std::greater<>());
    for (std::size_t r = 0; r < col.size(); ++r) rows[r][c - 1] = col[r];
  }
  return ReverseTableau(lambda, std::move(rows));
}

/// Inverse of pct_to_rt for type sigma. The first column of T is arranged so
/// that it standardizes to sigma; every later column is inserted in
/// decreasing order, each entry into the topmost row whose previous cell is
/// filled, whose own cell is still empty, and whose row stays weakly
/// decreasing.
inline Tableau rt_to_pct(const ReverseTableau& rt, const Permutation& sigma) {
  const Composition& lambda = rt.shape();
  const int rows_n = lambda.length();
  if (sigma.size() != rows_n) throw std::invalid_argument("type length must equal the number of rows");
  if (rows_n == 0) return Tableau{};

  std::vector<std::vector<int>> rows(static_cast<std::size_t>(rows_n));
  std::vector<int> first = rt.filling().column_word(1);
  std::sort(first.begin(), first.end());
  for (int r = 1; r <= rows_n; ++r) rows[r - 1].push_back(first[sigma(r) - 1]);

  for (int c = 2; c <= lambda.max_part(); ++c) {
    std::vector<int> col = rt.filling().column_word(c);
    std::sort(col.begin(), col.end(), std::greater<>());
    for (int v : col) {
      bool placed = false;
      for (auto& row : rows) {
        if (static_cast<int>(row.size()) == c - 1 && row.back() >= v) {
          row.push_back(v);
          placed = true;
          break;
        }
      }
      if (!placed) throw internal_error("rt_to_pct: no row accepts entry " + std::to_string(v) + " in column " + std::to_string(c));
    }
  }

  Tableau out(std::move(rows));
  const PctCheck check = validate_pct(out);
  if (!check.valid()) throw internal_error("rt_to_pct produced an invalid filling: " + describe(check));
  if (*check.type != sigma) throw internal_error("rt_to_pct produced the wrong type");
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace detail {

class SpctSearch {
 public:
  SpctSearch(const Composition& shape, const Permutation* sigma) : shape_(shape), sigma_(sigma), n_(shape.size()) {
    for (int p : shape.parts()) rows_.emplace_back(static_cast<std::size_t>(p), 0);
    len_.assign(static_cast<std::size_t>(shape.length()), 0);
  }

  template <class Visitor>
  void run(Visitor& visit) {
    place(n_, 0, visit);
  }

 private:
  bool filled(int r, int c) const { return c <= len_[r - 1]; }
  bool in_shape(int r, int c) const { return r >= 1 && r <= shape_.length() && c >= 1 && c <= shape_.part(r); }
  int val(int r, int c) const { return rows_[r - 1][c - 1]; }

  /// Triple configuration (i, k, j), checked only once all its cells are known.
  bool config_ok(int i, int k, int j) const {
    if (!in_shape(i, j) || !in_shape(k, j + 1)) return true;
    if (!filled(i, j) || !filled(k, j + 1)) return true;
    int b = 0;
    if (in_shape(i, j + 1)) {
      if (!filled(i, j + 1)) return true;
      b = val(i, j + 1);
    }
    const int a = val(i, j);
    const int c = val(k, j + 1);
    return !(a >= c) || b > c;
  }

  bool consistent_at(int r, int c) const {
    const int rows_n = shape_.length();
    for (int k = r + 1; k <= rows_n; ++k)
      if (!config_ok(r, k, c)) return false;
    if (c >= 2) {
      for (int k = r + 1; k <= rows_n; ++k)
        if (!config_ok(r, k, c - 1)) return false;
      for (int i = 1; i < r; ++i)
        if (!config_ok(i, r, c - 1)) return false;
    }
    return true;
  }

  template <class Visitor>
  void place(int v, int first_col_placed, Visitor& visit) {
    if (v == 0) {
      visit(Tableau(shape_, rows_));
      return;
    }
    const int rows_n = shape_.length();
    for (int r = 1; r <= rows_n; ++r) {
      const int c = len_[r - 1] + 1;
      if (c > shape_.part(r)) continue;
      // First-column entries arrive largest first, so the f-th one placed
      // must sit in the row whose type value is rows_n - f.
      if (c == 1 && sigma_ != nullptr && (*sigma_)(r) != rows_n - first_col_placed) continue;
      rows_[r - 1][c - 1] = v;
      len_[r - 1] = c;
      if (consistent_at(r, c)) place(v - 1, first_col_placed + (c == 1 ? 1 : 0), visit);
      len_[r - 1] = c - 1;
      rows_[r - 1][c - 1] = 0;
    }
  }

  const Composition& shape_;
  const Permutation* sigma_;
  int n_;
  std::vector<std::vector<int>> rows_;
  std::vector<int> len_;
};

}  // namespace detail

/// Visits every standard PCT of the given shape exactly once.
template <class Visitor>
void for_each_spct(const Composition& shape, Visitor&& visit) {
  if (shape.empty()) throw std::invalid_argument("shape must be nonempty");
  detail::SpctSearch search(shape, nullptr);
  search.run(visit);
}

/// Visits every standard PCT of the given shape and type.
template <class Visitor>
void for_each_spct(const Composition& shape, const Permutation& sigma, Visitor&& visit) {
  if (shape.empty()) throw std::invalid_argument("shape must be nonempty");
  if (sigma.size() != shape.length()) throw std::invalid_argument("type length must equal the number of rows");
  detail::SpctSearch search(shape, &sigma);
  search.run(visit);
}

inline std::vector<Tableau> enumerate_spct(const Composition& shape) {
  std::vector<Tableau> out;
  for_each_spct(shape, [&](const Tableau& t) { out.push_back(t); });
  return out;
}

inline std::vector<Tableau> enumerate_spct(const Composition& shape, const Permutation& sigma) {
  std::vector<Tableau> out;
  for_each_spct(shape, sigma, [&](const Tableau& t) { out.push_back(t); });
  return out;
}

/// Visits every standard reverse tableau of partition shape lambda.
template <class Visitor>
void for_each_srt(const Composition& lambda, Visitor&& visit) {
  if (lambda.empty()) throw std::invalid_argument("shape must be nonempty");
  if (!lambda.is_partition()) throw std::invalid_argument("reverse tableau shape must be a partition");
  const int rows_n = lambda.length();
  std::vector<std::vector<int>> rows;
  for (int p : lambda.parts()) rows.emplace_back(static_cast<std::size_t>(p), 0);
  std::vector<int> len(static_cast<std::size_t>(rows_n), 0);
  auto rec = [&](auto&& self, int v) -> void {
    if (v == 0) {
      visit(ReverseTableau(lambda, rows));
      return;
    }
    for (int r = 0; r < rows_n; ++r) {
      if (len[r] >= lambda.part(r + 1)) continue;
      if (r > 0 && len[r - 1] <= len[r]) continue;
      rows[r][len[r]] = v;
      ++len[r];
      self(self, v - 1);
      --len[r];
    }
  };
  rec(rec, lambda.size());
}

inline std::vector<ReverseTableau> enumerate_srt(const Composition& lambda) {
  std::vector<ReverseTableau> out;
  for_each_srt(lambda, [&](const ReverseTableau& t) { out.push_back(t); });
  return out;
}

}  // namespace pct
