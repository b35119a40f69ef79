#pragma once

/**
 * @file core.hpp
 * @brief Permutations, compositions, standardization and the left weak order.
 *
 * Everything is 1-indexed: a permutation of [n] is stored in one-line
 * notation with images in {1,...,n}, and position i is read with p(i).
 */

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pct {

class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = size();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : images_) {
      if (v < 1 || v > n || seen[v]) {
        throw std::invalid_argument("not a permutation of [" + std::to_string(n) + "]");
      }
      seen[v] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }

  static Permutation reversed_identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.rbegin(), v.rend(), 1);
    return Permutation(std::move(v));
  }

  int size() const { return static_cast<int>(images_.size()); }
  bool empty() const { return images_.empty(); }

  /// Image of position i, 1 <= i <= size().
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }

  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 1; i <= size(); ++i) inv[(*this)(i) - 1] = i;
    return Permutation(std::move(inv));
  }

  /// Position holding value v.
  int position_of(int v) const {
    auto it = std::find(images_.begin(), images_.end(), v);
    return static_cast<int>(it - images_.begin()) + 1;
  }

  /// s_p * this: swaps the values p and p+1 in one-line notation.
  Permutation left_multiply_simple(int p) const {
    if (p < 1 || p >= size()) throw std::invalid_argument("simple transposition index out of range");
    std::vector<int> v = images_;
    for (int& x : v) {
      if (x == p) {
        x = p + 1;
      } else if (x == p + 1) {
        x = p;
      }
    }
    return Permutation(std::move(v));
  }

  bool is_identity() const {
    for (int i = 1; i <= size(); ++i)
      if ((*this)(i) != i) return false;
    return true;
  }

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// Ordered list of positive parts. The empty composition is allowed.
class Composition {
 public:
  Composition() = default;

  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
      if (p < 1) throw std::invalid_argument("composition parts must be positive");
  }

  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

  /// (part^count), e.g. rectangle(2, 3) == (2,2,2).
  static Composition rectangle(int part, int count) {
    return Composition(std::vector<int>(static_cast<std::size_t>(count), part));
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  bool empty() const { return parts_.empty(); }
  int part(int i) const { return parts_[static_cast<std::size_t>(i - 1)]; }
  int max_part() const { return parts_.empty() ? 0 : *std::max_element(parts_.begin(), parts_.end()); }

  bool is_partition() const { return std::is_sorted(parts_.begin(), parts_.end(), std::greater<>()); }

  auto operator<=>(const Composition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Unique permutation whose relative order matches `word`; equal letters are
/// ranked by position, earlier first.
inline Permutation standardize(std::span<const int> word) {
  if (word.empty()) throw std::invalid_argument("empty input");
  std::vector<int> order(word.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return word[x] < word[y]; });
  std::vector<int> images(word.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) images[order[rank]] = static_cast<int>(rank) + 1;
  return Permutation(std::move(images));
}

inline Permutation standardize(const std::vector<int>& word) { return standardize(std::span<const int>(word)); }

using Inversion = std::pair<int, int>;

/// All (i, j) with i < j and p(i) > p(j), in lexicographic order.
inline std::vector<Inversion> inversions(const Permutation& p) {
  std::vector<Inversion> out;
  for (int i = 1; i <= p.size(); ++i)
    for (int j = i + 1; j <= p.size(); ++j)
      if (p(i) > p(j)) out.emplace_back(i, j);
  return out;
}

inline void require_same_size(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("permutation size mismatch");
}

/// a <=_L b, i.e. Inv(a) is a subset of Inv(b).
inline bool weak_bruhat_leq(const Permutation& a, const Permutation& b) {
  require_same_size(a, b);
  const auto ia = inversions(a);
  const auto ib = inversions(b);
  return std::includes(ib.begin(), ib.end(), ia.begin(), ia.end());
}

/// Chain identity = g_1 < g_2 < ... < g_m = target of left covers g' = s_p g.
/// At each step the smallest admissible p is taken, so the chain is unique.
inline std::vector<Permutation> maximal_chain_to(const Permutation& target) {
  const int n = target.size();
  std::vector<Permutation> chain{Permutation::identity(n)};
  while (chain.back() != target) {
    const Permutation& cur = chain.back();
    bool stepped = false;
    for (int p = 1; p < n && !stepped; ++p) {
      if (cur.position_of(p) > cur.position_of(p + 1)) continue;
      Permutation next = cur.left_multiply_simple(p);
      if (weak_bruhat_leq(next, target)) {
        chain.push_back(std::move(next));
        stepped = true;
      }
    }
    if (!stepped) throw std::logic_error("no cover step below target");
  }
  return chain;
}

/// Increment every part, then pad with ones up to length |c|.
inline Composition hat(const Composition& c) {
  std::vector<int> parts;
  const int n = c.size();
  for (int p : c.parts()) parts.push_back(p + 1);
  parts.resize(static_cast<std::size_t>(n), 1);
  return Composition(std::move(parts));
}

inline Composition to_partition(const Composition& c) {
  std::vector<int> parts = c.parts();
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Composition(std::move(parts));
}

/// Visits the 2^(n-1) compositions of n. Order: gap mask 0, 1, 2, ... where
/// bit b of the mask cuts between positions b+1 and b+2; mask 0 is (n).
template <class Visitor>
void for_each_composition(int n, Visitor&& visit) {
  if (n < 1) throw std::invalid_argument("compositions_of requires n >= 1");
  if (n > 31) throw std::invalid_argument("compositions_of: n too large");
  const std::uint32_t masks = std::uint32_t{1} << (n - 1);
  for (std::uint32_t mask = 0; mask < masks; ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (int b = 0; b < n - 1; ++b) {
      if (mask & (std::uint32_t{1} << b)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    visit(Composition(std::move(parts)));
  }
}

inline std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  for_each_composition(n, [&](Composition c) { out.push_back(std::move(c)); });
  return out;
}

/// Partitions of n in reverse lexicographic order, (n) first.
inline std::vector<Composition> partitions_of(int n) {
  std::vector<Composition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

/// All n! permutations in lexicographic order.
inline std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

inline std::uint64_t catalan(int n) {
  // C(2n, n) / (n + 1), built incrementally to stay exact.
  std::uint64_t c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * static_cast<std::uint64_t>(i) + 1) / (static_cast<std::uint64_t>(i) + 2);
  return c;
}

inline std::uint64_t int_pow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace pct
