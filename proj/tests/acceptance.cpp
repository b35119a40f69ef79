// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "pct/commands.hpp"
#include "pct/io.hpp"
#include "pct/pct.hpp"

using namespace pct;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

std::uint64_t parking(int n) { return int_pow(static_cast<std::uint64_t>(n) + 1, n - 1); }

Outcome ac1_spct_cardinality() {
  std::vector<std::uint64_t> got, want;
  for (int n = 1; n <= 5; ++n) {
    std::uint64_t c = 0;
    for_each_spct(Composition::rectangle(2, n), [&](const Tableau&) { ++c; });
    got.push_back(c);
    want.push_back(factorial(n) * catalan(n));
  }
  return {got == want, "|SPCT(2^n)| n=1..5: " + join(got) + " (expected " + join(want) + ")"};
}

Outcome ac2_sinks_and_classes() {
  std::vector<std::uint64_t> sinks, classes, want;
  for (int n = 1; n <= 5; ++n) {
    const auto cls = equivalence_classes(Composition::rectangle(2, n));
    std::uint64_t s = 0;
    for (const auto& c : cls) s += c.sinks.size();
    sinks.push_back(s);
    classes.push_back(cls.size());
    want.push_back(parking(n));
  }
  return {sinks == want && classes == want, "sinks " + join(sinks) + ", classes " + join(classes) + " (expected " + join(want) + ")"};
}

Outcome ac3_allowable_pairs() {
  std::vector<std::uint64_t> got, want;
  for (int n = 1; n <= 5; ++n) {
    got.push_back(allowable_pairs(n).size());
    want.push_back(parking(n));
  }
  bool sets_equal = true;
  for (int n = 1; n <= 4; ++n) {
    std::set<std::pair<Permutation, Permutation>> compatible;
    for_each_spct(Composition::rectangle(2, n), [&](const Tableau& t) { compatible.emplace(st(t, 1), st(t, 2)); });
    const auto all = allowable_pairs(n);
    sets_equal = sets_equal && compatible == std::set<std::pair<Permutation, Permutation>>(all.begin(), all.end());
  }
  return {got == want && sets_equal,
          "allowable pairs n=1..5: " + join(got) + " (expected " + join(want) + "); compatible == allowable for n<=4: " + (sets_equal ? "yes" : "no")};
}

Outcome ac4_statistic_transport() {
  std::uint64_t checked = 0, mismatches = 0;
  for (int n = 1; n <= 5; ++n)
    for_each_spct(Composition::rectangle(2, n), [&](const Tableau& t) {
      ++checked;
      const auto q = descent_quadruple(t);
      const auto e = edge_stats(ldyck_to_ltree(spct_to_ldyck(t)));
      if (q.north != e.lasc || q.south != e.ldes || q.north_east != e.rasc || q.south_east != e.rdes) ++mismatches;
    });
  bool tables = true;
  for (int n = 1; n <= 5; ++n) tables = tables && cmd::stats_quadruple(n, cmd::default_max_objects).status == 0;
  return {mismatches == 0 && tables,
          std::to_string(checked) + " tableaux, " + std::to_string(mismatches) + " per-object mismatches, joint tables " + (tables ? "equal" : "differ")};
}

Outcome ac5_hecke_relations() {
  std::uint64_t shapes = 0, tableaux = 0, checks = 0;
  for (int n = 1; n <= 6; ++n)
    for (const auto& shape : compositions_of(n)) {
      const HeckeReport rep = verify_hecke_relations(shape);
      ++shapes;
      tableaux += rep.tableaux;
      checks += rep.checks;
      if (!rep.pass) {
        std::ostringstream msg;
        msg << "relation fails on " << io::to_json(rep.counterexample->tableau).dump();
        return {false, msg.str()};
      }
    }
  return {true, std::to_string(shapes) + " shapes, " + std::to_string(tableaux) + " tableaux, " + std::to_string(checks) + " relation checks"};
}

Outcome ac6_unique_source_sink() {
  std::uint64_t shapes = 0, classes = 0;
  for (int n = 1; n <= 7; ++n)
    for (const auto& shape : compositions_of(n)) {
      ++shapes;
      for (const auto& c : equivalence_classes(shape)) {
        ++classes;
        if (c.sources.size() != 1 || c.sinks.size() != 1)
          return {false, "class of shape " + io::to_string(shape) + " has " + std::to_string(c.sources.size()) + " sources and " +
                             std::to_string(c.sinks.size()) + " sinks"};
      }
    }
  return {true, std::to_string(classes) + " classes over " + std::to_string(shapes) + " shapes, each with one source and one sink"};
}

Outcome ac7_round_trips() {
  std::uint64_t rt = 0, paths = 0, sampled = 0;
  for (int n = 1; n <= 7; ++n) {
    const auto tally = cmd::pct_rt_round_trips(n);
    if (tally.failure) return {false, "PCT/RT round trip fails: " + tally.failure->dump()};
    rt += tally.checked;
  }
  for (int n = 1; n <= 4; ++n) {
    bool ok = true;
    for_each_ldyck(n, [&](const LabeledDyckPath& d) {
      ++paths;
      ok = ok && spct_to_ldyck(ldyck_to_spct(d)) == d && ltree_to_ldyck(ldyck_to_ltree(d)) == d;
    });
    for_each_spct(Composition::rectangle(2, n), [&](const Tableau& t) { ok = ok && ldyck_to_spct(spct_to_ldyck(t)) == t; });
    for_each_ltree(n, [&](const LabeledBinaryTree& t) { ok = ok && ldyck_to_ltree(ltree_to_ldyck(t)) == t; });
    if (!ok) return {false, "Dyck/tree round trip fails at n=" + std::to_string(n)};
  }
  std::mt19937_64 rng(20240101);
  for (int n : {5, 6})
    for (int s = 0; s < 1000; ++s) {
      ++sampled;
      const LabeledDyckPath d = cmd::random_ldyck(n, rng);
      const Tableau t = ldyck_to_spct(d);
      const LabeledBinaryTree tree = ldyck_to_ltree(d);
      if (spct_to_ldyck(t) != d || ltree_to_ldyck(tree) != d || ldyck_to_ltree(ltree_to_ldyck(tree)) != tree ||
          ldyck_to_spct(spct_to_ldyck(t)) != t)
        return {false, "sampled round trip fails on " + io::to_string(d)};
    }
  return {true, std::to_string(rt) + " PCT/RT checks (size<=7), " + std::to_string(paths) + " labeled paths (n<=4), " + std::to_string(sampled) +
                    " seeded samples (n=5,6)"};
}

Outcome ac8_golden_values() {
  struct Sub {
    std::string name;
    bool pass;
    std::string note;
  };
  std::vector<Sub> subs;

  subs.push_back({"descent set {1,2,4,6,7}", descent_set(fixtures::spct_shape_1324()) == std::vector<int>{1, 2, 4, 6, 7}, ""});

  std::string words;
  for (const auto& p : st(fixtures::pct_shape_1324())) words += (words.empty() ? "" : " ") + io::to_string(p);
  subs.push_back({"st word 1324 213 12 1", words == "1324 213 12 1" && st(fixtures::spct_shape_1324()) == st(fixtures::pct_shape_1324()), words});

  const Permutation sigma({3, 1, 4, 2});
  subs.push_back({"PCT<->RT pair under 3142",
                  pct_to_rt(fixtures::pct_3142()) == fixtures::rt_3142() && rt_to_pct(fixtures::rt_3142(), sigma) == fixtures::pct_3142(), ""});

  const std::string word = io::to_string(labeled_dyck_word(fixtures::ldyck_example()));
  subs.push_back({"20-letter labeled Dyck word", word == fixtures::ldyck_word_text, word});

  subs.push_back({"tree statistics (1,3,3,1)", false, "tree is given only as an image; no labeled tree available to evaluate"});

  const auto res = ltree_to_ldyck_traced(ldyck_to_ltree(fixtures::ldyck_example()));
  const std::string trace = fixtures::trace_string(res.trace);
  subs.push_back({"push/pop trace (20 ops, push 5 first, pop 7 last)", res.trace.size() == 20 && trace == fixtures::worked_trace, ""});

  Outcome out;
  for (const auto& s : subs) {
    out.pass = out.pass && s.pass;
    out.detail += "\n    [" + std::string(s.pass ? "ok" : "FAILED") + "] " + s.name + (s.note.empty() ? "" : ": " + s.note);
  }
  return out;
}

Outcome ac9_acyclicity_and_realization() {
  std::uint64_t pairs = 0;
  for (int n = 1; n <= 4; ++n)
    for (const auto& [a, b] : allowable_pairs(n)) {
      ++pairs;
      const auto seq = chain_sequence(a, b);
      const PermGraph g = build_graph(seq);
      if (!is_acyclic(g)) return {false, "cyclic graph for pair " + io::to_string(a) + "," + io::to_string(b)};
      const Tableau t = realize_sct(a, b);
      const int k = t.num_cols();
      if (!validate_pct(t).valid() || !st(t, 1).is_identity() || st(t, k - 1) != a || st(t, k) != b)
        return {false, "realization fails for pair " + io::to_string(a) + "," + io::to_string(b)};
    }
  return {true, std::to_string(pairs) + " allowable pairs (n<=4) realized as validated SCTs"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 SPCT cardinality", ac1_spct_cardinality},
      {"AC2 sink and class counts", ac2_sinks_and_classes},
      {"AC3 allowable pair counts", ac3_allowable_pairs},
      {"AC4 statistic transport", ac4_statistic_transport},
      {"AC5 Hecke relations", ac5_hecke_relations},
      {"AC6 unique source and sink", ac6_unique_source_sink},
      {"AC7 bijection round trips", ac7_round_trips},
      {"AC8 golden values", ac8_golden_values},
      {"AC9 acyclicity and realization", ac9_acyclicity_and_realization},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << " (" << ms << " ms): " << o.detail << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criterion(s) failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
