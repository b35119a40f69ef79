#pragma once

// Command implementations behind the `tk` executable. Each command returns a
// status (0 pass, 1 invariant failure) and a JSON results object; usage
// problems and size-guard refusals are thrown as UsageError.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "pct/io.hpp"
#include "pct/pct.hpp"

namespace pct::cmd {

using io::json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CommandResult {
  int status = 0;
  json results = json::object();
};

inline constexpr std::uint64_t default_max_objects = 10'000'000;

/// Flag value if given, else TK_MAX_OBJECTS, else the default.
inline std::uint64_t object_cap(std::optional<std::uint64_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("TK_MAX_OBJECTS")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("TK_MAX_OBJECTS is not a number: ") + env);
  }
  return default_max_objects;
}

inline void guard(double estimate, std::uint64_t cap, const std::string& what) {
  if (estimate > static_cast<double>(cap)) {
    std::ostringstream msg;
    msg << what << ": about " << std::fixed << std::setprecision(0) << estimate << " objects exceeds the cap of " << cap
        << " (raise with --max-objects or TK_MAX_OBJECTS)";
    throw UsageError(msg.str());
  }
}

/// Number of standard reverse tableaux of partition shape, by the hook length formula.
inline double hook_count(const Composition& lambda) {
  const auto& p = lambda.parts();
  double result = 1;
  int placed = 0;
  for (std::size_t r = 0; r < p.size(); ++r) {
    for (int c = 1; c <= p[r]; ++c) {
      int below = 0;
      for (std::size_t s = r + 1; s < p.size() && p[s] >= c; ++s) ++below;
      result *= static_cast<double>(++placed) / static_cast<double>(p[r] - c + below + 1);
    }
  }
  return std::round(result);
}

/// Upper bound on |SPCT(shape)|: all types times standard reverse tableaux of the sorted shape.
inline double spct_estimate(const Composition& shape) {
  return static_cast<double>(factorial(shape.length())) * hook_count(to_partition(shape));
}

inline double ldyck_estimate(int n) { return static_cast<double>(factorial(n)) * static_cast<double>(catalan(n)); }

inline void require_size(int n, const char* flag, int lo = 1, int hi = 20) {
  if (n < lo || n > hi) throw UsageError(std::string(flag) + " must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

// ---------------------------------------------------------------- enumerate

struct EnumerateParams {
  std::string kind;
  std::optional<Composition> shape;
  std::optional<int> n;
  std::optional<std::string> output;
  std::uint64_t cap = default_max_objects;
};

inline CommandResult enumerate(const EnumerateParams& p) {
  std::ofstream file;
  if (p.output) {
    file.open(*p.output);
    if (!file) throw UsageError("cannot open " + *p.output + " for writing");
  }
  std::uint64_t count = 0;
  auto emit = [&](const json& j) {
    ++count;
    if (file.is_open()) file << j.dump() << '\n';
  };
  CommandResult r;
  if (p.kind == "spct" || p.kind == "srt") {
    if (!p.shape) throw UsageError("enumerate " + p.kind + " needs --shape");
    if (p.kind == "spct") {
      guard(spct_estimate(*p.shape), p.cap, "enumerate spct");
      for_each_spct(*p.shape, [&](const Tableau& t) { emit(io::to_json(t)); });
    } else {
      if (!p.shape->is_partition()) throw UsageError("enumerate srt needs a partition shape");
      guard(hook_count(*p.shape), p.cap, "enumerate srt");
      for_each_srt(*p.shape, [&](const ReverseTableau& t) { emit(io::to_json(t)); });
    }
    r.results["shape"] = p.shape->parts();
  } else if (p.kind == "ldyck" || p.kind == "ltree") {
    if (!p.n) throw UsageError("enumerate " + p.kind + " needs --n");
    require_size(*p.n, "--n");
    guard(ldyck_estimate(*p.n), p.cap, "enumerate " + p.kind);
    if (p.kind == "ldyck") {
      for_each_ldyck(*p.n, [&](const LabeledDyckPath& d) { emit(io::to_json(d)); });
    } else {
      for_each_ltree(*p.n, [&](const LabeledBinaryTree& t) { emit(io::to_json(t)); });
    }
    r.results["n"] = *p.n;
  } else {
    throw UsageError("unknown kind '" + p.kind + "' (expected spct, srt, ldyck or ltree)");
  }
  r.results["kind"] = p.kind;
  r.results["count"] = count;
  if (p.output) r.results["output"] = *p.output;
  return r;
}

// ------------------------------------------------------------------- verify

struct VerifyParams {
  std::string suite;
  std::optional<Composition> shape;
  std::optional<int> n;
  std::optional<int> max_n;
  std::uint64_t seed = 0;
  int samples = 0;
  std::uint64_t cap = default_max_objects;
};

inline json hecke_failure(const HeckeReport& rep, const Composition& shape) {
  const auto& ce = *rep.counterexample;
  auto value = [&](const std::vector<int>& w) -> json {
    const HeckeValue v = apply_word(ce.tableau, w);
    return v ? io::to_json(*v) : json(0);
  };
  return {{"shape", shape.parts()}, {"tableau", io::to_json(ce.tableau)}, {"lhs", ce.lhs}, {"rhs", ce.rhs}, {"lhs_value", value(ce.lhs)}, {"rhs_value", value(ce.rhs)}};
}

inline CommandResult verify_hecke(const VerifyParams& p) {
  CommandResult r;
  std::vector<Composition> shapes;
  if (p.shape) {
    shapes.push_back(*p.shape);
  } else {
    const int max_n = p.max_n.value_or(p.n.value_or(5));
    require_size(max_n, "--max-n", 1, 12);
    for (int n = 1; n <= max_n; ++n)
      for (auto& c : compositions_of(n)) shapes.push_back(std::move(c));
  }
  double estimate = 0;
  for (const auto& s : shapes) estimate += spct_estimate(s);
  guard(estimate, p.cap, "verify hecke");

  std::map<int, json> per_size;
  for (const auto& shape : shapes) {
    const HeckeReport rep = verify_hecke_relations(shape);
    json& row = per_size[shape.size()];
    if (row.is_null()) row = {{"n", shape.size()}, {"shapes", 0}, {"tableaux", 0}, {"checks", 0}};
    row["shapes"] = row["shapes"].get<int>() + 1;
    row["tableaux"] = row["tableaux"].get<std::uint64_t>() + rep.tableaux;
    row["checks"] = row["checks"].get<std::uint64_t>() + rep.checks;
    if (!rep.pass) {
      r.status = 1;
      r.results["counterexample"] = hecke_failure(rep, shape);
      break;
    }
  }
  json table = json::array();
  for (auto& [n, row] : per_size) table.push_back(row);
  r.results["sizes"] = std::move(table);
  r.results["pass"] = r.status == 0;
  return r;
}

inline CommandResult verify_counts(const VerifyParams& p) {
  const int max_n = p.max_n.value_or(p.n.value_or(4));
  require_size(max_n, "--max-n", 1, 10);
  double estimate = 0;
  for (int n = 1; n <= max_n; ++n) estimate += 3 * ldyck_estimate(n) + std::pow(static_cast<double>(factorial(n)), 2);
  guard(estimate, p.cap, "verify counts");

  CommandResult r;
  json table = json::array();
  for (int n = 1; n <= max_n; ++n) {
    const Composition shape = Composition::rectangle(2, n);
    std::uint64_t spct = 0, sinks = 0, trees_rasc0 = 0;
    for_each_spct(shape, [&](const Tableau& t) {
      ++spct;
      sinks += is_sink(t) ? 1 : 0;
    });
    const std::uint64_t srt = enumerate_srt(shape).size();
    const std::uint64_t classes = equivalence_classes(shape).size();
    const std::uint64_t pairs = allowable_pairs(n).size();
    for_each_ltree(n, [&](const LabeledBinaryTree& t) { trees_rasc0 += edge_stats(t).rasc == 0 ? 1 : 0; });
    const std::uint64_t parking = int_pow(static_cast<std::uint64_t>(n) + 1, n - 1);
    const bool ok = spct == factorial(n) * catalan(n) && srt == catalan(n) && sinks == parking && classes == parking &&
                    pairs == parking && trees_rasc0 == parking;
    if (!ok) r.status = 1;
    table.push_back({{"n", n},
                     {"spct", spct},
                     {"expected_spct", factorial(n) * catalan(n)},
                     {"srt", srt},
                     {"catalan", catalan(n)},
                     {"sinks", sinks},
                     {"classes", classes},
                     {"allowable_pairs", pairs},
                     {"trees_rasc0", trees_rasc0},
                     {"expected_parking", parking},
                     {"pass", ok}});
  }
  r.results["sizes"] = std::move(table);
  r.results["pass"] = r.status == 0;
  return r;
}

/// Labeled Dyck path of semi-length n drawn by rejection sampling with shuffled labels.
template <class Rng>
LabeledDyckPath random_ldyck(int n, Rng& rng) {
  std::vector<StepKind> kinds(static_cast<std::size_t>(2 * n), StepKind::down);
  std::fill(kinds.begin(), kinds.begin() + n, StepKind::up);
  for (;;) {
    std::shuffle(kinds.begin(), kinds.end(), rng);
    int h = 0;
    bool ok = true;
    for (StepKind s : kinds) {
      h += s == StepKind::up ? 1 : -1;
      if (h < 0) {
        ok = false;
        break;
      }
    }
    if (ok) break;
  }
  std::vector<int> labels(static_cast<std::size_t>(n));
  std::iota(labels.begin(), labels.end(), 1);
  std::shuffle(labels.begin(), labels.end(), rng);
  std::vector<LabeledStep> steps;
  std::size_t k = 0;
  for (StepKind s : kinds) steps.push_back(s == StepKind::up ? LabeledStep::up() : LabeledStep::down(labels[k++]));
  return LabeledDyckPath(std::move(steps));
}

struct RoundTripTally {
  std::uint64_t checked = 0;
  std::optional<json> failure;
  void fail(json j) {
    if (!failure) failure = std::move(j);
  }
};

/// PCT -> RT -> PCT for every SPCT of size n, and RT -> PCT -> RT for every SRT and type.
inline RoundTripTally pct_rt_round_trips(int n) {
  RoundTripTally tally;
  for_each_composition(n, [&](const Composition& shape) {
    for_each_spct(shape, [&](const Tableau& t) {
      ++tally.checked;
      const Permutation type = *validate_pct(t).type;
      if (rt_to_pct(pct_to_rt(t), type) != t) tally.fail({{"map", "pct-to-rt-to-pct"}, {"tableau", io::to_json(t)}});
    });
  });
  for (const auto& lambda : partitions_of(n)) {
    const auto types = all_permutations(lambda.length());
    for_each_srt(lambda, [&](const ReverseTableau& rt) {
      for (const auto& sigma : types) {
        ++tally.checked;
        if (pct_to_rt(rt_to_pct(rt, sigma)) != rt)
          tally.fail({{"map", "rt-to-pct-to-rt"}, {"tableau", io::to_json(rt)}, {"sigma", sigma.images()}});
      }
    });
  }
  return tally;
}

inline void check_path_round_trips(const LabeledDyckPath& d, RoundTripTally& psi, RoundTripTally& trees) {
  ++psi.checked;
  if (spct_to_ldyck(ldyck_to_spct(d)) != d) psi.fail({{"map", "ldyck-to-spct-to-ldyck"}, {"path", io::to_json(d)}});
  ++trees.checked;
  if (ltree_to_ldyck(ldyck_to_ltree(d)) != d) trees.fail({{"map", "ldyck-to-ltree-to-ldyck"}, {"path", io::to_json(d)}});
}

inline CommandResult verify_bijections(const VerifyParams& p) {
  const int n = p.n.value_or(4);
  require_size(n, "--n", 1, 12);
  const bool sampled = p.samples > 0;
  guard(spct_estimate(Composition::rectangle(1, n)) * std::pow(2.0, n - 1) + (sampled ? 2.0 * p.samples : 2 * ldyck_estimate(n)), p.cap,
        "verify bijections");

  RoundTripTally rt = pct_rt_round_trips(n);
  RoundTripTally psi, trees;
  if (sampled) {
    std::mt19937_64 rng(p.seed);
    for (int s = 0; s < p.samples; ++s) {
      const LabeledDyckPath d = random_ldyck(n, rng);
      check_path_round_trips(d, psi, trees);
      const LabeledBinaryTree t = ldyck_to_ltree(d);
      ++trees.checked;
      if (ldyck_to_ltree(ltree_to_ldyck(t)) != t) trees.fail({{"map", "ltree-to-ldyck-to-ltree"}, {"tree", io::to_json(t)}});
    }
  } else {
    for_each_ldyck(n, [&](const LabeledDyckPath& d) { check_path_round_trips(d, psi, trees); });
    for_each_spct(Composition::rectangle(2, n), [&](const Tableau& t) {
      ++psi.checked;
      if (ldyck_to_spct(spct_to_ldyck(t)) != t) psi.fail({{"map", "spct-to-ldyck-to-spct"}, {"tableau", io::to_json(t)}});
    });
    for_each_ltree(n, [&](const LabeledBinaryTree& t) {
      ++trees.checked;
      if (ldyck_to_ltree(ltree_to_ldyck(t)) != t) trees.fail({{"map", "ltree-to-ldyck-to-ltree"}, {"tree", io::to_json(t)}});
    });
  }

  CommandResult r;
  auto section = [&](const char* name, const RoundTripTally& tally) {
    json j = {{"checked", tally.checked}, {"pass", !tally.failure}};
    if (tally.failure) {
      j["counterexample"] = *tally.failure;
      r.status = 1;
    }
    r.results[name] = std::move(j);
  };
  r.results["n"] = n;
  r.results["mode"] = sampled ? "sampled" : "exhaustive";
  if (sampled) r.results["seed"] = p.seed;
  section("pct_rt", rt);
  section("spct_ldyck", psi);
  section("ldyck_ltree", trees);
  r.results["pass"] = r.status == 0;
  return r;
}

inline CommandResult verify_classes(const VerifyParams& p) {
  const Composition shape = p.shape ? *p.shape : Composition::rectangle(2, p.n.value_or(3));
  guard(spct_estimate(shape), p.cap, "verify classes");
  const auto classes = equivalence_classes(shape);
  CommandResult r;
  std::uint64_t tableaux = 0, sinks = 0, sources = 0, disconnected = 0;
  for (const auto& cls : classes) {
    tableaux += cls.members.size();
    sinks += cls.sinks.size();
    sources += cls.sources.size();
    disconnected += cls.connected ? 0 : 1;
    if ((cls.sources.size() != 1 || cls.sinks.size() != 1 || !cls.closed_under_pi) && r.status == 0) {
      r.status = 1;
      json sig = json::array();
      for (const auto& s : cls.signature) sig.push_back(s.images());
      json members = json::array();
      for (const auto& t : cls.members) members.push_back(io::to_json(t));
      r.results["counterexample"] = {{"signature", sig}, {"sources", cls.sources.size()}, {"sinks", cls.sinks.size()},
                                     {"closed_under_pi", cls.closed_under_pi}, {"members", members}};
    }
  }
  r.results["shape"] = shape.parts();
  r.results["tableaux"] = tableaux;
  r.results["classes"] = classes.size();
  r.results["sources"] = sources;
  r.results["sinks"] = sinks;
  r.results["disconnected_classes"] = disconnected;
  bool rectangle = true;
  for (int part : shape.parts()) rectangle = rectangle && part == 2;
  if (rectangle) {
    const int n = shape.length();
    const std::uint64_t parking = int_pow(static_cast<std::uint64_t>(n) + 1, n - 1);
    std::uint64_t no_ne = 0;
    for (const auto& cls : classes)
      for (const auto& t : cls.members) no_ne += descent_quadruple(t).north_east == 0 ? 1 : 0;
    r.results["expected_classes"] = parking;
    r.results["desNE_zero"] = no_ne;
    if (classes.size() != parking || sinks != parking || no_ne != parking) r.status = 1;
  }
  r.results["pass"] = r.status == 0;
  return r;
}

inline CommandResult verify_pairs(const VerifyParams& p) {
  const int max_n = p.max_n.value_or(p.n.value_or(4));
  require_size(max_n, "--max-n", 1, 7);
  double estimate = 0;
  for (int n = 1; n <= max_n; ++n) estimate += std::pow(static_cast<double>(factorial(n)), 2) + ldyck_estimate(n);
  guard(estimate, p.cap, "verify pairs");

  CommandResult r;
  json table = json::array();
  for (int n = 1; n <= max_n; ++n) {
    const auto perms = all_permutations(n);
    std::set<std::pair<Permutation, Permutation>> allowable;
    std::uint64_t order_mismatch = 0;
    for (const auto& a : perms)
      for (const auto& b : perms) {
        if (is_2112_avoiding(a, b) != weak_bruhat_leq(a, b)) ++order_mismatch;
        if (is_allowable_pair(a, b)) allowable.emplace(a, b);
      }
    std::set<std::pair<Permutation, Permutation>> compatible;
    for_each_spct(Composition::rectangle(2, n), [&](const Tableau& t) { compatible.emplace(st(t, 1), st(t, 2)); });
    std::uint64_t realized = 0;
    std::optional<json> failure;
    for (const auto& [a, b] : allowable) {
      try {
        const Tableau t = realize_sct(a, b);
        ++realized;
        (void)t;
      } catch (const std::exception& e) {
        if (!failure) failure = json{{"a", a.images()}, {"b", b.images()}, {"error", e.what()}};
      }
    }
    const std::uint64_t parking = int_pow(static_cast<std::uint64_t>(n) + 1, n - 1);
    const bool ok = allowable.size() == parking && order_mismatch == 0 && compatible == allowable && !failure;
    json row = {{"n", n},
                {"allowable_pairs", allowable.size()},
                {"expected", parking},
                {"weak_order_mismatches", order_mismatch},
                {"compatible_pairs", compatible.size()},
                {"compatible_equals_allowable", compatible == allowable},
                {"realized", realized},
                {"pass", ok}};
    if (failure) row["counterexample"] = *failure;
    if (!ok) r.status = 1;
    table.push_back(std::move(row));
  }
  r.results["sizes"] = std::move(table);
  r.results["pass"] = r.status == 0;
  return r;
}

inline CommandResult verify(const VerifyParams& p) {
  if (p.suite == "hecke") return verify_hecke(p);
  if (p.suite == "counts") return verify_counts(p);
  if (p.suite == "bijections") return verify_bijections(p);
  if (p.suite == "classes") return verify_classes(p);
  if (p.suite == "pairs") return verify_pairs(p);
  throw UsageError("unknown suite '" + p.suite + "' (expected hecke, counts, bijections, classes or pairs)");
}

// -------------------------------------------------------------------- stats

using Quad = std::tuple<int, int, int, int>;

inline json quad_table(const std::map<Quad, std::uint64_t>& table) {
  json out = json::array();
  for (const auto& [q, count] : table) out.push_back({{"tuple", {std::get<0>(q), std::get<1>(q), std::get<2>(q), std::get<3>(q)}}, {"count", count}});
  return out;
}

inline CommandResult stats_quadruple(int n, std::uint64_t cap) {
  require_size(n, "--n", 1, 12);
  guard(3 * ldyck_estimate(n), cap, "stats quadruple");
  std::map<Quad, std::uint64_t> tableaux, trees;
  std::optional<json> mismatch;
  for_each_spct(Composition::rectangle(2, n), [&](const Tableau& t) {
    const DescentQuadruple q = descent_quadruple(t);
    ++tableaux[{q.north, q.south, q.north_east, q.south_east}];
    const EdgeStats e = edge_stats(ldyck_to_ltree(spct_to_ldyck(t)));
    if (!mismatch && std::tie(q.north, q.south, q.north_east, q.south_east) != std::tie(e.lasc, e.ldes, e.rasc, e.rdes))
      mismatch = json{{"tableau", io::to_json(t)}, {"quadruple", io::to_json(q)}, {"edge_stats", io::to_json(e)}};
  });
  for_each_ltree(n, [&](const LabeledBinaryTree& t) {
    const EdgeStats e = edge_stats(t);
    ++trees[{e.lasc, e.ldes, e.rasc, e.rdes}];
  });
  CommandResult r;
  std::uint64_t objects = 0;
  for (const auto& [q, c] : tableaux) objects += c;
  r.results["n"] = n;
  r.results["objects"] = objects;
  r.results["order"] = {"N|lasc", "S|ldes", "NE|rasc", "SE|rdes"};
  r.results["spct"] = quad_table(tableaux);
  r.results["ltree"] = quad_table(trees);
  r.results["tables_equal"] = tableaux == trees;
  r.results["per_object_equal"] = !mismatch;
  if (mismatch) r.results["counterexample"] = *mismatch;
  if (mismatch || tableaux != trees) r.status = 1;
  r.results["pass"] = r.status == 0;
  return r;
}

// ---------------------------------------------------------------------- map

struct MapParams {
  std::string transform;
  std::optional<json> input;
  std::optional<std::string> sigma;
  std::vector<std::string> pair;
  std::optional<std::string> dot;
};

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

inline void write_text(const std::optional<std::string>& path, const std::string& text) {
  if (!path) return;
  std::ofstream out(*path);
  if (!out) throw UsageError("cannot open " + *path + " for writing");
  out << text;
}

inline CommandResult map(const MapParams& p) {
  CommandResult r;
  const std::string& tf = p.transform;
  auto need_input = [&]() -> const json& {
    if (!p.input) throw UsageError("map " + tf + " needs --input");
    return *p.input;
  };
  auto check_pct = [&](const Tableau& t) {
    const PctCheck c = validate_pct(t);
    if (!c.valid()) throw UsageError("input is not a PCT: " + describe(c));
    return *c.type;
  };
  if (tf == "pct-to-rt") {
    const Tableau t = io::tableau_from_json(need_input());
    const Permutation type = check_pct(t);
    r.results["type"] = type.images();
    r.results["output"] = io::to_json(pct_to_rt(t));
  } else if (tf == "rt-to-pct") {
    const ReverseTableau rt = io::reverse_tableau_from_json(need_input());
    if (!p.sigma) throw UsageError("map rt-to-pct needs --sigma");
    r.results["sigma"] = io::parse_permutation(*p.sigma).images();
    r.results["output"] = io::to_json(rt_to_pct(rt, io::parse_permutation(*p.sigma)));
  } else if (tf == "spct-to-ldyck") {
    const Tableau t = io::tableau_from_json(need_input());
    check_pct(t);
    if (!is_standard(t)) throw UsageError("input is not standard");
    r.results["output"] = io::to_json(spct_to_ldyck(t));
  } else if (tf == "ldyck-to-spct") {
    r.results["output"] = io::to_json(ldyck_to_spct(io::ldyck_from_json(need_input())));
  } else if (tf == "ldyck-to-ltree") {
    const LabeledBinaryTree t = ldyck_to_ltree(io::ldyck_from_json(need_input()));
    r.results["output"] = io::to_json(t);
    r.results["edge_stats"] = io::to_json(edge_stats(t));
    write_text(p.dot, io::to_dot(t));
  } else if (tf == "ltree-to-ldyck") {
    const LabeledBinaryTree t = io::ltree_from_json(need_input());
    const TreeToPathResult res = ltree_to_ldyck_traced(t);
    r.results["output"] = io::to_json(res.path);
    r.results["trace"] = io::to_json(res.trace);
    write_text(p.dot, io::to_dot(t));
  } else if (tf == "realize-pair") {
    if (p.pair.size() != 2) throw UsageError("map realize-pair needs two permutations");
    const Permutation a = io::parse_permutation(p.pair[0]);
    const Permutation b = io::parse_permutation(p.pair[1]);
    if (a.size() != b.size()) throw UsageError("permutations differ in size");
    if (!is_allowable_pair(a, b)) throw UsageError("pair is not allowable");
    const Tableau t = realize_sct(a, b);
    json seq = json::array();
    for (const auto& s : chain_sequence(a, b)) seq.push_back(s.images());
    r.results["sequence"] = std::move(seq);
    r.results["output"] = io::to_json(t);
    r.results["valid"] = validate_pct(t).valid();
    write_text(p.dot, io::to_dot(build_graph(chain_sequence(a, b))));
  } else {
    throw UsageError("unknown transform '" + tf + "'");
  }
  r.results["transform"] = tf;
  return r;
}

// ------------------------------------------------------------------ output

/// Flattens a JSON value to (pointer, scalar) rows.
inline std::vector<std::pair<std::string, std::string>> flatten(const json& j) {
  std::vector<std::pair<std::string, std::string>> rows;
  auto walk = [&](auto&& self, const json& v, const std::string& path) -> void {
    if (v.is_object()) {
      for (const auto& [k, child] : v.items()) self(self, child, path + "/" + k);
    } else if (v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive(); })) {
      rows.emplace_back(path, v.dump());
    } else if (v.is_array()) {
      for (std::size_t i = 0; i < v.size(); ++i) self(self, v[i], path + "/" + std::to_string(i));
    } else {
      rows.emplace_back(path, v.is_string() ? v.get<std::string>() : v.dump());
    }
  };
  walk(walk, j, "");
  return rows;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

inline std::string format_report(const json& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  std::string out;
  if (format == "csv") {
    out = "key,value\n";
    for (const auto& [k, v] : flatten(report)) out += csv_field(k) + "," + csv_field(v) + "\n";
    return out;
  }
  if (format == "text") {
    for (const auto& [k, v] : flatten(report)) out += k + " = " + v + "\n";
    return out;
  }
  throw UsageError("unknown format '" + format + "'");
}

}  // namespace pct::cmd
