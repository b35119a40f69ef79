#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pct/commands.hpp"

namespace {

using pct::cmd::CommandResult;
using pct::io::json;

struct Common {
  std::string format = "json";
  std::optional<std::uint64_t> max_objects;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--format", c.format, "Report format")->check(CLI::IsMember({"json", "csv", "text"}));
  app->add_option("--max-objects", c.max_objects, "Object cap (overrides TK_MAX_OBJECTS)");
}

template <class Fn>
int run(const std::string& command, json parameters, const Common& common, Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  CommandResult result;
  try {
    result = fn();
  } catch (const pct::internal_error& e) {
    result.status = 1;
    result.results = {{"error", e.what()}, {"pass", false}};
  } catch (const std::invalid_argument& e) {
    std::cerr << "tk: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "tk: " << e.what() << '\n';
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "tk: bad JSON input: " << e.what() << '\n';
    return 2;
  }
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  json report;
  report["command"] = command;
  report["parameters"] = std::move(parameters);
  report["results"] = std::move(result.results);
  report["elapsed_ms"] = static_cast<std::int64_t>(elapsed);
  std::cout << pct::cmd::format_report(report, common.format);
  return result.status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tk: permuted composition tableaux, labeled Dyck paths and binary trees"};
  app.require_subcommand(1);

  Common common;
  std::string shape_text;
  std::optional<int> n, max_n;
  std::optional<std::string> output, input, sigma, dot;
  std::uint64_t seed = 0;
  int samples = 0;
  std::vector<std::string> pair;

  auto* enumerate = app.add_subcommand("enumerate", "Count (and optionally list) objects");
  std::string enum_kind;
  enumerate->add_option("kind", enum_kind, "spct | srt | ldyck | ltree")->required()->check(CLI::IsMember({"spct", "srt", "ldyck", "ltree"}));
  enumerate->add_option("--shape", shape_text, "Composition, e.g. 2,2,2");
  enumerate->add_option("--n", n, "Semi-length / node count");
  enumerate->add_option("--output", output, "Write one JSON object per line to this file");
  add_common(enumerate, common);

  auto* verify = app.add_subcommand("verify", "Run an invariant suite");
  std::string suite;
  verify->add_option("suite", suite, "hecke | counts | bijections | classes | pairs")
      ->required()
      ->check(CLI::IsMember({"hecke", "counts", "bijections", "classes", "pairs"}));
  verify->add_option("--shape", shape_text, "Composition, e.g. 1,3,2,4");
  verify->add_option("--n", n, "Size");
  verify->add_option("--max-n", max_n, "Largest size");
  verify->add_option("--seed", seed, "Seed for sampled checks");
  verify->add_option("--samples", samples, "Sample this many objects instead of exhausting (bijections)");
  verify->add_option("--dot", dot, "Write the pi-orbit graph as DOT (classes)");
  add_common(verify, common);

  auto* stats = app.add_subcommand("stats", "Joint statistic distributions");
  std::string stats_kind;
  stats->add_option("kind", stats_kind, "quadruple")->required()->check(CLI::IsMember({"quadruple"}));
  stats->add_option("--n", n, "Semi-length")->required();
  add_common(stats, common);

  auto* map = app.add_subcommand("map", "Apply a bijection to one object");
  std::string transform;
  map->add_option("transform", transform, "pct-to-rt | rt-to-pct | spct-to-ldyck | ldyck-to-spct | ldyck-to-ltree | ltree-to-ldyck | realize-pair")
      ->required()
      ->check(CLI::IsMember({"pct-to-rt", "rt-to-pct", "spct-to-ldyck", "ldyck-to-spct", "ldyck-to-ltree", "ltree-to-ldyck", "realize-pair"}));
  map->add_option("permutations", pair, "Two permutations for realize-pair")->expected(0, 2);
  map->add_option("--input", input, "JSON input file ('-' for stdin)");
  map->add_option("--sigma", sigma, "Type permutation for rt-to-pct");
  map->add_option("--dot", dot, "Write the tree or graph as DOT");
  add_common(map, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::optional<pct::Composition> shape;
  std::uint64_t cap = 0;
  try {
    if (!shape_text.empty()) shape = pct::io::parse_composition(shape_text);
    cap = pct::cmd::object_cap(common.max_objects);
  } catch (const std::exception& e) {
    std::cerr << "tk: " << e.what() << '\n';
    return 2;
  }

  json params = json::object();
  if (shape) params["shape"] = shape->parts();
  if (n) params["n"] = *n;
  if (max_n) params["max_n"] = *max_n;

  if (*enumerate) {
    if (output) params["output"] = *output;
    return run("enumerate " + enum_kind, params, common, [&] { return pct::cmd::enumerate({enum_kind, shape, n, output, cap}); });
  }
  if (*verify) {
    params["seed"] = seed;
    if (samples) params["samples"] = samples;
    return run("verify " + suite, params, common, [&] {
      CommandResult r = pct::cmd::verify({suite, shape, n, max_n, seed, samples, cap});
      if (dot && suite == "classes") pct::cmd::write_text(dot, pct::io::orbit_dot(shape ? *shape : pct::Composition::rectangle(2, n.value_or(3))));
      return r;
    });
  }
  if (*stats) {
    return run("stats " + stats_kind, params, common, [&] { return pct::cmd::stats_quadruple(*n, cap); });
  }
  if (input) params["input"] = *input;
  if (sigma) params["sigma"] = *sigma;
  if (!pair.empty()) params["permutations"] = pair;
  return run("map " + transform, params, common, [&] {
    std::optional<json> doc;
    if (input) doc = *input == "-" ? json::parse(std::cin) : pct::cmd::read_json_file(*input);
    return pct::cmd::map({transform, doc, sigma, pair, dot});
  });
}
