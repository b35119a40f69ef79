#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>

#include "fixtures.hpp"
#include "pct/commands.hpp"
#include "pct/io.hpp"

using namespace pct;
using cmd::UsageError;

TEST(Parse, Permutations) {
  EXPECT_EQ(io::parse_permutation("3142"), Permutation({3, 1, 4, 2}));
  EXPECT_EQ(io::parse_permutation("3 1 4 2"), Permutation({3, 1, 4, 2}));
  EXPECT_EQ(io::parse_permutation("3,1,4,2"), Permutation({3, 1, 4, 2}));
  EXPECT_EQ(io::parse_permutation("1"), Permutation({1}));
  EXPECT_THROW(io::parse_permutation("3x42"), std::invalid_argument);
  EXPECT_THROW(io::parse_permutation(""), std::invalid_argument);
  EXPECT_EQ(io::parse_composition("2,2,2"), Composition::rectangle(2, 3));
  EXPECT_EQ(io::parse_composition("12"), Composition{12});
}

TEST(Json, RoundTrips) {
  const Tableau t = fixtures::spct_shape_1324();
  EXPECT_EQ(io::tableau_from_json(io::to_json(t)), t);
  EXPECT_EQ(io::to_json(t).dump(), R"({"shape":[1,3,2,4],"rows":[[1],[7,5,2],[6,4],[10,9,8,3]]})");
  EXPECT_EQ(io::reverse_tableau_from_json(io::to_json(fixtures::rt_3142())), fixtures::rt_3142());
  EXPECT_TRUE(io::to_json(fixtures::rt_3142())["reverse"].get<bool>());

  const auto d = fixtures::ldyck_example();
  EXPECT_EQ(io::ldyck_from_json(io::to_json(d)), d);
  EXPECT_EQ(io::ldyck_from_json(io::json{{"steps", fixtures::ldyck_path_text}}), d);

  const auto tree = fixtures::tree_example();
  EXPECT_EQ(io::ltree_from_json(io::to_json(tree)), tree);
  EXPECT_EQ(io::to_json(LabeledBinaryTree::leaf()).dump(), R"({"label":1})");
  EXPECT_THROW(io::ltree_from_json(io::json::parse(R"({"label":1,"left":{"label":3}})")), std::invalid_argument);
}

TEST(Render, TextAndDot) {
  EXPECT_EQ(io::render(Tableau(std::vector<std::vector<int>>{{10, 2}, {1}})), "10  2\n 1\n");
  const std::string dot = io::to_dot(fixtures::tree_example());
  EXPECT_NE(dot.find("5 -> 2 [label=\"L\", style=bold"), std::string::npos);
  EXPECT_NE(dot.find("5 -> 8 [label=\"R\"]"), std::string::npos);
  const std::string g = io::to_dot(build_graph({Permutation({1, 2}), Permutation({1, 2})}));
  EXPECT_NE(g.find("color=red"), std::string::npos);
  EXPECT_NE(io::orbit_dot(Composition{2, 2}).find("digraph orbit"), std::string::npos);
}

TEST(Enumerate, Counts) {
  EXPECT_EQ(cmd::enumerate({"spct", Composition{2, 2, 2}, {}, {}, cmd::default_max_objects}).results["count"], 30);
  EXPECT_EQ(cmd::enumerate({"ltree", {}, 1, {}, cmd::default_max_objects}).results["count"], 1);
  EXPECT_EQ(cmd::enumerate({"srt", Composition{2, 2}, {}, {}, cmd::default_max_objects}).results["count"], 2);
  EXPECT_EQ(cmd::enumerate({"ldyck", {}, 3, {}, cmd::default_max_objects}).results["count"], 30);
  EXPECT_THROW(cmd::enumerate({"spct", {}, {}, {}, cmd::default_max_objects}), UsageError);
  EXPECT_THROW(cmd::enumerate({"bogus", {}, 2, {}, cmd::default_max_objects}), UsageError);
}

TEST(Enumerate, WritesListing) {
  const std::string path = ::testing::TempDir() + "spct_listing.jsonl";
  cmd::enumerate({"spct", Composition{2, 2}, {}, path, cmd::default_max_objects});
  std::ifstream in(path);
  int lines = 0;
  for (std::string line; std::getline(in, line);) {
    EXPECT_NO_THROW(io::tableau_from_json(io::json::parse(line)));
    ++lines;
  }
  EXPECT_EQ(lines, 4);
}

TEST(Guard, RefusesLargeRequests) {
  EXPECT_THROW(cmd::enumerate({"ltree", {}, 9, {}, 1000}), UsageError);
  EXPECT_THROW(cmd::enumerate({"spct", Composition::rectangle(2, 8), {}, {}, 1000}), UsageError);
  EXPECT_EQ(cmd::object_cap(42), 42u);
  ::setenv("TK_MAX_OBJECTS", "77", 1);
  EXPECT_EQ(cmd::object_cap(std::nullopt), 77u);
  ::setenv("TK_MAX_OBJECTS", "lots", 1);
  EXPECT_THROW(cmd::object_cap(std::nullopt), UsageError);
  ::unsetenv("TK_MAX_OBJECTS");
  EXPECT_EQ(cmd::object_cap(std::nullopt), cmd::default_max_objects);
}

TEST(Guard, HookCountsAreExact) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& lambda : partitions_of(n)) EXPECT_EQ(cmd::hook_count(lambda), static_cast<double>(enumerate_srt(lambda).size()));
}

TEST(Verify, Counts) {
  cmd::VerifyParams p;
  p.suite = "counts";
  p.max_n = 4;
  const auto r = cmd::verify(p);
  EXPECT_EQ(r.status, 0);
  std::vector<std::uint64_t> sinks;
  for (const auto& row : r.results["sizes"]) sinks.push_back(row["sinks"].get<std::uint64_t>());
  EXPECT_EQ(sinks, (std::vector<std::uint64_t>{1, 3, 16, 125}));
}

TEST(Verify, OtherSuitesPass) {
  cmd::VerifyParams p;
  p.suite = "hecke";
  p.shape = Composition{1, 3, 2, 4};
  EXPECT_EQ(cmd::verify(p).status, 0);
  p = {};
  p.suite = "bijections";
  p.n = 4;
  EXPECT_EQ(cmd::verify(p).status, 0);
  p.n = 5;
  p.samples = 50;
  p.seed = 3;
  const auto sampled = cmd::verify(p);
  EXPECT_EQ(sampled.status, 0);
  EXPECT_EQ(sampled.results["mode"], "sampled");
  p = {};
  p.suite = "classes";
  p.n = 3;
  const auto classes = cmd::verify(p);
  EXPECT_EQ(classes.status, 0);
  EXPECT_EQ(classes.results["classes"], 16);
  p = {};
  p.suite = "pairs";
  p.max_n = 3;
  EXPECT_EQ(cmd::verify(p).status, 0);
  p.suite = "nope";
  EXPECT_THROW(cmd::verify(p), UsageError);
}

TEST(Verify, IsDeterministic) {
  cmd::VerifyParams p;
  p.suite = "bijections";
  p.n = 5;
  p.samples = 20;
  p.seed = 11;
  EXPECT_EQ(cmd::verify(p).results.dump(), cmd::verify(p).results.dump());
}

TEST(Stats, Quadruple) {
  for (int n : {1, 2, 4}) {
    const auto r = cmd::stats_quadruple(n, cmd::default_max_objects);
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(r.results["tables_equal"].get<bool>());
    EXPECT_EQ(r.results["objects"], factorial(n) * catalan(n));
  }
  const auto one = cmd::stats_quadruple(1, cmd::default_max_objects);
  EXPECT_EQ(one.results["spct"].dump(), R"([{"tuple":[0,0,0,0],"count":1}])");
}

TEST(Map, Transforms) {
  cmd::MapParams p;
  p.transform = "pct-to-rt";
  p.input = io::to_json(fixtures::pct_3142());
  EXPECT_EQ(io::reverse_tableau_from_json(cmd::map(p).results["output"]), fixtures::rt_3142());

  p.transform = "rt-to-pct";
  p.input = io::to_json(fixtures::rt_3142());
  p.sigma = "3142";
  EXPECT_EQ(io::tableau_from_json(cmd::map(p).results["output"]), fixtures::pct_3142());

  p = {};
  p.transform = "ldyck-to-ltree";
  p.input = io::to_json(fixtures::ldyck_example());
  EXPECT_EQ(cmd::map(p).results["output"]["label"], 5);

  p.transform = "ldyck-to-spct";
  EXPECT_EQ(io::tableau_from_json(cmd::map(p).results["output"]), fixtures::spct_of_ldyck_example());

  p.transform = "ltree-to-ldyck";
  p.input = io::to_json(fixtures::tree_example());
  const auto r = cmd::map(p);
  EXPECT_EQ(r.results["output"]["word"], fixtures::ldyck_word_text);
  EXPECT_EQ(r.results["trace"].size(), 20u);

  p = {};
  p.transform = "realize-pair";
  p.pair = {"1 2 3", "2 3 1"};
  const auto real = cmd::map(p);
  EXPECT_TRUE(real.results["valid"].get<bool>());
  const Tableau t = io::tableau_from_json(real.results["output"]);
  EXPECT_EQ(st(t, t.num_cols()), Permutation({2, 3, 1}));

  p.pair = {"123", "312"};
  EXPECT_THROW(cmd::map(p), UsageError);
  p = {};
  p.transform = "pct-to-rt";
  p.input = io::to_json(Tableau({{2, 1}, {3, 2}}));
  EXPECT_THROW(cmd::map(p), UsageError);
  p.input.reset();
  EXPECT_THROW(cmd::map(p), UsageError);
}

TEST(Format, CsvAndText) {
  const io::json report = {{"command", "x"}, {"results", {{"count", 3}, {"list", {1, 2}}}}};
  EXPECT_EQ(cmd::format_report(report, "csv"), "key,value\n/command,x\n/results/count,3\n/results/list,\"[1,2]\"\n");
  EXPECT_EQ(cmd::format_report(report, "text"), "/command = x\n/results/count = 3\n/results/list = [1,2]\n");
  EXPECT_THROW(cmd::format_report(report, "xml"), UsageError);
}
