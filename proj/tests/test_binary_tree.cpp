#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pct/binary_tree.hpp"
#include "pct/commands.hpp"
#include "pct/io.hpp"

using namespace pct;

TEST(Tree, Validation) {
  EXPECT_NO_THROW(LabeledBinaryTree::leaf());
  EXPECT_THROW(LabeledBinaryTree(1, {0, 2, 1}, {0, 0, 0}), std::invalid_argument);  // cycle
  EXPECT_THROW(LabeledBinaryTree(1, {0, 0, 0}, {0, 0, 0}), std::invalid_argument);  // disconnected
  EXPECT_THROW(LabeledBinaryTree(1, {0, 2, 0}, {0, 2, 0}), std::invalid_argument);  // two parents
  EXPECT_THROW(LabeledBinaryTree(3, {0, 0}, {0, 0}), std::invalid_argument);
}

TEST(Tree, Mlpd) {
  EXPECT_EQ(mlpd(LabeledBinaryTree::leaf()).size(), 1u);
  const LabeledBinaryTree chain(1, {0, 2, 3, 0}, {0, 0, 0, 0});
  EXPECT_EQ(mlpd(chain).size(), 1u);
  const auto paths = mlpd(fixtures::tree_example());
  ASSERT_EQ(paths.size(), 5u);
  const std::set<std::vector<int>> expected{{5, 2, 9}, {8, 6}, {10, 1}, {4}, {3, 7}};
  std::set<std::vector<int>> found;
  for (const auto& p : paths) found.insert(p.labels);
  EXPECT_EQ(found, expected);
  EXPECT_FALSE(paths.front().parent.has_value());
  for (std::size_t i = 1; i < paths.size(); ++i) EXPECT_TRUE(paths[i].parent.has_value());
}

TEST(Tree, EdgeStats) {
  EXPECT_EQ(edge_stats(LabeledBinaryTree::leaf()), (EdgeStats{0, 0, 0, 0}));
  const LabeledBinaryTree chain(1, {0, 2, 3, 0}, {0, 0, 0, 0});
  EXPECT_EQ(edge_stats(chain), (EdgeStats{2, 0, 0, 0}));
  EXPECT_EQ(edge_stats(fixtures::tree_example()), (EdgeStats{2, 3, 3, 1}));
}

TEST(PathToTree, WorkedExample) {
  const LabeledBinaryTree t = ldyck_to_ltree(fixtures::ldyck_example());
  EXPECT_EQ(t, fixtures::tree_example());
  EXPECT_EQ(t.root(), 5);
  EXPECT_EQ(ldyck_to_ltree(io::parse_ldyck("U D1")), LabeledBinaryTree::leaf());
}

TEST(PathToTree, RootIsLastDownLabel) {
  for (int n = 1; n <= 4; ++n)
    for_each_ldyck(n, [&](const LabeledDyckPath& d) { EXPECT_EQ(ldyck_to_ltree(d).root(), d.steps().back().label); });
}

TEST(PathToTree, AdjacentLettersDetermineChildren) {
  for (int n = 1; n <= 4; ++n)
    for_each_ldyck(n, [&](const LabeledDyckPath& d) {
      const auto t = ldyck_to_ltree(d);
      const auto w = labeled_dyck_word(d);
      for (std::size_t p = 0; p + 1 < w.size(); ++p) {
        if (w[p].kind != StepKind::down) continue;
        if (w[p + 1].kind == StepKind::down) {
          EXPECT_EQ(t.left(w[p + 1].label), w[p].label);
        } else {
          EXPECT_EQ(t.right(w[p + 1].label), w[p].label);
        }
      }
    });
}

TEST(TreeToPath, WorkedTrace) {
  const auto res = ltree_to_ldyck_traced(fixtures::tree_example());
  EXPECT_EQ(fixtures::trace_string(res.trace), fixtures::worked_trace);
  EXPECT_EQ(res.trace.size(), 20u);
  EXPECT_EQ(io::to_string(res.word), fixtures::ldyck_word_text);
  EXPECT_EQ(res.path, fixtures::ldyck_example());
  EXPECT_EQ(io::to_string(ltree_to_ldyck(LabeledBinaryTree::leaf())), "U D1");
}

TEST(TreeToPath, PushesNeverTrailPops) {
  for (int n = 1; n <= 4; ++n)
    for_each_ltree(n, [&](const LabeledBinaryTree& t) {
      const auto res = ltree_to_ldyck_traced(t);
      int balance = 0;
      for (const auto& op : res.trace) {
        balance += op.kind == PushPopOp::Kind::push ? 1 : -1;
        EXPECT_GE(balance, 0);
      }
      EXPECT_EQ(balance, 0);
    });
}

TEST(TreePathBijection, MutuallyInverseUpToFour) {
  for (int n = 1; n <= 4; ++n) {
    std::set<LabeledBinaryTree> images;
    for_each_ldyck(n, [&](const LabeledDyckPath& d) {
      const auto t = ldyck_to_ltree(d);
      EXPECT_EQ(ltree_to_ldyck(t), d);
      images.insert(t);
    });
    const auto all = enumerate_ltrees(n);
    EXPECT_EQ(std::set<LabeledBinaryTree>(all.begin(), all.end()), images);
    for (const auto& t : all) EXPECT_EQ(ldyck_to_ltree(ltree_to_ldyck(t)), t);
  }
}

TEST(TreePathBijection, SampledAtFiveAndSix) {
  std::mt19937_64 rng(7);
  for (int n : {5, 6})
    for (int s = 0; s < 300; ++s) {
      const auto d = cmd::random_ldyck(n, rng);
      const auto t = ldyck_to_ltree(d);
      EXPECT_EQ(ltree_to_ldyck(t), d);
      EXPECT_EQ(ldyck_to_ltree(ltree_to_ldyck(t)), t);
    }
}

TEST(Enumerate, Counts) {
  const std::vector<std::size_t> expected{1, 4, 30, 336};
  for (int n = 1; n <= 4; ++n) {
    const auto all = enumerate_ltrees(n);
    EXPECT_EQ(all.size(), expected[n - 1]);
    EXPECT_EQ(std::set<LabeledBinaryTree>(all.begin(), all.end()).size(), all.size());
  }
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(enumerate_tree_shapes(n).size(), oracle::catalan(n));
}

TEST(Statistics, TransportUpToFive) {
  for (int n = 1; n <= 5; ++n)
    for_each_spct(Composition::rectangle(2, n), [&](const Tableau& t) {
      const auto q = descent_quadruple(t);
      const auto e = edge_stats(ldyck_to_ltree(spct_to_ldyck(t)));
      EXPECT_EQ(q.north, e.lasc);
      EXPECT_EQ(q.south, e.ldes);
      EXPECT_EQ(q.north_east, e.rasc);
      EXPECT_EQ(q.south_east, e.rdes);
    });
}

TEST(Statistics, TreesWithoutRightAscents) {
  for (int n = 1; n <= 5; ++n) {
    std::uint64_t count = 0;
    for_each_ltree(n, [&](const LabeledBinaryTree& t) { count += edge_stats(t).rasc == 0; });
    EXPECT_EQ(count, int_pow(static_cast<std::uint64_t>(n) + 1, n - 1));
  }
}
