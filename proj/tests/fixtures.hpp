#pragma once

// Worked examples shared by the unit tests and the acceptance binary.

#include <string>
#include <vector>

#include "pct/io.hpp"
#include "pct/pct.hpp"

namespace fixtures {

using pct::Composition;
using pct::Tableau;

inline Tableau pct_shape_1324() { return Tableau({{1}, {4, 3, 2}, {3, 2}, {7, 5, 5, 3}}); }
inline Tableau spct_shape_1324() { return Tableau({{1}, {7, 5, 2}, {6, 4}, {10, 9, 8, 3}}); }

inline pct::ReverseTableau rt_3142() { return pct::ReverseTableau(Composition{4, 3, 3, 1}, {{11, 8, 6, 4}, {10, 7, 5}, {9, 3, 1}, {2}}); }
inline Tableau pct_3142() { return Tableau({{10, 8, 6, 4}, {2}, {11, 7, 5}, {9, 3, 1}}); }

inline Tableau source_example() { return Tableau({{1}, {6, 5, 4}, {3, 2}, {10, 9, 8, 7}}); }
inline Tableau sink_example() { return Tableau({{3}, {8, 5, 1}, {7, 4}, {10, 9, 6, 2}}); }

inline const std::string ldyck_path_text = "U U D7 D3 U U U U D4 U D1 D10 U D6 D8 U U D9 D2 D5";
inline const std::string ldyck_word_text = "U7 U3 D7 D3 U10 U9 U8 U4 D4 U1 D1 D10 U6 D6 D8 U5 U2 D9 D2 D5";

inline pct::LabeledDyckPath ldyck_example() { return pct::io::parse_ldyck(ldyck_path_text); }

inline Tableau spct_of_ldyck_example() {
  return Tableau({{11, 10}, {19, 17}, {4, 2}, {9, 8}, {20, 16}, {14, 13}, {3, 1}, {15, 7}, {18, 6}, {12, 5}});
}

/// Tree produced from the labeled Dyck path example.
inline pct::LabeledBinaryTree tree_example() {
  //              1  2  3  4  5  6  7  8  9  10
  std::vector<int> left{0, 0, 9, 7, 0, 2, 0, 0, 6, 0, 1};
  std::vector<int> right{0, 4, 0, 0, 0, 8, 10, 0, 0, 0, 3};
  return pct::LabeledBinaryTree(5, left, right);
}

/// Push/pop trace of the tree-to-path algorithm on tree_example().
inline const std::string worked_trace =
    "push 5, push 2, push 9, pop 2, pop 5, push 8, push 6, pop 6, push 10, push 1, "
    "pop 1, push 4, pop 4, pop 8, pop 9, pop 10, push 3, push 7, pop 3, pop 7";

inline std::string trace_string(const std::vector<pct::PushPopOp>& trace) {
  std::string out;
  for (const auto& op : trace) {
    if (!out.empty()) out += ", ";
    out += (op.kind == pct::PushPopOp::Kind::push ? "push " : "pop ") + std::to_string(op.label);
  }
  return out;
}

}  // namespace fixtures
