#pragma once

/**
 * @file io.hpp
 * @brief Parsing, JSON (de)serialization, DOT export and text rendering.
 *
 * JSON formats:
 *  - Permutation: array of images, e.g. [3,1,4,2].
 *  - Tableau: {"shape":[...], "rows":[[...],...]}; a reverse tableau adds "reverse": true.
 *  - Labeled Dyck path: {"n": k, "steps": ["U","D7",...]}; "steps" may also be a
 *    space-separated string. If any up-step carries a label the input is read as a
 *    full labeled Dyck word and checked against the min-rule.
 *  - Labeled binary tree: nested {"label": k, "left": {...}, "right": {...}},
 *    absent children omitted.
 */

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "pct/allowable.hpp"
#include "pct/binary_tree.hpp"
#include "pct/core.hpp"
#include "pct/dyck.hpp"
#include "pct/hecke.hpp"
#include "pct/tableau.hpp"

namespace pct::io {

using json = nlohmann::ordered_json;

namespace detail {
inline std::vector<int> parse_ints(const std::string& text, bool allow_digit_string) {
  std::string trimmed;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)) || !trimmed.empty()) trimmed.push_back(ch);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.pop_back();
  if (trimmed.empty()) throw std::invalid_argument("empty input");

  const bool has_separator = trimmed.find_first_of(", \t") != std::string::npos;
  std::vector<int> out;
  if (!has_separator && allow_digit_string && trimmed.size() > 1) {
    for (char ch : trimmed) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw std::invalid_argument("bad character '" + std::string(1, ch) + "' in '" + text + "'");
      out.push_back(ch - '0');
    }
    return out;
  }
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw std::invalid_argument("not an integer: '" + token + "'");
    out.push_back(v);
    token.clear();
  };
  for (char ch : trimmed) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      flush();
    } else {
      token.push_back(ch);
    }
  }
  flush();
  return out;
}
}  // namespace detail

/// Accepts "3142", "3 1 4 2" or "3,1,4,2".
inline Permutation parse_permutation(const std::string& text) { return Permutation(detail::parse_ints(text, true)); }

/// Accepts "2,2,2" or "2 2 2".
inline Composition parse_composition(const std::string& text) { return Composition(detail::parse_ints(text, false)); }

inline std::string to_string(const Permutation& p) {
  std::string out;
  const bool spaced = p.size() > 9;
  for (int i = 1; i <= p.size(); ++i) {
    if (spaced && i > 1) out += ' ';
    out += std::to_string(p(i));
  }
  return out;
}

inline std::string to_string(const Composition& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.parts().size(); ++i) out += (i ? "," : "") + std::to_string(c.parts()[i]);
  return out + ")";
}

inline json to_json(const Permutation& p) { return p.images(); }
inline json to_json(const Composition& c) { return c.parts(); }

inline json to_json(const Tableau& t) {
  json j;
  j["shape"] = t.shape().parts();
  j["rows"] = t.rows();
  return j;
}

inline json to_json(const ReverseTableau& rt) {
  json j = to_json(rt.filling());
  j["reverse"] = true;
  return j;
}

inline Tableau tableau_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows")) throw std::invalid_argument("tableau JSON needs a \"rows\" array");
  auto rows = j.at("rows").get<std::vector<std::vector<int>>>();
  if (j.contains("shape")) return Tableau(Composition(j.at("shape").get<std::vector<int>>()), std::move(rows));
  return Tableau(std::move(rows));
}

inline ReverseTableau reverse_tableau_from_json(const json& j) {
  Tableau t = tableau_from_json(j);
  return ReverseTableau(t.shape(), t.rows());
}

inline std::string to_string(const LabeledStep& s) { return s.kind == StepKind::up ? "U" : "D" + std::to_string(s.label); }
inline std::string to_string(const LabeledLetter& l) { return (l.kind == StepKind::up ? "U" : "D") + std::to_string(l.label); }

inline std::string to_string(const LabeledDyckPath& d) {
  std::string out;
  for (const auto& s : d.steps()) out += (out.empty() ? "" : " ") + to_string(s);
  return out;
}

inline std::string to_string(const LabeledDyckWord& w) {
  std::string out;
  for (const auto& l : w) out += (out.empty() ? "" : " ") + to_string(l);
  return out;
}

inline std::string to_string(const DyckPath& d) {
  std::string out;
  for (StepKind s : d.steps()) out += s == StepKind::up ? 'U' : 'D';
  return out;
}

inline json to_json(const LabeledDyckPath& d) {
  json j;
  j["n"] = d.semi_length();
  json steps = json::array();
  for (const auto& s : d.steps()) steps.push_back(to_string(s));
  j["steps"] = std::move(steps);
  j["word"] = to_string(labeled_dyck_word(d));
  return j;
}

/// Parses "U U D7 D3 ..." or a full word "U7 U3 D7 D3 ...".
inline LabeledDyckPath parse_ldyck(const std::vector<std::string>& tokens) {
  LabeledDyckWord word;
  bool labeled_ups = false;
  for (const auto& tok : tokens) {
    if (tok.empty() || (tok[0] != 'U' && tok[0] != 'D')) throw std::invalid_argument("bad step token '" + tok + "'");
    int label = 0;
    if (tok.size() > 1) {
      std::size_t used = 0;
      try {
        label = std::stoi(tok.substr(1), &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() - 1) throw std::invalid_argument("bad step label in '" + tok + "'");
    }
    if (tok[0] == 'U') {
      labeled_ups = labeled_ups || tok.size() > 1;
      word.push_back({StepKind::up, label});
    } else {
      if (tok.size() == 1) throw std::invalid_argument("down-step '" + tok + "' needs a label");
      word.push_back({StepKind::down, label});
    }
  }
  if (labeled_ups) return path_of_word(word);
  std::vector<LabeledStep> steps;
  for (const auto& l : word) steps.push_back(l.kind == StepKind::up ? LabeledStep::up() : LabeledStep::down(l.label));
  return LabeledDyckPath(std::move(steps));
}

inline LabeledDyckPath parse_ldyck(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  return parse_ldyck(tokens);
}

inline LabeledDyckPath ldyck_from_json(const json& j) {
  const json& steps = j.is_object() ? j.at("steps") : j;
  LabeledDyckPath d = steps.is_string() ? parse_ldyck(steps.get<std::string>()) : parse_ldyck(steps.get<std::vector<std::string>>());
  if (j.is_object() && j.contains("n") && j.at("n").get<int>() != d.semi_length())
    throw std::invalid_argument("\"n\" does not match the number of steps");
  return d;
}

inline json to_json(const LabeledBinaryTree& t, int v) {
  json j;
  j["label"] = v;
  if (t.left(v)) j["left"] = to_json(t, t.left(v));
  if (t.right(v)) j["right"] = to_json(t, t.right(v));
  return j;
}

inline json to_json(const LabeledBinaryTree& t) { return to_json(t, t.root()); }

inline LabeledBinaryTree ltree_from_json(const json& j) {
  std::map<int, std::pair<int, int>> children;
  auto walk = [&](auto&& self, const json& node) -> int {
    if (!node.is_object() || !node.contains("label")) throw std::invalid_argument("tree node needs a \"label\"");
    const int v = node.at("label").get<int>();
    if (children.count(v)) throw std::invalid_argument("label " + std::to_string(v) + " appears twice");
    children[v] = {0, 0};
    const int l = node.contains("left") ? self(self, node.at("left")) : 0;
    const int r = node.contains("right") ? self(self, node.at("right")) : 0;
    children[v] = {l, r};
    return v;
  };
  const int root = walk(walk, j);
  const int n = static_cast<int>(children.size());
  std::vector<int> left(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> right(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [v, lr] : children) {
    if (v < 1 || v > n) throw std::invalid_argument("labels must be exactly 1.." + std::to_string(n));
    left[v] = lr.first;
    right[v] = lr.second;
  }
  return LabeledBinaryTree(root, std::move(left), std::move(right));
}

inline json to_json(const EdgeStats& s) { return {{"lasc", s.lasc}, {"ldes", s.ldes}, {"rasc", s.rasc}, {"rdes", s.rdes}}; }

inline json to_json(const DescentQuadruple& q) {
  return {{"N", q.north}, {"S", q.south}, {"NE", q.north_east}, {"SE", q.south_east}};
}

inline json to_json(const std::vector<PushPopOp>& trace) {
  json out = json::array();
  for (const auto& op : trace) {
    out.push_back({{"op", op.kind == PushPopOp::Kind::push ? "push" : "pop"}, {"label", op.label}, {"queue", op.queue_after}});
  }
  return out;
}

inline json to_json(const PermGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges)
    edges.push_back({{"from", {e.from.row, e.from.col}}, {"to", {e.to.row, e.to.col}}, {"kind", to_string(e.kind)}});
  return {{"n", g.n}, {"k", g.k}, {"edges", std::move(edges)}};
}

/// Rows top to bottom, entries separated by spaces; wide entries are padded.
inline std::string render(const Tableau& t) {
  int width = 1;
  for (const auto& row : t.rows())
    for (int v : row) width = std::max(width, static_cast<int>(std::to_string(v).size()));
  std::string out;
  for (const auto& row : t.rows()) {
    std::string line;
    for (int v : row) {
      std::string s = std::to_string(v);
      if (!line.empty()) line += ' ';
      line += std::string(static_cast<std::size_t>(width) - s.size(), ' ') + s;
    }
    out += line + '\n';
  }
  return out;
}

/// Tree as DOT; left and right descent edges drawn bold.
inline std::string to_dot(const LabeledBinaryTree& t) {
  std::ostringstream out;
  out << "digraph tree {\n  node [shape=circle];\n";
  for (int v = 1; v <= t.size(); ++v) out << "  " << v << ";\n";
  for (int v = 1; v <= t.size(); ++v) {
    for (auto [c, side] : {std::pair{t.left(v), "L"}, std::pair{t.right(v), "R"}}) {
      if (!c) continue;
      out << "  " << v << " -> " << c << " [label=\"" << side << "\"" << (v > c ? ", style=bold, penwidth=3" : "") << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

/// Graph G as DOT; horizontal black, vertical blue, diagonal red.
inline std::string to_dot(const PermGraph& g) {
  auto name = [](Cell c) { return "\"(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")\""; };
  std::ostringstream out;
  out << "digraph G {\n  rankdir=LR;\n";
  for (int v = 0; v < g.node_count(); ++v) {
    const Cell c = g.cell(v);
    out << "  " << name(c) << " [pos=\"" << c.col << "," << -c.row << "!\"];\n";
  }
  for (const auto& e : g.edges) {
    const char* color = e.kind == EdgeKind::horizontal ? "black" : e.kind == EdgeKind::vertical ? "blue" : "red";
    out << "  " << name(e.from) << " -> " << name(e.to) << " [color=" << color << "];\n";
  }
  out << "}\n";
  return out.str();
}

/// Moved-transitions of pi_i between SPCTs of one shape, as DOT.
inline std::string orbit_dot(const Composition& shape) {
  const auto all = enumerate_spct(shape);
  std::map<Tableau, std::size_t> index;
  for (std::size_t m = 0; m < all.size(); ++m) index.emplace(all[m], m);
  std::ostringstream out;
  out << "digraph orbit {\n  node [shape=box, fontname=monospace];\n";
  for (std::size_t m = 0; m < all.size(); ++m) {
    std::string label = render(all[m]);
    std::string escaped;
    for (char ch : label) escaped += ch == '\n' ? std::string("\\l") : std::string(1, ch);
    out << "  t" << m << " [label=\"" << escaped << "\"" << (is_sink(all[m]) ? ", style=bold" : "") << "];\n";
  }
  for (std::size_t m = 0; m < all.size(); ++m) {
    for (int i = 1; i < shape.size(); ++i) {
      HeckeResult r = pi(all[m], i);
      if (r.moved()) out << "  t" << m << " -> t" << index.at(r.tableau()) << " [label=\"" << i << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace pct::io
