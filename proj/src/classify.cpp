#include "um/classify.hpp"

#include "um/msp.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace um {

namespace {

std::string canonical_shape(const RepresentingTree& tree, int v) {
  const auto& node = tree.node(v);
  if (node.children.empty()) return "()";
  std::vector<std::string> parts;
  parts.reserve(node.children.size());
  for (int c : node.children) parts.push_back(canonical_shape(tree, c));
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const std::string& p : parts) out += p;
  out += ")";
  return out;
}

}  // namespace

bool is_strictly_binary(const RepresentingTree& tree) {
  for (int v : tree.internal_ids())
    if (tree.node(v).children.size() != 2) return false;
  return true;
}

bool is_injective_labeling(const RepresentingTree& tree) {
  std::set<Weight> labels;
  for (int v : tree.internal_ids())
    if (!labels.insert(tree.node(v).label).second) return false;
  return true;
}

bool is_gomory_hu_extremal(const UltrametricSpace& space) {
  return static_cast<int>(spectrum(space).size()) == space.size();
}

bool is_maximally_rigid(const UltrametricSpace& space,
                        const RepresentingTree& tree) {
  if (tree.point_count() != space.size())
    throw Error(errc::bad_input, "tree does not match the space");
  if (!is_strictly_binary(tree)) return false;
  // Every level above the deepest must hold exactly one internal node.
  std::vector<int> internal_per_level(tree.depth() + 1, 0);
  for (int v : tree.internal_ids()) ++internal_per_level[tree.node(v).depth];
  for (int lvl = 0; lvl < tree.depth(); ++lvl)
    if (internal_per_level[lvl] != 1) return false;
  return true;
}

std::string shape_signature(const RepresentingTree& tree) {
  return canonical_shape(tree, tree.root());
}

bool all_msts_are_paths(const RepresentingTree& tree) {
  static const std::array<std::string, 5> shapes = {
      "()",                // single point
      "(()())",            // one pair + anything at distance r, n = 2..3 shapes
      "(()()())",          // equilateral triple
      "((()())())",        // pair nested under a third point
      "((()())(()()))",    // two pairs
  };
  const std::string sig = shape_signature(tree);
  return std::find(shapes.begin(), shapes.end(), sig) != shapes.end();
}

ClassReport classify(const UltrametricSpace& space,
                     const RepresentingTree& tree) {
  ClassReport report;
  report.strictly_binary = is_strictly_binary(tree);
  report.injective_labeling = is_injective_labeling(tree);
  report.gomory_hu_extremal =
      report.strictly_binary && report.injective_labeling;
  report.maximally_rigid = is_maximally_rigid(space, tree);
  report.all_msts_are_paths = all_msts_are_paths(tree);
  return report;
}

bool spectrum_criterion_strictly_binary(const std::vector<Weight>& s) {
  const int m = static_cast<int>(s.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (s[i] != s[j]) continue;
      bool separated = false;
      for (int k = i + 1; k < j && !separated; ++k) separated = s[k] > s[i];
      if (!separated) return false;
    }
  return true;
}

bool spectrum_criterion_injective(const std::vector<Weight>& s) {
  const int m = static_cast<int>(s.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (s[i] != s[j]) continue;
      for (int k = i + 1; k < j; ++k)
        if (s[k] > s[i]) return false;
    }
  return true;
}

bool spectrum_all_distinct(const std::vector<Weight>& s) {
  std::set<Weight> seen(s.begin(), s.end());
  return seen.size() == s.size();
}

bool is_strictly_monotone(const std::vector<Weight>& s) {
  if (s.size() < 2) return true;
  bool inc = true, dec = true;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (!(s[i] < s[i + 1])) inc = false;
    if (!(s[i + 1] < s[i])) dec = false;
  }
  return inc || dec;
}

bool has_monotone_min_spanning_path(const UltrametricSpace& space,
                                    const RepresentingTree& tree) {
  if (tree.point_count() != space.size())
    throw Error(errc::bad_input, "tree does not match the space");
  for (int start = 0; start < space.size(); ++start) {
    SpanningPath path = greedy_spanning_path(space, start);
    if (is_strictly_monotone(path.spectrum)) return true;
  }
  return false;
}

}  // namespace um
