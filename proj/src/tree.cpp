#include "um/tree.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace um {

namespace {

// Minimal union-find over a contiguous index range.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

void check_point(const RepresentingTree& tree, int p) {
  if (p < 0 || p >= tree.point_count())
    throw Error(errc::out_of_range, "point index out of range");
}

}  // namespace

DiametricalPartition diametrical_partition(const UltrametricSpace& space,
                                           const PointSet& set) {
  if (set.size() < 2)
    throw Error(errc::too_small,
                "diametrical partition needs at least two points");
  for (int p : set)
    if (p < 0 || p >= space.size())
      throw Error(errc::out_of_range, "point index out of range");

  const Weight diam = diameter(space, set);
  const auto& m = set.members();
  const int k = set.size();

  // d(u,v) < diam is an equivalence on the set: its classes are the parts
  // of the diametrical graph (the complement of a complete multipartite
  // graph is a disjoint union of cliques).
  UnionFind uf(k);
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (space.distance(m[a], m[b]) < diam) uf.unite(a, b);

  std::vector<std::vector<int>> groups(k);
  for (int a = 0; a < k; ++a) groups[uf.find(a)].push_back(m[a]);

  DiametricalPartition parts;
  for (auto& g : groups)
    if (!g.empty()) parts.emplace_back(std::move(g));
  std::sort(parts.begin(), parts.end(),
            [](const PointSet& a, const PointSet& b) { return a.min() < b.min(); });
  return parts;
}

RepresentingTree build_representing_tree(const UltrametricSpace& space) {
  RepresentingTree tree;
  tree.leaf_of_.assign(space.size(), -1);

  std::deque<int> work;
  tree.nodes_.push_back({PointSet::full(space.size()),
                         diameter(space, PointSet::full(space.size())), -1,
                         {}, 0});
  work.push_back(0);

  while (!work.empty()) {
    int id = work.front();
    work.pop_front();
    // Copy: nodes_ may reallocate while children are appended.
    const PointSet ball = tree.nodes_[id].ball;
    const int depth = tree.nodes_[id].depth;
    if (ball.size() == 1) {
      tree.leaf_of_[ball.min()] = id;
      continue;
    }
    for (PointSet& part : diametrical_partition(space, ball)) {
      int child = static_cast<int>(tree.nodes_.size());
      Weight label = diameter(space, part);
      tree.nodes_.push_back(
          {std::move(part), std::move(label), id, {}, depth + 1});
      tree.nodes_[id].children.push_back(child);
      work.push_back(child);
    }
  }
  return tree;
}

int RepresentingTree::depth() const {
  int d = 0;
  for (const Node& n : nodes_) d = std::max(d, n.depth);
  return d;
}

std::vector<int> RepresentingTree::internal_ids() const {
  std::vector<int> ids;
  for (int i = 0; i < node_count(); ++i)
    if (!is_leaf(i)) ids.push_back(i);
  return ids;
}

Ballean ballean(const RepresentingTree& tree) {
  Ballean balls;
  balls.reserve(tree.node_count());
  for (const auto& node : tree.nodes())
    balls.push_back({node.ball, node.label});
  return balls;
}

Weight tree_distance(const RepresentingTree& tree, int i, int j) {
  check_point(tree, i);
  check_point(tree, j);
  if (i == j)
    throw Error(errc::same_point, "tree distance between a point and itself");
  // Walk both leaves up to their lowest common ancestor; since labels
  // strictly decrease downward, its label is the maximum on the path.
  int a = tree.leaf_of(i);
  int b = tree.leaf_of(j);
  while (a != b) {
    if (tree.node(a).depth >= tree.node(b).depth)
      a = tree.node(a).parent;
    else
      b = tree.node(b).parent;
  }
  return tree.node(a).label;
}

bool LevelGraph::adjacent(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

LevelGraph level_graph(const UltrametricSpace& space, const Weight& t) {
  if (t.is_zero())
    throw Error(errc::not_in_spectrum, "level graphs exist for nonzero t only");
  LevelGraph g;
  g.t = t;
  std::vector<bool> touched(space.size(), false);
  for (int i = 0; i < space.size(); ++i)
    for (int j = i + 1; j < space.size(); ++j)
      if (space.distance(i, j) == t) {
        g.edges.emplace_back(i, j);
        touched[i] = touched[j] = true;
      }
  if (g.edges.empty())
    throw Error(errc::not_in_spectrum,
                "no pair at distance " + t.str() + " in this space");
  for (int i = 0; i < space.size(); ++i)
    if (touched[i]) g.vertices.push_back(i);
  return g;
}

std::optional<std::vector<PointSet>> multipartite_parts(
    const LevelGraph& graph) {
  const auto& vs = graph.vertices;
  const int k = static_cast<int>(vs.size());

  // Group vertices by connected components of the complement graph, then
  // insist each component is a complement-clique (pairwise non-adjacent).
  UnionFind uf(k);
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (!graph.adjacent(vs[a], vs[b])) uf.unite(a, b);

  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (uf.find(a) == uf.find(b) && graph.adjacent(vs[a], vs[b]))
        return std::nullopt;

  std::vector<std::vector<int>> groups(k);
  for (int a = 0; a < k; ++a) groups[uf.find(a)].push_back(vs[a]);
  std::vector<PointSet> parts;
  for (auto& g : groups)
    if (!g.empty()) parts.emplace_back(std::move(g));
  if (parts.size() < 2) return std::nullopt;
  std::sort(parts.begin(), parts.end(),
            [](const PointSet& a, const PointSet& b) { return a.min() < b.min(); });
  return parts;
}

bool is_complete_multipartite(const LevelGraph& graph) {
  if (graph.vertices.empty())
    throw Error(errc::empty_graph, "complete multipartite test on an empty graph");
  return multipartite_parts(graph).has_value();
}

}  // namespace um
