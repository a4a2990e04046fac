#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "um/space.hpp"

namespace um {

/// Parts of the diametrical graph of a point set: u and v fall in the
/// same part iff d(u,v) < diam. Parts are sorted by smallest member.
using DiametricalPartition = std::vector<PointSet>;

/// Equivalence classes of d(u,v) < diam(set) on `set`; at least two parts,
/// every cross-part pair realizes the diameter. Throws too_small if
/// |set| < 2.
DiametricalPartition diametrical_partition(const UltrametricSpace& space,
                                           const PointSet& set);

/// Rooted tree whose nodes are the closed balls of a space, each labeled
/// by its diameter. The root is the whole space; children of an internal
/// node are its diametrical parts; leaves are the singletons (label 0);
/// labels strictly decrease along every root-to-leaf path.
///
/// Node ids are assigned in construction order: parent before children,
/// children ordered by smallest contained point. The root has id 0.
class RepresentingTree {
 public:
  struct Node {
    PointSet ball;
    Weight label;  // diameter of `ball`
    int parent;    // -1 for the root
    std::vector<int> children;
    int depth;
  };

  int root() const { return 0; }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  const Node& node(int id) const { return nodes_[id]; }
  const std::vector<Node>& nodes() const { return nodes_; }
  bool is_leaf(int id) const { return nodes_[id].children.empty(); }
  int leaf_of(int point) const { return leaf_of_[point]; }
  int point_count() const { return static_cast<int>(leaf_of_.size()); }
  int depth() const;  // max node depth
  std::vector<int> internal_ids() const;

  friend RepresentingTree build_representing_tree(const UltrametricSpace&);

 private:
  RepresentingTree() = default;

  std::vector<Node> nodes_;
  std::vector<int> leaf_of_;
};

RepresentingTree build_representing_tree(const UltrametricSpace& space);

/// A closed ball together with its diameter.
struct Ball {
  PointSet points;
  Weight diameter;

  friend bool operator==(const Ball& a, const Ball& b) = default;
  friend bool operator<(const Ball& a, const Ball& b) {
    if (a.points != b.points) return a.points < b.points;
    return a.diameter < b.diameter;
  }
};

/// All closed balls of the space. One ball per tree node, in node-id
/// order; the family is laminar (two balls are disjoint or nested).
using Ballean = std::vector<Ball>;

Ballean ballean(const RepresentingTree& tree);

/// d(i,j) read off the tree: the label of the lowest common ancestor of
/// the two leaves, which is the largest label on the path joining them.
/// Throws same_point if i == j.
Weight tree_distance(const RepresentingTree& tree, int i, int j);

/// The graph on the points at pairwise distance exactly t, with isolated
/// vertices removed.
struct LevelGraph {
  Weight t;
  std::vector<int> vertices;              // ascending point indices
  std::vector<std::pair<int, int>> edges;  // u < v, lexicographic

  bool adjacent(int u, int v) const;
};

/// Throws not_in_spectrum unless t is a nonzero spectrum value.
LevelGraph level_graph(const UltrametricSpace& space, const Weight& t);

/// True iff the vertices split into k >= 2 groups with no edges inside a
/// group and all edges across groups; equivalently the complement graph
/// is a disjoint union of cliques. Throws empty_graph on a vertex-free
/// graph.
bool is_complete_multipartite(const LevelGraph& graph);

/// The parts when the graph is complete multipartite (sorted by smallest
/// member), nullopt otherwise.
std::optional<std::vector<PointSet>> multipartite_parts(
    const LevelGraph& graph);

}  // namespace um
