#pragma once

#include <map>
#include <vector>

#include "um/space.hpp"
#include "um/tree.hpp"

namespace um {

/// Spanning path: a visiting order of all points plus the sequence of
/// consecutive edge weights (the path spectrum).
struct SpanningPath {
  std::vector<int> order;
  std::vector<Weight> spectrum;  // spectrum[i] = d(order[i], order[i+1])
};

struct Edge {
  int u, v;
  Weight w;
};

struct SpanningTree {
  int n = 0;
  std::vector<Edge> edges;  // n-1 edges forming a tree on {0..n-1}
};

/// Multiset of edge weights, weight -> multiplicity.
using WeightDistribution = std::map<Weight, int>;

/// Nearest-neighbour chain: starting from `start`, repeatedly append the
/// unvisited point closest to the last one (ties to the lowest index).
/// In an ultrametric space the result is always a minimum spanning path.
SpanningPath greedy_spanning_path(const UltrametricSpace& space, int start);

/// Same output family built from the representing tree: from the current
/// point walk to its deepest ancestor ball that still contains unvisited
/// points and take the lowest-index unvisited point inside it.
SpanningPath tree_guided_spanning_path(const UltrametricSpace& space,
                                       const RepresentingTree& tree,
                                       int start_leaf);

/// Edge-weight multiset shared by every minimum spanning tree of the
/// space: each nonzero distance d appears sum(arity(v) - 1) times over
/// the internal nodes v labeled d.
WeightDistribution mst_weight_distribution(const RepresentingTree& tree);

/// Deterministic Kruskal: edges sorted by (weight, endpoints).
SpanningTree kruskal_mst(const UltrametricSpace& space);

/// Largest edge weight on the unique path between i and j; in an
/// ultrametric space this reproduces d(i,j) for any minimum spanning
/// tree. Throws same_point.
Weight max_edge_distance(const SpanningTree& tree, int i, int j);
Weight max_edge_distance(const SpanningPath& path, int i, int j);

/// True iff the path reconstructs every distance by its maximum edge
/// weight, which in an ultrametric space characterizes the minimum
/// spanning paths. Throws not_spanning if `path` is not a permutation of
/// the points.
bool is_min_spanning_path(const UltrametricSpace& space,
                          const SpanningPath& path);

/// Reads the ballean off a minimum spanning path: the nonsingular balls
/// are exactly the runs of consecutive points whose internal weights all
/// stay strictly below both surrounding weights (a missing boundary at
/// either end imposes nothing), with diameter the largest internal
/// weight. Singletons are added. Throws not_minimal if the path fails
/// is_min_spanning_path.
Ballean balls_from_path(const UltrametricSpace& space,
                        const SpanningPath& path);

/// All minimum-weight spanning trees by exhaustive enumeration.
/// Oracle-grade: guarded to n <= 8 (throws too_large).
std::vector<SpanningTree> enumerate_min_spanning_trees(
    const UltrametricSpace& space);

Weight total_weight(const SpanningPath& path);
Weight total_weight(const SpanningTree& tree);
WeightDistribution weight_multiset(const SpanningPath& path);
WeightDistribution weight_multiset(const SpanningTree& tree);

}  // namespace um
