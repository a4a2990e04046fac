#include "um/msp.hpp"

#include <algorithm>
#include <numeric>

namespace um {

namespace {

void check_point(const UltrametricSpace& space, int p) {
  if (p < 0 || p >= space.size())
    throw Error(errc::out_of_range, "point index out of range");
}

int find_parent(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

SpanningPath greedy_spanning_path(const UltrametricSpace& space, int start) {
  check_point(space, start);
  const int n = space.size();
  SpanningPath path;
  path.order.reserve(n);
  std::vector<bool> visited(n, false);
  path.order.push_back(start);
  visited[start] = true;
  for (int step = 1; step < n; ++step) {
    const int last = path.order.back();
    int best = -1;
    for (int x = 0; x < n; ++x) {
      if (visited[x]) continue;
      if (best == -1 || space.distance(x, last) < space.distance(best, last))
        best = x;  // ties resolved to the lowest index by scan order
    }
    visited[best] = true;
    path.order.push_back(best);
    path.spectrum.push_back(space.distance(path.order[step - 1], best));
  }
  return path;
}

SpanningPath tree_guided_spanning_path(const UltrametricSpace& space,
                                       const RepresentingTree& tree,
                                       int start_leaf) {
  check_point(space, start_leaf);
  if (tree.point_count() != space.size())
    throw Error(errc::bad_input, "tree does not match the space");
  const int n = space.size();

  // remaining[v] = unvisited points in the ball of v
  std::vector<int> remaining(tree.node_count());
  for (int v = 0; v < tree.node_count(); ++v)
    remaining[v] = tree.node(v).ball.size();
  auto mark_visited = [&](int point) {
    for (int v = tree.leaf_of(point); v != -1; v = tree.node(v).parent)
      --remaining[v];
  };

  SpanningPath path;
  path.order.reserve(n);
  path.order.push_back(start_leaf);
  mark_visited(start_leaf);

  std::vector<bool> visited(n, false);
  visited[start_leaf] = true;

  for (int step = 1; step < n; ++step) {
    const int current = path.order.back();
    // Deepest ancestor ball of the current point that still contains an
    // unvisited point; ancestors are totally ordered, so the first hit
    // walking upward is the unique deepest one.
    int v = tree.leaf_of(current);
    while (remaining[v] == 0) v = tree.node(v).parent;
    int next = -1;
    for (int p : tree.node(v).ball) {
      if (!visited[p]) {
        next = p;  // lowest unvisited index in the ball
        break;
      }
    }
    visited[next] = true;
    mark_visited(next);
    path.order.push_back(next);
    path.spectrum.push_back(space.distance(current, next));
  }
  return path;
}

WeightDistribution mst_weight_distribution(const RepresentingTree& tree) {
  WeightDistribution counts;
  for (int v : tree.internal_ids()) {
    const auto& node = tree.node(v);
    counts[node.label] += static_cast<int>(node.children.size()) - 1;
  }
  return counts;
}

SpanningTree kruskal_mst(const UltrametricSpace& space) {
  const int n = space.size();
  std::vector<Edge> all;
  all.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) all.push_back({i, j, space.distance(i, j)});
  std::stable_sort(all.begin(), all.end(), [](const Edge& a, const Edge& b) {
    if (a.w != b.w) return a.w < b.w;
    if (a.u != b.u) return a.u < b.u;
    return a.v < b.v;
  });

  SpanningTree mst;
  mst.n = n;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (const Edge& e : all) {
    int a = find_parent(parent, e.u);
    int b = find_parent(parent, e.v);
    if (a == b) continue;
    parent[a] = b;
    mst.edges.push_back(e);
    if (static_cast<int>(mst.edges.size()) == n - 1) break;
  }
  return mst;
}

Weight max_edge_distance(const SpanningTree& tree, int i, int j) {
  if (i < 0 || i >= tree.n || j < 0 || j >= tree.n)
    throw Error(errc::out_of_range, "point index out of range");
  if (i == j)
    throw Error(errc::same_point, "max edge distance of a point to itself");

  std::vector<std::vector<std::pair<int, const Weight*>>> adj(tree.n);
  for (const Edge& e : tree.edges) {
    adj[e.u].emplace_back(e.v, &e.w);
    adj[e.v].emplace_back(e.u, &e.w);
  }
  // DFS from i, remembering the largest weight seen on the way.
  std::vector<bool> seen(tree.n, false);
  std::vector<std::pair<int, const Weight*>> stack{{i, nullptr}};
  std::vector<Weight> best(tree.n);
  seen[i] = true;
  while (!stack.empty()) {
    auto [u, w] = stack.back();
    stack.pop_back();
    if (u == j) return best[u];
    for (auto [v, ew] : adj[u]) {
      if (seen[v]) continue;
      seen[v] = true;
      best[v] = std::max(best[u], *ew);
      stack.push_back({v, ew});
    }
  }
  throw Error(errc::bad_input, "edges do not connect the two points");
}

Weight max_edge_distance(const SpanningPath& path, int i, int j) {
  if (i == j)
    throw Error(errc::same_point, "max edge distance of a point to itself");
  int pi = -1, pj = -1;
  for (int p = 0; p < static_cast<int>(path.order.size()); ++p) {
    if (path.order[p] == i) pi = p;
    if (path.order[p] == j) pj = p;
  }
  if (pi < 0 || pj < 0)
    throw Error(errc::out_of_range, "point not on the path");
  if (pi > pj) std::swap(pi, pj);
  Weight best = path.spectrum[pi];
  for (int p = pi + 1; p < pj; ++p) best = std::max(best, path.spectrum[p]);
  return best;
}

bool is_min_spanning_path(const UltrametricSpace& space,
                          const SpanningPath& path) {
  const int n = space.size();
  if (static_cast<int>(path.order.size()) != n)
    throw Error(errc::not_spanning, "path does not span all points");
  std::vector<bool> seen(n, false);
  for (int p : path.order) {
    if (p < 0 || p >= n || seen[p])
      throw Error(errc::not_spanning, "path is not a permutation of the points");
    seen[p] = true;
  }
  // A spanning path of an ultrametric space is minimum iff the largest
  // edge weight between any two points reproduces their distance.
  for (int a = 0; a < n; ++a) {
    Weight run;
    for (int b = a + 1; b < n; ++b) {
      run = b == a + 1 ? space.distance(path.order[a], path.order[b])
                       : std::max(run, space.distance(path.order[b - 1],
                                                      path.order[b]));
      if (run != space.distance(path.order[a], path.order[b])) return false;
    }
  }
  return true;
}

Ballean balls_from_path(const UltrametricSpace& space,
                        const SpanningPath& path) {
  if (!is_min_spanning_path(space, path))
    throw Error(errc::not_minimal, "not a minimum spanning path");
  const int n = space.size();
  std::vector<Weight> s;  // actual consecutive distances
  for (int p = 0; p + 1 < n; ++p)
    s.push_back(space.distance(path.order[p], path.order[p + 1]));

  Ballean balls;
  for (int p = 0; p < n; ++p)
    balls.push_back({PointSet::single(path.order[p]), Weight{}});

  // A run order[a..b] is a ball iff every weight inside stays strictly
  // below both boundary weights s[a-1] and s[b]; a boundary missing at
  // either end of the path imposes nothing. Its diameter is the largest
  // internal weight.
  for (int a = 0; a < n; ++a) {
    Weight internal_max;
    for (int b = a + 1; b < n; ++b) {
      internal_max = b == a + 1 ? s[a] : std::max(internal_max, s[b - 1]);
      const bool left_ok = a == 0 || internal_max < s[a - 1];
      const bool right_ok = b == n - 1 || internal_max < s[b];
      if (left_ok && right_ok) {
        std::vector<int> pts(path.order.begin() + a,
                             path.order.begin() + b + 1);
        balls.push_back({PointSet(std::move(pts)), internal_max});
      }
    }
  }
  std::sort(balls.begin(), balls.end());
  return balls;
}

std::vector<SpanningTree> enumerate_min_spanning_trees(
    const UltrametricSpace& space) {
  const int n = space.size();
  if (n > 8)
    throw Error(errc::too_large,
                "exhaustive spanning tree enumeration is limited to 8 points");
  if (n == 1) return {SpanningTree{1, {}}};

  std::vector<SpanningTree> best;
  Weight best_weight;
  auto offer = [&](SpanningTree t) {
    Weight w = total_weight(t);
    if (best.empty() || w < best_weight) {
      best.clear();
      best_weight = w;
    }
    if (w == best_weight) best.push_back(std::move(t));
  };

  if (n == 2) {
    offer(SpanningTree{2, {Edge{0, 1, space.distance(0, 1)}}});
    return best;
  }

  // Every labeled tree on n vertices corresponds to exactly one Pruefer
  // sequence of length n-2.
  std::vector<int> seq(n - 2, 0);
  while (true) {
    SpanningTree t;
    t.n = n;
    std::vector<int> degree(n, 1);
    for (int v : seq) ++degree[v];
    std::vector<bool> used(n, false);
    for (int i = 0; i < n - 2; ++i) {
      int leaf = -1;
      for (int v = 0; v < n; ++v)
        if (!used[v] && degree[v] == 1) {
          leaf = v;
          break;
        }
      used[leaf] = true;
      t.edges.push_back({leaf, seq[i], space.distance(leaf, seq[i])});
      --degree[seq[i]];
    }
    int u = -1, v = -1;
    for (int x = 0; x < n; ++x)
      if (!used[x] && degree[x] == 1) (u == -1 ? u : v) = x;
    t.edges.push_back({u, v, space.distance(u, v)});
    offer(std::move(t));

    int pos = n - 3;
    while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
    if (pos < 0) break;
    ++seq[pos];
  }
  return best;
}

Weight total_weight(const SpanningPath& path) {
  Weight sum;
  for (const Weight& w : path.spectrum) sum += w;
  return sum;
}

Weight total_weight(const SpanningTree& tree) {
  Weight sum;
  for (const Edge& e : tree.edges) sum += e.w;
  return sum;
}

WeightDistribution weight_multiset(const SpanningPath& path) {
  WeightDistribution counts;
  for (const Weight& w : path.spectrum) ++counts[w];
  return counts;
}

WeightDistribution weight_multiset(const SpanningTree& tree) {
  WeightDistribution counts;
  for (const Edge& e : tree.edges) ++counts[e.w];
  return counts;
}

}  // namespace um
