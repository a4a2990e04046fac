#include "um/hausdorff.hpp"

#include <algorithm>

namespace um {

namespace {

void check_subset(const UltrametricSpace& space, const PointSet& set,
                  const char* which) {
  if (set.empty())
    throw Error(errc::empty_set,
                std::string("set ") + which + " must not be empty");
  for (int p : set)
    if (p < 0 || p >= space.size())
      throw Error(errc::out_of_range,
                  std::string("set ") + which + " contains an unknown point");
}

}  // namespace

Ballean hausdorff_ball_family(const UltrametricSpace& space,
                              const RepresentingTree& tree, const PointSet& a,
                              const PointSet& b) {
  check_subset(space, a, "A");
  check_subset(space, b, "B");
  if (tree.point_count() != space.size())
    throw Error(errc::bad_input, "tree does not match the space");
  if (a == b)
    throw Error(errc::equal_sets, "the two sets must differ");

  const PointSet a_only = difference(a, b);
  const PointSet b_only = difference(b, a);

  Ballean family;
  for (int v : tree.internal_ids()) {
    const PointSet& ball = tree.node(v).ball;
    const bool meets_one_side =
        (ball.intersects(a_only) && ball.intersects(b)) ||
        (ball.intersects(b_only) && ball.intersects(a));
    if (!meets_one_side) continue;

    // Some diametrical part must carry points private to exactly one of
    // the sets while avoiding the other set entirely.
    bool witnessed = false;
    for (int c : tree.node(v).children) {
      const PointSet& part = tree.node(c).ball;
      const bool a_private = part.intersects(a_only) && !part.intersects(b);
      const bool b_private = part.intersects(b_only) && !part.intersects(a);
      if (a_private != b_private) {
        witnessed = true;
        break;
      }
    }
    if (witnessed) family.push_back({ball, tree.node(v).label});
  }
  return family;
}

Weight hausdorff_distance(const UltrametricSpace& space,
                          const RepresentingTree& tree, const PointSet& a,
                          const PointSet& b) {
  check_subset(space, a, "A");
  check_subset(space, b, "B");
  if (a == b) return Weight{};
  Ballean family = hausdorff_ball_family(space, tree, a, b);
  if (family.empty())
    throw Error(errc::internal, "no ball separates two distinct sets");
  Weight best;
  for (const Ball& ball : family) best = std::max(best, ball.diameter);
  return best;
}

Weight hausdorff_distance_direct(const UltrametricSpace& space,
                                 const PointSet& a, const PointSet& b) {
  check_subset(space, a, "A");
  check_subset(space, b, "B");
  Weight best;
  for (int x : a) {
    Weight nearest;
    bool first = true;
    for (int y : b) {
      const Weight& d = space.distance(x, y);
      if (first || d < nearest) nearest = d;
      first = false;
    }
    best = std::max(best, nearest);
  }
  for (int y : b) {
    Weight nearest;
    bool first = true;
    for (int x : a) {
      const Weight& d = space.distance(x, y);
      if (first || d < nearest) nearest = d;
      first = false;
    }
    best = std::max(best, nearest);
  }
  return best;
}

Weight hausdorff_distance_via_path(const UltrametricSpace& space,
                                   const SpanningPath& path, const PointSet& a,
                                   const PointSet& b) {
  check_subset(space, a, "A");
  check_subset(space, b, "B");
  if (!is_min_spanning_path(space, path))
    throw Error(errc::not_minimal, "not a minimum spanning path");
  if (a == b) return Weight{};

  const int n = space.size();
  const PointSet a_only = difference(a, b);
  const PointSet b_only = difference(b, a);
  std::vector<Weight> s;
  for (int p = 0; p + 1 < n; ++p)
    s.push_back(space.distance(path.order[p], path.order[p + 1]));

  auto run_meets = [&](int lo, int hi, const PointSet& set) {
    for (int p = lo; p <= hi; ++p)
      if (set.contains(path.order[p])) return true;
    return false;
  };

  Weight best;
  bool found = false;
  for (int lo = 0; lo < n; ++lo) {
    Weight internal_max;
    for (int hi = lo + 1; hi < n; ++hi) {
      internal_max = hi == lo + 1 ? s[lo] : std::max(internal_max, s[hi - 1]);
      const bool left_ok = lo == 0 || internal_max < s[lo - 1];
      const bool right_ok = hi == n - 1 || internal_max < s[hi];
      if (!left_ok || !right_ok) continue;
      // The run order[lo..hi] is a ball with diameter internal_max.
      const bool meets_one_side =
          (run_meets(lo, hi, a_only) && run_meets(lo, hi, b)) ||
          (run_meets(lo, hi, b_only) && run_meets(lo, hi, a));
      if (!meets_one_side) continue;
      // Splitting the run at its maximum weight yields its diametrical
      // parts; one of them must separate the two sets.
      bool witnessed = false;
      int part_lo = lo;
      for (int p = lo; p <= hi && !witnessed; ++p) {
        if (p < hi && s[p] != internal_max) continue;
        const int part_hi = p < hi ? p : hi;
        const bool a_private = run_meets(part_lo, part_hi, a_only) &&
                               !run_meets(part_lo, part_hi, b);
        const bool b_private = run_meets(part_lo, part_hi, b_only) &&
                               !run_meets(part_lo, part_hi, a);
        witnessed = a_private != b_private;
        part_lo = part_hi + 1;
      }
      if (witnessed) {
        best = std::max(best, internal_max);
        found = true;
      }
    }
  }
  if (!found)
    throw Error(errc::internal, "no window separates two distinct sets");
  return best;
}

}  // namespace um
