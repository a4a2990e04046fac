#include <doctest.h>

#include <algorithm>
#include <set>

#include "test_support.hpp"
#include "um/hausdorff.hpp"

using namespace um;
using test::W;

namespace {

// A = {x3,x4,x6,x7,x10,x13,x15}, B = {x1,x3,x5,x7,x10,x12,x13,x14}
const PointSet& set_a() {
  static const PointSet a({2, 3, 5, 6, 9, 12, 14});
  return a;
}
const PointSet& set_b() {
  static const PointSet b({0, 2, 4, 6, 9, 11, 12, 13});
  return b;
}

std::multiset<Weight> family_diameters(const Ballean& balls) {
  std::multiset<Weight> out;
  for (const Ball& b : balls) out.insert(b.diameter);
  return out;
}

// Test-local re-derivation of the first membership condition alone.
bool meets_one_side(const PointSet& ball, const PointSet& a,
                    const PointSet& b) {
  const PointSet a_only = difference(a, b);
  const PointSet b_only = difference(b, a);
  return (ball.intersects(a_only) && ball.intersects(b)) ||
         (ball.intersects(b_only) && ball.intersects(a));
}

}  // namespace

TEST_CASE("fixture query: distance 7 through five determining balls") {
  const UltrametricSpace& z = test::z15();
  const RepresentingTree tree = build_representing_tree(z);

  CHECK(hausdorff_distance(z, tree, set_a(), set_b()) == W(7));
  CHECK(hausdorff_distance_direct(z, set_a(), set_b()) == W(7));
  CHECK(hausdorff_distance_via_path(z, greedy_spanning_path(z, 0), set_a(),
                                    set_b()) == W(7));

  const Ballean family = hausdorff_ball_family(z, tree, set_a(), set_b());
  Ballean expected{{PointSet({0, 1, 2}), W(1)},
                   {PointSet({4, 5}), W(2)},
                   {PointSet({0, 1, 2, 3, 4, 5}), W(4)},
                   {PointSet({13, 14}), W(6)},
                   {PointSet({9, 10, 11}), W(7)}};
  CHECK(test::sorted_balls(family) == test::sorted_balls(expected));
}

TEST_CASE("balls meeting one side but with no separating part are skipped") {
  // For the fixture query the whole space (diameter 9) and the ball at
  // diameter 8 pass the first condition yet fail the second.
  const UltrametricSpace& z = test::z15();
  const RepresentingTree tree = build_representing_tree(z);
  const Ballean family = hausdorff_ball_family(z, tree, set_a(), set_b());

  std::multiset<Weight> first_condition;
  for (const Ball& ball : ballean(tree))
    if (ball.points.size() > 1 && meets_one_side(ball.points, set_a(), set_b()))
      first_condition.insert(ball.diameter);
  CHECK(first_condition ==
        std::multiset<Weight>{W(1), W(2), W(4), W(6), W(7), W(8), W(9)});
  CHECK(family_diameters(family) ==
        std::multiset<Weight>{W(1), W(2), W(4), W(6), W(7)});
}

TEST_CASE("equal, empty and singleton set handling") {
  const UltrametricSpace& z = test::z15();
  const RepresentingTree tree = build_representing_tree(z);

  CHECK(hausdorff_distance(z, tree, set_a(), set_a()) == W(0));
  CHECK(hausdorff_distance_direct(z, set_a(), set_a()) == W(0));
  CHECK(hausdorff_distance_via_path(z, greedy_spanning_path(z, 0), set_a(),
                                    set_a()) == W(0));
  CHECK_THROWS_AS(hausdorff_ball_family(z, tree, set_a(), set_a()), Error);
  CHECK_THROWS_AS(hausdorff_distance(z, tree, PointSet{}, set_a()), Error);
  CHECK_THROWS_AS(hausdorff_distance_direct(z, set_a(), PointSet{}), Error);

  // disjoint singletons: the distance itself, via the joining ball
  CHECK(hausdorff_distance(z, tree, PointSet::single(0),
                           PointSet::single(3)) == W(4));
  const Ballean family = hausdorff_ball_family(z, tree, PointSet::single(0),
                                               PointSet::single(3));
  CHECK(std::any_of(family.begin(), family.end(), [](const Ball& b) {
    return b.points == PointSet({0, 1, 2, 3, 4, 5}) && b.diameter == W(4);
  }));
  CHECK(hausdorff_distance_direct(z, PointSet::single(0),
                                  PointSet::single(8)) == W(9));
}

TEST_CASE("windowed route rejects non-minimum paths") {
  const UltrametricSpace cat = test::caterpillar4();
  SpanningPath bad;
  bad.order = {0, 2, 1, 3};
  bad.spectrum = {cat.distance(0, 2), cat.distance(2, 1), cat.distance(1, 3)};
  CHECK_THROWS_AS(hausdorff_distance_via_path(cat, bad, PointSet::single(0),
                                              PointSet::single(1)),
                  Error);
}

TEST_CASE("no singleton ball ever determines the distance") {
  test::Rng rng(79);
  for (int s = 0; s < 30; ++s) {
    const UltrametricSpace space = test::random_space(rng, 9);
    const RepresentingTree tree = build_representing_tree(space);
    const PointSet a = test::random_subset(rng, space.size());
    const PointSet b = test::random_subset(rng, space.size());
    if (a == b) continue;
    for (const Ball& ball : hausdorff_ball_family(space, tree, a, b))
      CHECK(ball.points.size() > 1);
  }
}

TEST_CASE("every point of the symmetric difference lies in some family ball") {
  test::Rng rng(83);
  for (int s = 0; s < 30; ++s) {
    const UltrametricSpace space = test::random_space(rng, 9);
    const RepresentingTree tree = build_representing_tree(space);
    const PointSet a = test::random_subset(rng, space.size());
    const PointSet b = test::random_subset(rng, space.size());
    if (a == b) continue;
    const Ballean family = hausdorff_ball_family(space, tree, a, b);
    for (const PointSet& diff : {difference(a, b), difference(b, a)})
      for (int x : diff)
        CHECK(std::any_of(family.begin(), family.end(),
                          [&](const Ball& ball) {
                            return ball.points.contains(x);
                          }));
  }
}

TEST_CASE("all three routes agree on random queries") {
  test::Rng rng(89);
  for (int s = 0; s < 80; ++s) {
    const UltrametricSpace space = test::random_space(rng, 9);
    const RepresentingTree tree = build_representing_tree(space);
    const SpanningPath path =
        greedy_spanning_path(space, rng.range(0, space.size() - 1));
    const PointSet a = test::random_subset(rng, space.size());
    const PointSet b = test::random_subset(rng, space.size());
    const Weight direct = hausdorff_distance_direct(space, a, b);
    CHECK(hausdorff_distance(space, tree, a, b) == direct);
    CHECK(hausdorff_distance_via_path(space, path, a, b) == direct);
  }
}

TEST_CASE("the subset distance is itself an ultrametric") {
  test::Rng rng(97);
  for (int s = 0; s < 6; ++s) {
    const UltrametricSpace space = test::random_space(rng, 4);
    const auto subsets = test::all_nonempty_subsets(space.size());
    std::vector<std::vector<Weight>> d(subsets.size(),
                                       std::vector<Weight>(subsets.size()));
    for (std::size_t i = 0; i < subsets.size(); ++i)
      for (std::size_t j = 0; j < subsets.size(); ++j)
        d[i][j] = hausdorff_distance_direct(space, subsets[i], subsets[j]);
    for (std::size_t i = 0; i < subsets.size(); ++i)
      for (std::size_t j = 0; j < subsets.size(); ++j) {
        CHECK(d[i][j] == d[j][i]);
        CHECK((d[i][j] == W(0)) == (subsets[i] == subsets[j]));
        for (std::size_t k = 0; k < subsets.size(); ++k)
          CHECK(!(d[i][j] > std::max(d[i][k], d[k][j])));
      }
  }
}
