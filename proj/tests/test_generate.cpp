#include <doctest.h>

#include <set>

#include "test_support.hpp"
#include "um/generate.hpp"
#include "um/tree.hpp"

using namespace um;
using test::W;

TEST_CASE("generation is deterministic in the seed") {
  GeneratorSpec spec;
  spec.n = 9;
  spec.seed = 12345;
  const UltrametricSpace a = generate_space(spec);
  const UltrametricSpace b = generate_space(spec);
  CHECK(a == b);

  spec.seed = 12346;
  bool saw_difference = false;
  for (int tries = 0; tries < 16 && !saw_difference; ++tries, ++spec.seed) {
    saw_difference = !(generate_space(spec) == a);
  }
  CHECK(saw_difference);
}

TEST_CASE("generated spaces are valid and labeled x1..xn") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    GeneratorSpec spec;
    spec.n = 1 + static_cast<int>(seed % 11);
    spec.seed = seed;
    const UltrametricSpace s = generate_space(spec);
    REQUIRE(s.size() == spec.n);
    std::vector<Weight> flat;
    for (int i = 0; i < s.size(); ++i) {
      for (int j = 0; j < s.size(); ++j) {
        flat.push_back(s.distance(i, j));
      }
    }
    CHECK(!UltrametricSpace::check_axioms(flat, s.size()).has_value());
    for (int i = 0; i < s.size(); ++i) {
      CHECK(s.label(i) == "x" + std::to_string(i + 1));
    }
  }
}

TEST_CASE("every distance is drawn from the requested pool") {
  GeneratorSpec spec;
  spec.n = 12;
  spec.label_pool = {W("0.5"), W(2), W(7), W(30)};
  spec.seed = 77;
  const UltrametricSpace s = generate_space(spec);
  const std::set<Weight> pool(spec.label_pool.begin(), spec.label_pool.end());
  for (int i = 0; i < s.size(); ++i) {
    for (int j = i + 1; j < s.size(); ++j) {
      CHECK(pool.count(s.distance(i, j)) == 1);
    }
  }
  // with 12 points and enough seeds the largest value must show up as the
  // diameter of at least one draw
  bool saw_top = false;
  for (std::uint64_t seed = 0; seed < 10 && !saw_top; ++seed) {
    spec.seed = seed;
    saw_top = spectrum(generate_space(spec)).back() == W(30);
  }
  CHECK(saw_top);
}

TEST_CASE("a single point needs no distances") {
  GeneratorSpec spec;
  spec.n = 1;
  const UltrametricSpace s = generate_space(spec);
  CHECK(s.size() == 1);
  CHECK(s.label(0) == "x1");
  CHECK(spectrum(s).size() == 1);  // just 0
}

TEST_CASE("invalid generator requests are rejected") {
  auto expect_invalid = [](GeneratorSpec spec) {
    try {
      generate_space(spec);
      FAIL("expected invalid_spec");
    } catch (const Error& e) {
      CHECK(e.code() == errc::invalid_spec);
    }
  };
  GeneratorSpec bad_n;
  bad_n.n = 0;
  expect_invalid(bad_n);

  GeneratorSpec bad_branching;
  bad_branching.n = 4;
  bad_branching.branching = 1;
  expect_invalid(bad_branching);

  GeneratorSpec zero_label;
  zero_label.n = 4;
  zero_label.label_pool = {W(0), W(1)};
  expect_invalid(zero_label);

  GeneratorSpec unsorted;
  unsorted.n = 4;
  unsorted.label_pool = {W(3), W(2)};
  expect_invalid(unsorted);

  GeneratorSpec duplicate;
  duplicate.n = 4;
  duplicate.label_pool = {W(2), W(2)};
  expect_invalid(duplicate);
}

TEST_CASE("generated spaces have well-formed ball structure") {
  for (std::uint64_t seed = 100; seed < 112; ++seed) {
    GeneratorSpec spec;
    spec.n = 2 + static_cast<int>(seed % 7);
    spec.branching = 2 + static_cast<int>(seed % 3);
    spec.seed = seed;
    const UltrametricSpace s = generate_space(spec);
    const RepresentingTree tree = build_representing_tree(s);
    CHECK(test::sorted_balls(ballean(tree)) ==
          test::oracle_closed_balls(s));
  }
}
