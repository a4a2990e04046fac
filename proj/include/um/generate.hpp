#pragma once

#include <cstdint>
#include <vector>

#include "um/space.hpp"

namespace um {

/// Parameters for random space generation. A random rooted tree with
/// strictly decreasing labels along root-to-leaf paths is drawn and the
/// distance between two points is set to the label of their lowest
/// common ancestor, which always yields a valid ultrametric.
struct GeneratorSpec {
  int n = 1;
  std::vector<Weight> label_pool;  // positive, strictly increasing; empty
                                   // means {1, .., max(1, n-1)}
  int branching = 2;               // max children per node, >= 2; exceeded
                                   // only when the label pool runs out and
                                   // a node must split into singletons
  std::uint64_t seed = 0;
};

/// Deterministic: identical specs produce identical spaces. Points are
/// named x1..xn. Throws Error(invalid_spec) on a bad spec.
UltrametricSpace generate_space(const GeneratorSpec& spec);

}  // namespace um
