#pragma once

#include "um/msp.hpp"
#include "um/space.hpp"
#include "um/tree.hpp"

namespace um {

/// The balls that witness the Hausdorff distance between two subsets A
/// and B: balls meeting A\B and B (or B\A and A) that additionally have a
/// diametrical part touching exactly one side's private points while
/// missing the other side entirely. The Hausdorff distance equals the
/// maximum diameter over this family; singletons never qualify.
///
/// Throws equal_sets when A = B and empty_set when either set is empty.
Ballean hausdorff_ball_family(const UltrametricSpace& space,
                              const RepresentingTree& tree, const PointSet& a,
                              const PointSet& b);

/// Hausdorff distance via the ball family: 0 when A = B, otherwise the
/// maximum diameter over hausdorff_ball_family.
Weight hausdorff_distance(const UltrametricSpace& space,
                          const RepresentingTree& tree, const PointSet& a,
                          const PointSet& b);

/// Hausdorff distance straight from the definition: the larger of the
/// two directed max-min distances. Independent of the tree; serves as
/// the oracle for the other two routes.
Weight hausdorff_distance_direct(const UltrametricSpace& space,
                                 const PointSet& a, const PointSet& b);

/// Hausdorff distance computed on a minimum spanning path alone: the
/// candidate balls are the path windows of balls_from_path and a ball's
/// diametrical parts are the maximal sub-windows below its top weight.
/// Throws not_minimal if the path fails is_min_spanning_path.
Weight hausdorff_distance_via_path(const UltrametricSpace& space,
                                   const SpanningPath& path,
                                   const PointSet& a, const PointSet& b);

}  // namespace um
