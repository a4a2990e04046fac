#pragma once

#include <string>
#include <vector>

#include "um/space.hpp"
#include "um/tree.hpp"

namespace um {

/// Verdicts for the special classes, all decided on the representing
/// tree (the canonical side; the spectrum_criterion_* functions are the
/// per-path counterparts).
struct ClassReport {
  bool strictly_binary;
  bool injective_labeling;
  bool gomory_hu_extremal;   // |Sp(X)| = |X|
  bool maximally_rigid;      // strictly binary, one internal node per level
  bool all_msts_are_paths;
};

/// Every internal node has exactly two children; equivalent to the space
/// having no equilateral triangles.
bool is_strictly_binary(const RepresentingTree& tree);

/// Distinct internal nodes carry distinct labels; equivalent to distinct
/// nonsingular balls having distinct diameters, to every nonzero level
/// graph being complete multipartite, and to |Sp| = |ballean| - |X| + 1.
bool is_injective_labeling(const RepresentingTree& tree);

/// |Sp(X)| = |X|, the extremal case of the Gomory-Hu inequality
/// |Sp(X)| <= |X|. Coincides with strictly binary + injective labeling.
bool is_gomory_hu_extremal(const UltrametricSpace& space);

/// Strictly binary with exactly one internal node at every level except
/// the deepest; such spaces admit a minimum spanning path with strictly
/// monotone spectrum.
bool is_maximally_rigid(const UltrametricSpace& space,
                        const RepresentingTree& tree);

/// Whether every minimum spanning tree of the space is a path. Decided
/// purely by the unlabeled shape of the representing tree, which must be
/// one of five small shapes (at most four points, or the equilateral
/// triangle, or a single point).
bool all_msts_are_paths(const RepresentingTree& tree);

/// Label-free canonical encoding of the rooted tree shape; two trees are
/// isomorphic as unordered rooted trees iff their signatures match.
std::string shape_signature(const RepresentingTree& tree);

ClassReport classify(const UltrametricSpace& space,
                     const RepresentingTree& tree);

// Path-side criteria. Each takes the spectrum (s_1..s_{n-1}) of a
// minimum spanning path and decides the matching tree-side property.

/// Strictly binary: every equal pair s_i = s_j has some strictly larger
/// weight strictly between them.
bool spectrum_criterion_strictly_binary(const std::vector<Weight>& s);

/// Injective labeling: between every equal pair s_i = s_j all weights
/// stay <= s_i.
bool spectrum_criterion_injective(const std::vector<Weight>& s);

/// Gomory-Hu extremal: all spectrum entries distinct.
bool spectrum_all_distinct(const std::vector<Weight>& s);

bool is_strictly_monotone(const std::vector<Weight>& s);

/// Searches for a minimum spanning path with strictly monotone spectrum:
/// greedy from a deepest leaf first (the constructive witness for
/// maximally rigid spaces), then from every other start.
bool has_monotone_min_spanning_path(const UltrametricSpace& space,
                                    const RepresentingTree& tree);

}  // namespace um
