#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "um/errors.hpp"
#include "um/point_set.hpp"
#include "um/weight.hpp"

namespace um {

/// Sorted distinct distance values of a space, 0 included.
using Spectrum = std::vector<Weight>;

/// Nonzero distance values with the number of unordered point pairs
/// realizing each; counts sum to n(n-1)/2.
using Multispectrum = std::vector<std::pair<Weight, long>>;

/// Finite ultrametric space: labeled points with an exact symmetric
/// distance matrix satisfying the strong triangle inequality
/// d(x,y) <= max(d(x,z), d(z,y)).
///
/// The axioms are checked eagerly at construction; an instance is
/// immutable afterwards and safe to share between threads.
class UltrametricSpace {
 public:
  /// `dist` is the full n*n matrix in row-major order. Throws
  /// InvalidSpaceError on the first axiom violation, Error(bad_input) on
  /// structural problems (empty space, duplicate labels, size mismatch).
  static UltrametricSpace create(std::vector<std::string> labels,
                                 std::vector<Weight> dist);

  /// Axiom check alone: returns the first violation in scan order
  /// (diagonal and symmetry pairs first, then triples), or nullopt.
  static std::optional<Violation> check_axioms(const std::vector<Weight>& dist,
                                               int n);

  int size() const { return n_; }
  const Weight& distance(int i, int j) const { return dist_[i * n_ + j]; }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> index_of(std::string_view label) const;

  friend bool operator==(const UltrametricSpace& a,
                         const UltrametricSpace& b) {
    return a.labels_ == b.labels_ && a.dist_ == b.dist_;
  }

 private:
  UltrametricSpace(std::vector<std::string> labels, std::vector<Weight> dist)
      : n_(static_cast<int>(labels.size())),
        labels_(std::move(labels)),
        dist_(std::move(dist)) {}

  int n_;
  std::vector<std::string> labels_;
  std::vector<Weight> dist_;
};

Spectrum spectrum(const UltrametricSpace& space);
Multispectrum multispectrum(const UltrametricSpace& space);

/// max over a,b in `set` of d(a,b); 0 for singletons. Throws empty_set.
Weight diameter(const UltrametricSpace& space, const PointSet& set);

/// min over a in `a`, b in `b` of d(a,b). Throws empty_set.
Weight set_distance(const UltrametricSpace& space, const PointSet& a,
                    const PointSet& b);

}  // namespace um
