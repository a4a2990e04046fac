#pragma once

#include <compare>
#include <vector>

namespace um {

/// Subset of the point indices of a space, stored sorted and deduplicated.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<int> members);

  static PointSet full(int n);
  static PointSet single(int p) { return PointSet({p}); }

  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool contains(int p) const;
  bool intersects(const PointSet& other) const;
  int min() const { return members_.front(); }

  const std::vector<int>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const PointSet& a, const PointSet& b) = default;
  friend auto operator<=>(const PointSet& a, const PointSet& b) = default;

 private:
  std::vector<int> members_;
};

/// Elements of `a` not in `b`.
PointSet difference(const PointSet& a, const PointSet& b);

}  // namespace um
