#include "um/space.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

namespace um {

std::optional<Violation> UltrametricSpace::check_axioms(
    const std::vector<Weight>& dist, int n) {
  auto d = [&](int i, int j) -> const Weight& { return dist[i * n + j]; };
  for (int i = 0; i < n; ++i) {
    if (!d(i, i).is_zero())
      return Violation{errc::bad_diagonal, i, i, -1};
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (d(i, j) != d(j, i)) return Violation{errc::not_symmetric, i, j, -1};
      if (d(i, j).is_zero()) return Violation{errc::bad_diagonal, i, j, -1};
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (d(i, j) > std::max(d(i, k), d(k, j)))
          return Violation{errc::strong_triangle_violated, i, j, k};
      }
    }
  }
  return std::nullopt;
}

UltrametricSpace UltrametricSpace::create(std::vector<std::string> labels,
                                          std::vector<Weight> dist) {
  int n = static_cast<int>(labels.size());
  if (n == 0) throw Error(errc::bad_input, "a space needs at least one point");
  if (dist.size() != static_cast<std::size_t>(n) * n)
    throw Error(errc::bad_input, "distance matrix must be n*n");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw Error(errc::bad_input, "empty point label");
    if (l.find_first_of(" \t\n,{}") != std::string::npos)
      throw Error(errc::bad_input,
                  "point label contains whitespace or punctuation: " + l);
    if (!seen.insert(l).second)
      throw Error(errc::bad_input, "duplicate point label: " + l);
  }
  if (auto v = check_axioms(dist, n)) throw InvalidSpaceError(*v, labels);
  return UltrametricSpace(std::move(labels), std::move(dist));
}

std::optional<int> UltrametricSpace::index_of(std::string_view label) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

Spectrum spectrum(const UltrametricSpace& space) {
  std::set<Weight> values;
  values.insert(Weight{});  // d(x,x) = 0 occurs for every point
  for (int i = 0; i < space.size(); ++i)
    for (int j = i + 1; j < space.size(); ++j)
      values.insert(space.distance(i, j));
  return Spectrum(values.begin(), values.end());
}

Multispectrum multispectrum(const UltrametricSpace& space) {
  std::map<Weight, long> counts;
  for (int i = 0; i < space.size(); ++i)
    for (int j = i + 1; j < space.size(); ++j)
      ++counts[space.distance(i, j)];
  return Multispectrum(counts.begin(), counts.end());
}

Weight diameter(const UltrametricSpace& space, const PointSet& set) {
  if (set.empty()) throw Error(errc::empty_set, "diameter of an empty set");
  Weight best;
  const auto& m = set.members();
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = a + 1; b < m.size(); ++b)
      best = std::max(best, space.distance(m[a], m[b]));
  return best;
}

Weight set_distance(const UltrametricSpace& space, const PointSet& a,
                    const PointSet& b) {
  if (a.empty() || b.empty())
    throw Error(errc::empty_set, "set distance with an empty set");
  bool first = true;
  Weight best;
  for (int x : a)
    for (int y : b) {
      const Weight& d = space.distance(x, y);
      if (first || d < best) {
        best = d;
        first = false;
      }
    }
  return best;
}

}  // namespace um
