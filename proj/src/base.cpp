#include <algorithm>
#include <iterator>

#include "um/errors.hpp"
#include "um/point_set.hpp"

namespace um {

namespace {

std::string point_name(const std::vector<std::string>* labels, int i) {
  if (labels && i >= 0 && i < static_cast<int>(labels->size()))
    return (*labels)[i];
  return "#" + std::to_string(i);
}

std::string describe_violation(const Violation& v,
                               const std::vector<std::string>* labels) {
  auto p = [&](int i) { return point_name(labels, i); };
  switch (v.kind) {
    case errc::not_symmetric:
      return "not symmetric: d(" + p(v.i) + "," + p(v.j) + ") != d(" + p(v.j) +
             "," + p(v.i) + ")";
    case errc::bad_diagonal:
      if (v.i == v.j) return "nonzero diagonal at " + p(v.i);
      return "zero distance between distinct points " + p(v.i) + " and " +
             p(v.j);
    case errc::strong_triangle_violated:
      return "strong triangle inequality violated: d(" + p(v.i) + "," + p(v.j) +
             ") > max(d(" + p(v.i) + "," + p(v.k) + "), d(" + p(v.k) + "," +
             p(v.j) + "))";
    default:
      return "invalid space";
  }
}

}  // namespace

const char* errc_name(errc code) {
  switch (code) {
    case errc::not_symmetric: return "not_symmetric";
    case errc::bad_diagonal: return "bad_diagonal";
    case errc::strong_triangle_violated: return "strong_triangle_violated";
    case errc::empty_set: return "empty_set";
    case errc::equal_sets: return "equal_sets";
    case errc::too_small: return "too_small";
    case errc::too_large: return "too_large";
    case errc::same_point: return "same_point";
    case errc::not_in_spectrum: return "not_in_spectrum";
    case errc::empty_graph: return "empty_graph";
    case errc::not_spanning: return "not_spanning";
    case errc::not_minimal: return "not_minimal";
    case errc::out_of_range: return "out_of_range";
    case errc::bad_input: return "bad_input";
    case errc::parse_error: return "parse_error";
    case errc::invalid_spec: return "invalid_spec";
    case errc::usage: return "usage";
    case errc::internal: return "internal";
  }
  return "unknown";
}

std::string Violation::describe() const {
  return describe_violation(*this, nullptr);
}

std::string Violation::describe(const std::vector<std::string>& labels) const {
  return describe_violation(*this, &labels);
}

PointSet::PointSet(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

PointSet PointSet::full(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return PointSet(std::move(v));
}

bool PointSet::contains(int p) const {
  return std::binary_search(members_.begin(), members_.end(), p);
}

bool PointSet::intersects(const PointSet& other) const {
  auto a = members_.begin();
  auto b = other.members_.begin();
  while (a != members_.end() && b != other.members_.end()) {
    if (*a == *b) return true;
    if (*a < *b)
      ++a;
    else
      ++b;
  }
  return false;
}

PointSet difference(const PointSet& a, const PointSet& b) {
  std::vector<int> out;
  std::set_difference(a.members().begin(), a.members().end(),
                      b.members().begin(), b.members().end(),
                      std::back_inserter(out));
  return PointSet(std::move(out));
}

}  // namespace um
