#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace um {

enum class errc {
  // ultrametric axiom violations
  not_symmetric,
  bad_diagonal,
  strong_triangle_violated,
  // operation preconditions
  empty_set,
  equal_sets,
  too_small,
  too_large,
  same_point,
  not_in_spectrum,
  empty_graph,
  not_spanning,
  not_minimal,
  out_of_range,
  bad_input,
  // front-end
  parse_error,
  invalid_spec,
  usage,
  internal,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

/// First axiom violation found while checking a distance matrix.
/// `k` is meaningful only for strong_triangle_violated, where the reported
/// triple satisfies d(i,j) > max(d(i,k), d(k,j)).
struct Violation {
  errc kind;
  int i = -1;
  int j = -1;
  int k = -1;

  std::string describe() const;
  std::string describe(const std::vector<std::string>& labels) const;
};

class InvalidSpaceError : public Error {
 public:
  explicit InvalidSpaceError(Violation v)
      : Error(v.kind, v.describe()), violation_(v) {}
  InvalidSpaceError(Violation v, const std::vector<std::string>& labels)
      : Error(v.kind, v.describe(labels)), violation_(v) {}

  const Violation& violation() const noexcept { return violation_; }

 private:
  Violation violation_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line = -1)
      : Error(errc::parse_error,
              line >= 0 ? "line " + std::to_string(line) + ": " + message
                        : message),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace um
