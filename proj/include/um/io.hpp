#pragma once

#include <string>
#include <string_view>

#include "um/space.hpp"
#include "um/tree.hpp"

namespace um {

// Two interchangeable space encodings, both carrying distances as exact
// decimal strings:
//
//   matrix text            structured JSON
//   -----------            ---------------
//   n 3                    {"format": "um-space", "version": 1,
//   a b c                   "labels": ["a","b","c"],
//   1                       "dist": [["1"], ["2","2"]]}
//   2 2
//
// The matrix body lists the lower triangle row by row: line k holds
// d(x_{k+1}, x_1..x_k). Blank lines and '#' comments are allowed in the
// matrix form.

/// Parses either encoding (auto-detected) and validates the space.
/// Throws ParseError on malformed input, InvalidSpaceError on axiom
/// violations.
UltrametricSpace parse_space(std::string_view text);

std::string serialize_matrix(const UltrametricSpace& space);
std::string serialize_json(const UltrametricSpace& space);

/// Reads and parses a space file. Throws ParseError if unreadable.
UltrametricSpace load_space_file(const std::string& path);

/// Deterministic Graphviz rendering of the representing tree: internal
/// nodes show their diameter, leaves the point name, nodes emitted in id
/// order. Re-exporting a round-tripped space is byte-identical.
std::string export_tree_dot(const UltrametricSpace& space,
                            const RepresentingTree& tree);

std::string tree_json(const UltrametricSpace& space,
                      const RepresentingTree& tree);

}  // namespace um
