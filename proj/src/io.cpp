#include "um/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace um {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Line {
  int number;  // 1-based position in the input
  std::vector<std::string> tokens;
};

std::vector<Line> meaningful_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view raw =
        text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    ++number;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' ||
                                raw[i] == '\r'))
        ++i;
      if (i >= raw.size()) break;
      if (raw[i] == '#' && line.tokens.empty()) break;  // comment line
      std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' &&
             raw[i] != '\r')
        ++i;
      line.tokens.emplace_back(raw.substr(start, i - start));
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

Weight parse_weight_token(const std::string& token, int line) {
  auto w = Weight::parse(token);
  if (!w) throw ParseError("bad distance '" + token + "'", line);
  return *w;
}

UltrametricSpace parse_matrix(std::string_view text) {
  const std::vector<Line> lines = meaningful_lines(text);
  std::size_t at = 0;
  auto next = [&](const char* expected) -> const Line& {
    if (at >= lines.size())
      throw ParseError(std::string("unexpected end of input, expected ") +
                       expected);
    return lines[at++];
  };

  const Line& header = next("'n <count>'");
  int n = 0;
  if (header.tokens.size() != 2 || header.tokens[0] != "n" ||
      std::from_chars(header.tokens[1].data(),
                      header.tokens[1].data() + header.tokens[1].size(), n)
              .ec != std::errc{} ||
      n < 1)
    throw ParseError("expected 'n <count>' with a positive count",
                     header.number);

  const Line& names = next("the point names");
  if (static_cast<int>(names.tokens.size()) != n)
    throw ParseError("expected " + std::to_string(n) + " point names, got " +
                         std::to_string(names.tokens.size()),
                     names.number);

  std::vector<Weight> dist(static_cast<std::size_t>(n) * n);
  for (int i = 1; i < n; ++i) {
    const Line& row = next("a distance row");
    if (static_cast<int>(row.tokens.size()) != i)
      throw ParseError("expected " + std::to_string(i) +
                           " distances for point '" + names.tokens[i] +
                           "', got " + std::to_string(row.tokens.size()),
                       row.number);
    for (int j = 0; j < i; ++j) {
      Weight w = parse_weight_token(row.tokens[j], row.number);
      dist[static_cast<std::size_t>(i) * n + j] = w;
      dist[static_cast<std::size_t>(j) * n + i] = w;
    }
  }
  if (at < lines.size())
    throw ParseError("unexpected trailing content", lines[at].number);

  return UltrametricSpace::create(names.tokens, dist);
}

UltrametricSpace parse_json(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("top-level JSON value must be an object");
  if (doc.value("format", "") != "um-space")
    throw ParseError("missing or wrong \"format\", expected \"um-space\"");
  if (!doc.contains("version") || !doc["version"].is_number_integer() ||
      doc["version"].get<int>() != 1)
    throw ParseError("unsupported \"version\", expected 1");
  if (!doc.contains("labels") || !doc["labels"].is_array())
    throw ParseError("missing \"labels\" array");

  std::vector<std::string> labels;
  for (const auto& v : doc["labels"]) {
    if (!v.is_string()) throw ParseError("point names must be strings");
    labels.push_back(v.get<std::string>());
  }
  const int n = static_cast<int>(labels.size());
  if (n < 1) throw ParseError("a space needs at least one point");

  if (!doc.contains("dist") || !doc["dist"].is_array() ||
      static_cast<int>(doc["dist"].size()) != n - 1)
    throw ParseError("\"dist\" must hold " + std::to_string(n - 1) +
                     " rows of the lower triangle");

  std::vector<Weight> dist(static_cast<std::size_t>(n) * n);
  for (int i = 1; i < n; ++i) {
    const auto& row = doc["dist"][i - 1];
    if (!row.is_array() || static_cast<int>(row.size()) != i)
      throw ParseError("\"dist\" row " + std::to_string(i - 1) +
                       " must hold " + std::to_string(i) + " entries");
    for (int j = 0; j < i; ++j) {
      if (!row[j].is_string())
        throw ParseError("distances must be decimal strings");
      auto w = Weight::parse(row[j].get<std::string>());
      if (!w)
        throw ParseError("bad distance '" + row[j].get<std::string>() + "'");
      dist[static_cast<std::size_t>(i) * n + j] = *w;
      dist[static_cast<std::size_t>(j) * n + i] = *w;
    }
  }
  return UltrametricSpace::create(labels, dist);
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

UltrametricSpace parse_space(std::string_view text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    if (c == '{') return parse_json(text);
    break;
  }
  return parse_matrix(text);
}

std::string serialize_matrix(const UltrametricSpace& space) {
  std::ostringstream out;
  out << "n " << space.size() << "\n";
  for (int i = 0; i < space.size(); ++i)
    out << (i ? " " : "") << space.label(i);
  out << "\n";
  for (int i = 1; i < space.size(); ++i) {
    for (int j = 0; j < i; ++j) out << (j ? " " : "") << space.distance(i, j);
    out << "\n";
  }
  return out.str();
}

std::string serialize_json(const UltrametricSpace& space) {
  ordered_json doc;
  doc["format"] = "um-space";
  doc["version"] = 1;
  doc["labels"] = space.labels();
  ordered_json rows = ordered_json::array();
  for (int i = 1; i < space.size(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < i; ++j) row.push_back(space.distance(i, j).str());
    rows.push_back(std::move(row));
  }
  doc["dist"] = std::move(rows);
  return doc.dump(2) + "\n";
}

UltrametricSpace load_space_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_space(buffer.str());
}

std::string export_tree_dot(const UltrametricSpace& space,
                            const RepresentingTree& tree) {
  std::ostringstream out;
  out << "digraph representing_tree {\n";
  for (int v = 0; v < tree.node_count(); ++v) {
    const auto& node = tree.node(v);
    const bool show_diameter = !tree.is_leaf(v) || tree.node_count() == 1;
    out << "  n" << v << " [shape="
        << (show_diameter ? "circle" : "box") << ", label=\""
        << dot_escape(show_diameter ? node.label.str()
                                    : space.label(node.ball.min()))
        << "\"];\n";
  }
  for (int v = 0; v < tree.node_count(); ++v)
    for (int c : tree.node(v).children) out << "  n" << v << " -> n" << c << ";\n";
  out << "}\n";
  return out.str();
}

std::string tree_json(const UltrametricSpace& space,
                      const RepresentingTree& tree) {
  ordered_json nodes = ordered_json::array();
  for (int v = 0; v < tree.node_count(); ++v) {
    const auto& node = tree.node(v);
    ordered_json entry;
    entry["id"] = v;
    entry["diameter"] = node.label.str();
    ordered_json points = ordered_json::array();
    for (int p : node.ball) points.push_back(space.label(p));
    entry["points"] = std::move(points);
    entry["parent"] = node.parent;
    entry["children"] = node.children;
    nodes.push_back(std::move(entry));
  }
  ordered_json doc;
  doc["format"] = "um-tree";
  doc["version"] = 1;
  doc["nodes"] = std::move(nodes);
  return doc.dump(2) + "\n";
}

}  // namespace um
