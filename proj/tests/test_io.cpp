#include <doctest.h>

#include <string>

#include "test_support.hpp"
#include "um/io.hpp"

using namespace um;
using test::W;

TEST_CASE("matrix form parses with comments and blank lines") {
  const UltrametricSpace s = parse_space(
      "# two points\n"
      "\n"
      "n 2\n"
      "a b\n"
      "3\n");
  CHECK(s.size() == 2);
  CHECK(s.label(0) == "a");
  CHECK(s.distance(0, 1) == W(3));

  const UltrametricSpace one = parse_space("n 1\nonly\n");
  CHECK(one.size() == 1);

  CHECK(parse_space("n 3\na b c\n1\n2 2\n").distance(2, 1) == W(2));
}

TEST_CASE("matrix form reports malformed input with line numbers") {
  auto expect_parse_error = [](const std::string& text, int line) {
    try {
      parse_space(text);
      FAIL("expected ParseError for: ", text);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
    }
  };
  expect_parse_error("m 2\na b\n1\n", 1);       // bad header keyword
  expect_parse_error("n 0\n", 1);               // nonpositive count
  expect_parse_error("n x\n", 1);               // count not a number
  expect_parse_error("n 2\na\n1\n", 2);         // wrong name count
  expect_parse_error("n 2\na b\n1 2\n", 3);     // wrong row length
  expect_parse_error("n 2\na b\n1.x\n", 3);     // malformed entry
  expect_parse_error("n 2\na b\n1\n9\n", 4);    // trailing content
  CHECK_THROWS_AS(parse_space("n 2\na b\n"), ParseError);  // missing row
  CHECK_THROWS_AS(parse_space(""), ParseError);
}

TEST_CASE("axiom violations pass through the parser unchanged") {
  try {
    parse_space("n 3\na b c\n1\n1 5\n");
    FAIL("expected InvalidSpaceError");
  } catch (const InvalidSpaceError& e) {
    CHECK(e.code() == errc::strong_triangle_violated);
  }
}

TEST_CASE("structured form parses and round-trips") {
  const UltrametricSpace z = test::z15();
  CHECK(parse_space(serialize_json(z)) == z);
  CHECK(parse_space(serialize_matrix(z)) == z);
  // auto-detection survives leading whitespace
  CHECK(parse_space("\n  " + serialize_json(z)) == z);

  const UltrametricSpace frac = parse_space(
      "{\"format\":\"um-space\",\"version\":1,"
      "\"labels\":[\"p\",\"q\"],\"dist\":[[\"0.125\"]]}");
  CHECK(frac.distance(0, 1) == *Weight::parse("0.125"));
  CHECK(parse_space(serialize_json(frac)) == frac);
  CHECK(parse_space(serialize_matrix(frac)) == frac);
}

TEST_CASE("structured form rejects malformed documents") {
  for (const char* bad : {
           "{",                                                  // not JSON
           "{\"format\":\"other\",\"version\":1}",               // format
           "{\"format\":\"um-space\",\"version\":2}",            // version
           "{\"format\":\"um-space\",\"version\":1}",            // no labels
           "{\"format\":\"um-space\",\"version\":1,"
           "\"labels\":[],\"dist\":[]}",                         // empty
           "{\"format\":\"um-space\",\"version\":1,"
           "\"labels\":[\"a\",\"b\"],\"dist\":[]}",              // rows
           "{\"format\":\"um-space\",\"version\":1,"
           "\"labels\":[\"a\",\"b\"],\"dist\":[[3]]}",           // not string
           "{\"format\":\"um-space\",\"version\":1,"
           "\"labels\":[\"a\",\"b\"],\"dist\":[[\"x\"]]}",       // bad value
       }) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_space(bad), ParseError);
  }
}

TEST_CASE("serialized matrix text is canonical") {
  CHECK(serialize_matrix(test::make_space({{1}, {2, 2}})) ==
        "n 3\n"
        "x1 x2 x3\n"
        "1\n"
        "2 2\n");
}

TEST_CASE("file loading") {
  CHECK(load_space_file(test::data_dir() + "/z15.um") == test::z15());
  CHECK_THROWS_AS(load_space_file(test::data_dir() + "/does-not-exist.um"),
                  ParseError);
}

TEST_CASE("tree export is deterministic and complete") {
  const UltrametricSpace& z = test::z15();
  const RepresentingTree tree = build_representing_tree(z);
  const std::string dot = export_tree_dot(z, tree);
  CHECK(dot == export_tree_dot(parse_space(serialize_matrix(z)),
                               build_representing_tree(
                                   parse_space(serialize_matrix(z)))));
  std::size_t nodes = 0, edges = 0, pos = 0;
  while ((pos = dot.find("shape=", pos)) != std::string::npos) {
    ++nodes;
    pos += 6;
  }
  pos = 0;
  while ((pos = dot.find(" -> ", pos)) != std::string::npos) {
    ++edges;
    pos += 4;
  }
  CHECK(nodes == 24);
  CHECK(edges == 23);

  CHECK(export_tree_dot(test::two_points(),
                        build_representing_tree(test::two_points())) ==
        "digraph representing_tree {\n"
        "  n0 [shape=circle, label=\"3\"];\n"
        "  n1 [shape=box, label=\"x1\"];\n"
        "  n2 [shape=box, label=\"x2\"];\n"
        "  n0 -> n1;\n"
        "  n0 -> n2;\n"
        "}\n");

  // a lone node shows the zero diameter, not the point name
  const UltrametricSpace one = test::make_space({});
  CHECK(export_tree_dot(one, build_representing_tree(one)) ==
        "digraph representing_tree {\n"
        "  n0 [shape=circle, label=\"0\"];\n"
        "}\n");
}

TEST_CASE("structured tree export lists every node with its ball") {
  const UltrametricSpace& z = test::z15();
  const std::string text = tree_json(z, build_representing_tree(z));
  CHECK(text.find("\"um-tree\"") != std::string::npos);
  CHECK(text.find("\"x15\"") != std::string::npos);
  std::size_t ids = 0, pos = 0;
  while ((pos = text.find("\"id\":", pos)) != std::string::npos) {
    ++ids;
    pos += 5;
  }
  CHECK(ids == 24);
}
