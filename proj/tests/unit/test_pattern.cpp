#include <doctest.h>

#include "gsc/errors.hpp"
#include "gsc/pattern.hpp"

using namespace gsc;

namespace {

ParseError::Kind parse_kind(std::string_view text) {
  try {
    parse_pattern(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  FAIL("no ParseError for input");
  return ParseError::Kind::malformed_file;
}

}  // namespace

TEST_CASE("first text line is the top row") {
  const auto p = parse_pattern("#..\n...\n..#\n");
  CHECK(p.m() == 3);
  CHECK(p.is_black(0, 2));
  CHECK(p.is_black(2, 0));
  CHECK(p.white_count() == 7);
}

TEST_CASE("serialize inverts parse") {
  for (std::string text : {"..\n.#", "#..\n.#.\n...", ".##.\n#..#\n....\n.#.#"}) {
    CHECK(serialize_pattern(parse_pattern(text)) == text);
    CHECK(serialize_pattern(parse_pattern(text + "\n")) == text);
  }
  CHECK(serialize_pattern(parse_pattern("..\r\n.#\r\n")) == "..\n.#");
}

TEST_CASE("parse errors carry their kind") {
  CHECK(parse_kind("..\n...") == ParseError::Kind::ragged_lines);
  CHECK(parse_kind("..\n.x") == ParseError::Kind::illegal_character);
  CHECK(parse_kind(".") == ParseError::Kind::too_small);
  CHECK(parse_kind("##\n##") == ParseError::Kind::empty_white);
  CHECK_NOTHROW(parse_pattern("..\n..\n"));
}

TEST_CASE("pattern constructor preconditions") {
  CHECK_THROWS_AS(Pattern(1, {{0, 0}}), PreconditionError);
  CHECK_THROWS_AS(Pattern(2, {}), PreconditionError);
  CHECK_THROWS_AS(Pattern(2, {{2, 0}}), PreconditionError);
  CHECK_THROWS_AS(Pattern::from_black(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}), PreconditionError);
}

TEST_CASE("complement lists black cells sorted") {
  const auto p = patterns::superdiagonal_plus_corner(3);
  const std::vector<PatternCell> expected{{0, 1}, {1, 2}, {2, 0}};
  CHECK(complement(p) == expected);
  CHECK(complement(patterns::all_white(4)).empty());
}

TEST_CASE("named patterns") {
  CHECK(serialize_pattern(patterns::classic()) == "...\n.#.\n...");
  CHECK(serialize_pattern(patterns::left_column_black(3)) == "#..\n#..\n#..");
  CHECK(serialize_pattern(patterns::bottom_row_black(3)) == "...\n...\n###");
  CHECK(serialize_pattern(patterns::superdiagonal_plus_corner(3)) == ".#.\n#..\n..#");
  CHECK(serialize_pattern(patterns::superdiagonal_plus_corner(4)) == "..#.\n.#..\n#...\n...#");
}

TEST_CASE("mirrors and rotations") {
  const auto p = parse_pattern("#..\n.#.\n..#");
  CHECK(serialize_pattern(mirror_horizontal(p)) == "..#\n.#.\n#..");
  CHECK(serialize_pattern(mirror_vertical(p)) == "..#\n.#.\n#..");
  CHECK(rotate_180(p) == p);
  CHECK(transpose(patterns::left_column_black(3)) == patterns::bottom_row_black(3));
  const auto q = parse_pattern("##.\n...\n.#.");
  CHECK(mirror_horizontal(mirror_horizontal(q)) == q);
  CHECK(rotate_180(q) == mirror_horizontal(mirror_vertical(q)));
}
