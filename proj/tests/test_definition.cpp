#include <doctest.h>

#include "nvs/definition.hpp"
#include "nvs/error.hpp"

using namespace nvs;

TEST_CASE("the v5 fixture definition parses") {
  SpaceDefinition d = parse_definition("field = gf(5)\ndim = 2\nexponents = 1,3\n");
  CHECK(d.field.kind == ScalarGroupSpec::Kind::prime);
  CHECK(d.field.p == 5);
  CHECK(d.dim == 2);
  SpacePtr sp = build_space(d);
  CHECK(sp->size() == 25);
}

TEST_CASE("comments and spacing are tolerated") {
  SpaceDefinition d = parse_definition(
      "# fixture\n"
      "field = gf(9; modulus=1,0,1)   # x^2+1\n"
      "dim   = 1\n"
      "exponents = 3\n");
  CHECK(d.field.kind == ScalarGroupSpec::Kind::extension);
  CHECK(d.field.modulus == std::vector<int>{1, 0, 1});
}

TEST_CASE("bare prime powers get default moduli") {
  SpaceDefinition d = parse_definition("field = gf(4)\ndim = 2\nexponents = 1,1\n");
  CHECK(d.field.kind == ScalarGroupSpec::Kind::extension);
  SpacePtr sp = build_space(d);
  CHECK(sp->group().order == 4);
}

TEST_CASE("dickson definitions parse") {
  SpaceDefinition d = parse_definition("field = dickson(3)\ndim = 1\nexponents = 1\n");
  SpacePtr sp = build_space(d);
  CHECK(sp->group().order == 9);
  CHECK_FALSE(sp->group().abelian());
}

TEST_CASE("rejections") {
  CHECK_THROWS_AS(parse_definition("field = gf(5)\nrank = 2\n"), Error);       // unknown key
  CHECK_THROWS_AS(parse_definition("field = gf(6)\ndim = 1\n"), Error);        // not a prime power
  CHECK_THROWS_AS(parse_definition("dim = 2\n"), Error);                       // missing field
  CHECK_THROWS_AS(parse_definition("field = gf(5)\ndim = 2\nexponents = 1,2\n"), Error);
  CHECK_THROWS_AS(parse_definition("field = gf(5)\ndim = 9\n"), Error);        // carrier cap
  CHECK_THROWS_AS(parse_definition("field = gf(5)\ndim = 1\nexponents = 1,3\n"), Error);
  try {
    parse_definition("field = gf(5)\ndim = 2\nexponents = 1,2\n");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::bad_exponent);
  }
}

TEST_CASE("vector literals") {
  CHECK(parse_vector_literal("(1,3)", 5, 2) == Vector{1, 3});
  CHECK(parse_vector_literal(" (0,0) ", 5, 2) == Vector{0, 0});
  CHECK_THROWS_AS(parse_vector_literal("(1,5)", 5, 2), Error);  // label out of range
  CHECK_THROWS_AS(parse_vector_literal("(1)", 5, 2), Error);    // arity
  CHECK_THROWS_AS(parse_vector_literal("1,3", 5, 2), Error);
  auto list = parse_vector_list("(1,0); (0,1) (2,2)", 5, 2);
  CHECK(list.size() == 3);
  CHECK(list[2] == Vector{2, 2});
}

TEST_CASE("reports serialize deterministically") {
  VerificationReport r;
  r.name = "sample";
  r.add("b-check", true, 3);
  r.add("a-check", false, 1, "w");
  std::string t1 = r.to_text(false);
  std::string t2 = r.to_text(false);
  CHECK(t1 == t2);
  CHECK(t1.find("a-check") < t1.find("b-check"));  // keys sorted
  std::string j = r.to_json_string(false);
  CHECK(j.find("\"a-check\"") != std::string::npos);
  CHECK(j == r.to_json_string(false));
}
