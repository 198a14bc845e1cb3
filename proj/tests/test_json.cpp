#include <doctest.h>

#include "hilbcup/error.hpp"
#include "hilbcup/json_io.hpp"

using namespace hilbcup;
namespace hj = hilbcup::json;

TEST_CASE("partition json") {
  CHECK(hj::to_json(Partition{2, 1, 1}).dump() == "[2,1,1]");
  CHECK(hj::partition_from_json(hj::parse("[2,1,1]")) == Partition{2, 1, 1});
  CHECK_THROWS_AS(hj::partition_from_json(hj::parse("[1,2,1]")), Error);
  CHECK(hj::partition_from_json(hj::parse("[]")) == Partition{});
  CHECK_THROWS_AS(hj::partition_from_json(hj::parse("[0]")), Error);
  CHECK_THROWS_AS(hj::partition_from_json(hj::parse("{}")), Error);
}

TEST_CASE("class function json") {
  const auto f = hj::class_function_from_json(
      hj::parse(R"({"n":4,"coeffs":[{"partition":[3,1],"value":"3"},{"partition":[2,2],"value":"-123456789012345678901234567890"}]})"));
  CHECK(f.n() == 4);
  CHECK(f.coefficient(Partition{3, 1}) == 3);
  CHECK(f.coefficient(Partition{2, 2}) == mpz_class("-123456789012345678901234567890"));
  CHECK(hj::class_function_from_json(hj::to_json(f)) == f);
  CHECK(hj::to_json(f).dump() == hj::to_json(hj::class_function_from_json(hj::to_json(f))).dump());
  CHECK(hj::class_function_from_json(hj::parse(R"({"n":2,"coeffs":[{"partition":[2],"value":5}]})")) ==
        ClassFunction::basis(Partition{2}, 5));
  CHECK_THROWS_AS(hj::class_function_from_json(hj::parse(R"({"n":3,"coeffs":[{"partition":[2],"value":"1"}]})")),
                  Error);
  CHECK_THROWS_AS(hj::class_function_from_json(hj::parse(R"({"n":2,"coeffs":[{"partition":[2],"value":"1/2"}]})")),
                  Error);
  RationalClassFunction r(2);
  r.add(Partition{2}, mpq_class(-1, 3));
  CHECK(hj::to_json(r)["coeffs"][0]["value"] == "-1/3");
  CHECK(hj::rational_class_function_from_json(hj::to_json(r)) == r);
  CHECK(hj::to_json(ClassFunction(3)).dump() == R"({"coeffs":[],"n":3})");
}

TEST_CASE("ppoly json") {
  PPoly q = PPoly::monomial(Partition{2, 1, 1}, mpq_class(1, 4)) + PPoly::monomial(Partition{3, 1}, -2);
  const auto j = hj::to_json(q);
  CHECK(hj::ppoly_from_json(j) == q);
  CHECK(hj::ppoly_from_json(hj::parse(R"([{"powers":[[1,2]],"coeff":"1/2"}])")) ==
        PPoly::monomial(Partition{1, 1}, mpq_class(1, 2)));
  CHECK(hj::ppoly_from_json(hj::parse("[]")).is_zero());
  CHECK_THROWS_AS(hj::ppoly_from_json(hj::parse(R"([{"powers":[[1,2]],"coeff":"1/0"}])")), Error);
}

TEST_CASE("chern poly and presentation json") {
  const auto r = relation_poly(Partition{1, 1});
  CHECK(hj::chern_poly_from_json(hj::to_json(r)) == r);
  const auto pres = presentation(4);
  const auto j = hj::to_json(pres);
  CHECK(j["generators"] == hj::json({"c1", "c2", "c3"}));
  CHECK(j["betti"] == hj::json({1, 1, 2, 1}));
  for (const auto& rel : j["relations"]) {
    const auto lambda = hj::partition_from_json(rel["lambda"]);
    CHECK(hj::chern_poly_from_json(rel["poly"]) == relation_poly(lambda));
  }
  CHECK(hj::parse(j.dump()) == j);
}

TEST_CASE("character table json") {
  const auto j = hj::to_json(*character_table(3));
  CHECK(j["n"] == 3);
  CHECK(j["rows"] == hj::json::parse("[[3],[2,1],[1,1,1]]"));
  CHECK(j["values"][1][2] == "2");
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(hj::parse("{not json"), Error);
  try {
    hj::parse("[1,");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
  }
}
