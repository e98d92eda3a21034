#include "support.hpp"

#include "hfg/error.hpp"
#include "hfg/io.hpp"

#include <cstdio>
#include <fstream>

using namespace hfg;
using namespace hfg::testing;

TEST_CASE("polynomial text format") {
  CHECK(parse_polynomial("x0^2 - 1/2*x1*x2") == x(0).pow(2) - Rational(1, 2) * x(1) * x(2));
  CHECK(parse_polynomial("-x0 + 3") == c(3) - x(0));
  CHECK(parse_polynomial("2*x0*x0") == 2 * x(0).pow(2));
  CHECK(parse_polynomial("x1 - x1") .is_zero());
  const Polynomial f = x(0).pow(3) * x(2) - Rational(7, 3) * x(1) + c(5);
  CHECK(parse_polynomial(f.to_string()) == f);
  CHECK_THROWS_AS(parse_polynomial(""), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x3"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x0 +"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x0^"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x0**x1"), ParseError);
}

TEST_CASE("polynomial JSON round trip") {
  const Polynomial f = x(0) * x(1) - Rational(3, 2) * x(2).pow(2);
  const Json j = polynomial_to_json(f);
  CHECK(j.dump() == R"([["1/1",[1,1,0]],["-3/2",[0,0,2]]])");
  CHECK(polynomial_from_json(j) == f);
  CHECK(polynomial_from_json(Json("x0 - x1")) == x(0) - x(1));
  CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"([["1",[1,0]]])")), ParseError);
  CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"([["1/0",[1,0,0]]])")), ParseError);
}

TEST_CASE("ideal files") {
  const Json j = Json::parse(R"({"vars":["x0","x1","x2"],"gens":["x0 - x1", [["1",[0,1,0]],["-1",[0,0,1]]]]})");
  const IdealPresentation I = ideal_from_json(j);
  CHECK(ideal_equal(I, point_ideal(Point(1, 1, 1))));
  const Json out = ideal_to_json(I);
  CHECK(out["vars"] == Json::parse(R"(["x0","x1","x2"])"));
  CHECK(out["gens"].size() == 2);

  const IdealPresentation other = ideal_from_json(Json::parse(R"({"vars":["a","b"],"gens":["a*b"]})"));
  CHECK(other.block()->size() == 2);
  CHECK_THROWS_AS(ideal_from_json(Json::parse(R"({"vars":["a","a"],"gens":[]})")), ParseError);
  CHECK_THROWS_AS(ideal_from_json(Json::parse(R"({"vars":["x0"]})")), ParseError);
}

TEST_CASE("points and grids from JSON") {
  CHECK(point_from_json(Json::parse(R"(["1","2","3/2"])")) == Point(2, 4, 3));
  CHECK(point_from_json(Json::parse(R"([1,2,3])")) == Point(1, 2, 3));
  CHECK(point_to_json(Point(2, 4, 3)).dump() == R"(["1/1","2/1","3/2"])");
  CHECK_THROWS_AS(point_from_json(Json::parse(R"(["1","2"])")), ParseError);
  CHECK_THROWS_AS(point_from_json(Json::parse(R"(["0","0","0"])")), ParseError);

  const FatGrid abstract = grid_from_json(Json::parse(R"({"M":[3,2,3],"N":[4,2,4,3]})"));
  CHECK(abstract.m() == std::vector<unsigned>{2, 3, 3});
  CHECK(abstract.n() == std::vector<unsigned>{2, 3, 4, 4});

  const FatGrid explicit_grid = grid_from_json(Json::parse(
      R"({"P":[["1","2","1"],["1","2","5"]],"M":[1,2],"Q":[["1","1","3"],["1","4","3"]],"N":[1,1]})"));
  CHECK(explicit_grid.rows().points[0] == Point(1, 2, 1));
  CHECK(grid_to_json(explicit_grid)["points"].size() == 4);

  CHECK_THROWS_AS(grid_from_json(Json::parse(R"({"M":[1]})")), ParseError);
  CHECK_THROWS_AS(grid_from_json(Json::parse(R"({"M":[0],"N":[1]})")), ParseError);
  CHECK_THROWS_AS(grid_from_json(Json::parse(R"({"P":[["1","2","3"]],"M":[1],"N":[1]})")), ParseError);
  CHECK_THROWS_AS(grid_from_json(Json::parse(R"({"P":[["1","0","3"]],"M":[1],"Q":[["1","1","3"]],"N":[1]})")),
                  InvalidGrid);
}

TEST_CASE("multiplicity lists") {
  CHECK(parse_multiplicities("2,3,3") == std::vector<unsigned>{2, 3, 3});
  CHECK(parse_multiplicities(" 4 ") == std::vector<unsigned>{4});
  CHECK_THROWS_AS(parse_multiplicities("2,,3"), ParseError);
  CHECK_THROWS_AS(parse_multiplicities("0"), ParseError);
  CHECK_THROWS_AS(parse_multiplicities("a"), ParseError);
  CHECK_THROWS_AS(parse_multiplicities("-1"), ParseError);
}

TEST_CASE("JSON files") {
  const std::string path = "hfg_io_test.json";
  {
    std::ofstream out(path);
    out << R"({"M":[1],"N":[2]})";
  }
  CHECK(load_json_file(path)["N"][0] == 2);
  {
    std::ofstream out(path);
    out << "{not json";
  }
  CHECK_THROWS_AS(load_json_file(path), ParseError);
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_json_file("does/not/exist.json"), ParseError);
}

TEST_CASE("invariants report") {
  const Json j = invariants_to_json(abstract_grid({2, 3, 3}, {2, 3, 4, 4}), 2);
  CHECK(j["alpha"] == 16);
  CHECK(j["beta"] == 21);
  CHECK(j["waldschmidt"] == "16/1");
  CHECK(j["resurgence"] == 1);
  CHECK(j["alpha_tuple"].size() == 17);
  CHECK(j["C"][1] == Json::parse("[2,17]"));
  CHECK(j["generator_twists"] == Json::parse("[16,16,17,17,18,19,21]"));
  // Keys are ordered, so dumps are reproducible.
  CHECK(j.dump() == invariants_to_json(abstract_grid({3, 2, 3}, {4, 4, 3, 2}), 2).dump());
}

TEST_CASE("tables carry the same data") {
  const Json j = generators_to_json(abstract_grid({1}, {1}));
  const std::string table = render_table(j);
  CHECK(table.find("count") != std::string::npos);
  CHECK(table.find("x0 - 1/2*x2") != std::string::npos);
  CHECK(table.find("x0 - 1/2*x1") != std::string::npos);
  CHECK(render_table(Json::parse(R"({"a":1,"bb":[1,2]})")) == "a   1\nbb  [1, 2]\n");
}
