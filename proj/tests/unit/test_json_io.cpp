#include "doctest.h"

#include "core/json_io.hpp"

using namespace semitoric;

namespace {

using L = CornerLabel;

SemitoricFan fan_h1() {
  return {{{0, -1}, {1, 0}, {1, 1}, {-1, 0}, {-2, -1}},
          {L::Delzant, L::Delzant, L::Delzant, L::Delzant, L::Hidden}};
}

IngredientList small_ingredients() {
  IngredientList m;
  m.polygon = polygon_realizing_fan(standard_fan(1));
  m.h = {0.75};
  TruncatedSeries s(2);
  s.at(0, 1) = 1.5;
  s.at(1, 0) = -0.25;
  s.at(2, 0) = 0.125;
  m.series = {s};
  return m;
}

}  // namespace

TEST_SUITE("json_io") {

TEST_CASE("words serialize with explicit powers") {
  GeneratorWord w = st_word({2, 0, -1});
  std::string text = word_to_json(w);
  CHECK(text ==
        R"([{"gen":"S","pow":1},{"gen":"T","pow":2},{"gen":"S","pow":2},)"
        R"({"gen":"T","pow":-1}])");
  CHECK(word_from_json(text) == w);
  CHECK(word_to_json(GeneratorWord{}) == "[]");
  CHECK(word_from_json("[]") == GeneratorWord{});
}

TEST_CASE("bad words are parse errors") {
  CHECK_THROWS_AS(word_from_json("not json"), ParseError);
  CHECK_THROWS_AS(word_from_json(R"([{"gen":"X","pow":1}])"), ParseError);
  CHECK_THROWS_AS(word_from_json(R"([{"gen":"S"}])"), ParseError);
  CHECK_THROWS_AS(word_from_json(R"({"gen":"S","pow":1})"), ParseError);
}

TEST_CASE("toric fans round trip with exact bytes") {
  ToricFan tri{{{1, 0}, {0, 1}, {-1, -1}}};
  std::string text = toric_fan_to_json(tri);
  CHECK(text == R"({"vectors":[[1,0],[0,1],[-1,-1]]})");
  CHECK(toric_fan_from_json(text) == tri);

  CHECK_THROWS_AS(toric_fan_from_json(R"({"vectors":3})"), ParseError);
  CHECK_THROWS_AS(toric_fan_from_json(R"({"vectors":[[1]]})"), ParseError);
  CHECK_THROWS_AS(toric_fan_from_json(R"({"rays":[[1,0]]})"), ParseError);
}

TEST_CASE("toric traces round trip") {
  std::vector<ToricTraceStep> t{{true, 1}, {false, 0}, {true, 3}};
  std::string text = toric_trace_to_json(t);
  CHECK(text ==
        R"([{"move":"chop","index":1},{"move":"unchop","index":0},)"
        R"({"move":"chop","index":3}])");
  CHECK(toric_trace_from_json(text) == t);
  CHECK_THROWS_AS(toric_trace_from_json(R"([{"move":"hop","index":1}])"),
                  ParseError);
}

TEST_CASE("semitoric fans carry their labels") {
  SemitoricFan f = fan_h1();
  std::string text = semitoric_fan_to_json(f);
  CHECK(text ==
        R"({"vectors":[[0,-1],[1,0],[1,1],[-1,0],[-2,-1]],)"
        R"("labels":["delzant","delzant","delzant","delzant","hidden"]})");
  CHECK(semitoric_fan_from_json(text) == f);

  CHECK_THROWS_AS(semitoric_fan_from_json(
                      R"({"vectors":[[1,0]],"labels":["weird"]})"),
                  ParseError);
  CHECK_THROWS_AS(semitoric_fan_from_json(R"({"vectors":[[1,0],[0,1]]})"),
                  ParseError);
}

TEST_CASE("fan traces cover every move kind") {
  std::vector<FanMove> t{
      {MoveKind::Chop, 1, 0},          {MoveKind::Unchop, 2, 0},
      {MoveKind::RemoveHidden, 3, 0},  {MoveKind::CommuteFakeDelzant, 0, 0},
      {MoveKind::ActT, 0, -2},         {MoveKind::Rotate, 4, 0}};
  std::string text = fan_trace_to_json(t);
  CHECK(fan_trace_from_json(text) == t);
  CHECK(text.find(R"({"move":"act_t","k":-2})") != std::string::npos);
  CHECK(text.find(R"({"move":"remove_hidden","index":3})") !=
        std::string::npos);

  CHECK_THROWS_AS(fan_trace_from_json(R"([{"move":"act_t","index":1}])"),
                  ParseError);
}

TEST_CASE("polygons store rational strings") {
  PrimitiveSemitoricPolygon p;
  p.polygon.vertices = {{Rat(0), Rat(0)},
                        {Rat(3, 2), Rat(-1, 2)},
                        {Rat(1), Rat(1)}};
  p.markers = {{Rat(1, 2), 1, -3}};
  std::string text = polygon_to_json(p);
  CHECK(text ==
        R"({"vertices":[["0","0"],["3/2","-1/2"],["1","1"]],)"
        R"("markers":[{"lambda":"1/2","eps":1,"k":-3}]})");
  CHECK(polygon_from_json(text) == p);

  PrimitiveSemitoricPolygon real = polygon_realizing_fan(standard_fan(2));
  CHECK(polygon_from_json(polygon_to_json(real)) == real);

  CHECK_THROWS_AS(polygon_from_json(R"({"vertices":[["x","0"]]})"),
                  ParseError);
  CHECK_THROWS_AS(polygon_from_json(R"({"vertices":[["1","0","2"]]})"),
                  ParseError);
}

TEST_CASE("decimal vertex strings are accepted on input") {
  PrimitiveSemitoricPolygon p = polygon_from_json(
      R"({"vertices":[["0","0"],["1","0"],["0.25","0.5"]],"markers":[]})");
  CHECK(p.polygon.vertices[2] == Pt{Rat(1, 4), Rat(1, 2)});
}

TEST_CASE("ingredients round trip with inferred degree") {
  IngredientList m = small_ingredients();
  std::string text = ingredients_to_json(m);
  IngredientList back = ingredients_from_json(text);
  CHECK(back == m);
  CHECK(back.series[0].degree == 2);

  CHECK_THROWS_AS(ingredients_from_json(R"({"polygon":{}})"), ParseError);
  CHECK_THROWS_AS(ingredients_from_json(R"({"h":[1.0]})"), ParseError);
}

TEST_CASE("paths are arrays of ingredient lists") {
  std::vector<IngredientList> path{small_ingredients(), small_ingredients()};
  path[1].h[0] = 0.5;
  std::string text = path_to_json(path);
  std::vector<IngredientList> back = path_from_json(text);
  REQUIRE(back.size() == 2);
  CHECK(back[0] == path[0]);
  CHECK(back[1] == path[1]);
  CHECK_THROWS_AS(path_from_json(R"({"path":[]})"), ParseError);
}

TEST_CASE("census rows print as csv") {
  std::vector<CensusRow> rows = census(3, 1);
  CHECK(census_to_csv(rows) ==
        "word,weight,winding,is_fan,model\n-1 -1 -1,12,1,1,triangle\n");
  CHECK(census_to_csv({}) == "word,weight,winding,is_fan,model\n");
}

TEST_CASE("input kinds are decided by shape") {
  CHECK(sniff_kind(R"({"vectors":[[1,0]]})") == InputKind::ToricFan);
  CHECK(sniff_kind(R"({"vectors":[[1,0]],"labels":["delzant"]})") ==
        InputKind::SemitoricFan);
  CHECK(sniff_kind(R"({"vertices":[]})") == InputKind::Polygon);
  CHECK(sniff_kind(R"({"polygon":{},"h":[],"series":[]})") ==
        InputKind::Ingredients);
  CHECK_THROWS_AS(sniff_kind(R"({"something":1})"), ParseError);
  CHECK_THROWS_AS(sniff_kind("[1,2,3]"), ParseError);
  CHECK_THROWS_AS(sniff_kind("garbage"), ParseError);
}

}
