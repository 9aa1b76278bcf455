#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <memory>
#include <string>

#include "json.hpp"
#include "semitoric/semitoric.h"

namespace {

using njson = nlohmann::json;

constexpr const char* kSquare = R"({"vectors":[[1,0],[0,1],[-1,0],[0,-1]]})";
constexpr const char* kChoppedSquare =
    R"({"vectors":[[1,0],[1,1],[0,1],[-1,0],[0,-1]]})";
constexpr const char* kBadToric =
    R"({"vectors":[[1,0],[1,2],[0,1],[-1,0],[0,-1]]})";
constexpr const char* kHiddenFan =
    R"({"vectors":[[0,-1],[1,0],[1,1],[-1,0],[-2,-1]],)"
    R"("labels":["delzant","delzant","delzant","delzant","hidden"]})";
constexpr const char* kStandard1 =
    R"({"vectors":[[0,-1],[1,0],[1,1],[-1,0],[-1,-1]],)"
    R"("labels":["delzant","delzant","delzant","delzant","fake"]})";
constexpr const char* kPolygon1 =
    R"({"vertices":[["1","1"],["0","1"],["0","0"],["2","-2"],["2","0"]],)"
    R"("markers":[{"lambda":"1","eps":1,"k":0}]})";
constexpr const char* kPolygon2 =
    R"({"vertices":[["1","1"],["0","1"],["0","0"],["3","-6"],["3","-2"],)"
    R"(["2","0"]],"markers":[{"lambda":"1","eps":1,"k":0},)"
    R"({"lambda":"2","eps":1,"k":0}]})";
constexpr const char* kIngredientsA =
    R"({"polygon":{"vertices":[["1","1"],["0","1"],["0","0"],["2","-2"],)"
    R"(["2","0"]],"markers":[{"lambda":"1","eps":1,"k":0}]},"h":[0.5],)"
    R"("series":[[[0.0,1.0,0.0],[0.0,0.0],[0.0]]]})";
constexpr const char* kIngredientsB =
    R"({"polygon":{"vertices":[["1","1"],["0","1"],["0","0"],["2","-2"],)"
    R"(["2","0"]],"markers":[{"lambda":"1","eps":1,"k":0}]},"h":[0.75],)"
    R"("series":[[[0.0,1.5,0.0],[0.0,0.25],[0.0]]]})";

struct ObjectDeleter {
  void operator()(st_object* obj) const { st_object_free(obj); }
};
using Handle = std::unique_ptr<st_object, ObjectDeleter>;

Handle parse(const char* json) {
  st_object* obj = nullptr;
  REQUIRE(st_parse(json, &obj) == ST_OK);
  REQUIRE(obj != nullptr);
  return Handle(obj);
}

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out = s;
  st_string_free(s);
  return out;
}

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("parse decides the kind from the shape") {
  CHECK(st_object_kind(parse(kSquare).get()) == ST_KIND_TORIC_FAN);
  CHECK(st_object_kind(parse(kStandard1).get()) == ST_KIND_SEMITORIC_FAN);
  CHECK(st_object_kind(parse(kPolygon1).get()) == ST_KIND_POLYGON);
  CHECK(st_object_kind(parse(kIngredientsA).get()) == ST_KIND_INGREDIENTS);
  CHECK(st_object_kind(nullptr) == 0);
}

TEST_CASE("parse failures leave the output untouched") {
  st_object* obj = reinterpret_cast<st_object*>(size_t{0xbeef});
  CHECK(st_parse("not json", &obj) == ST_PARSE);
  CHECK(st_parse("[1,2]", &obj) == ST_PARSE);
  CHECK(st_parse(R"({"widgets":[]})", &obj) == ST_PARSE);
  CHECK(st_parse(nullptr, &obj) == ST_PARSE);
  CHECK(obj == reinterpret_cast<st_object*>(size_t{0xbeef}));
  CHECK(std::strlen(st_last_error()) > 0);
}

TEST_CASE("to_json reproduces the canonical bytes") {
  for (const char* text :
       {kSquare, kChoppedSquare, kHiddenFan, kPolygon1, kIngredientsA}) {
    Handle obj = parse(text);
    char* out = nullptr;
    REQUIRE(st_object_to_json(obj.get(), &out) == ST_OK);
    CHECK(take(out) == text);
  }
}

TEST_CASE("validate reports the failed invariant") {
  char* report = nullptr;
  REQUIRE(st_validate(parse(kSquare).get(), &report) == ST_OK);
  CHECK(take(report) == "");

  report = nullptr;
  Handle bad = parse(kBadToric);
  REQUIRE(st_validate(bad.get(), &report) == ST_INVALID);
  std::string reason = take(report);
  CHECK(reason != "");
  CHECK(std::string(st_last_error()) == reason);

  CHECK(st_validate(parse(kHiddenFan).get(), nullptr) == ST_OK);
  CHECK(st_validate(parse(kPolygon1).get(), nullptr) == ST_OK);
  CHECK(st_validate(parse(kIngredientsA).get(), nullptr) == ST_OK);
  CHECK(st_validate(nullptr, &report) == ST_INVALID);
}

TEST_CASE("reduce finds the minimal model and verifies the trace") {
  Handle fan = parse(kChoppedSquare);
  char* out = nullptr;
  REQUIRE(st_reduce(fan.get(), 1, &out) == ST_OK);
  njson r = njson::parse(take(out));
  CHECK(r.at("model") == "hirzebruch(1)");
  CHECK(r.at("moves") == 1);
  CHECK(r.at("reduced") == njson::parse(R"({"vectors":[[1,1],[0,1],[-1,0],[0,-1]]})"));
  CHECK(r.at("trace").size() == 1);
  CHECK(r.at("trace")[0].at("move") == "unchop");

  char* untouched = nullptr;
  CHECK(st_reduce(parse(kPolygon1).get(), 0, &untouched) == ST_INVALID);
  CHECK(untouched == nullptr);
}

TEST_CASE("normalize lands on the standard fan") {
  Handle fan = parse(kHiddenFan);
  char* out = nullptr;
  REQUIRE(st_normalize(fan.get(), 1, &out) == ST_OK);
  njson r = njson::parse(take(out));
  CHECK(r.at("complexity") == 1);
  CHECK(r.at("fan") == njson::parse(kStandard1));
  CHECK(r.at("moves").get<int>() == r.at("trace").size());

  REQUIRE(st_normalize(parse(kStandard1).get(), 1, &out) == ST_OK);
  njson fixed = njson::parse(take(out));
  CHECK(fixed.at("k") == 0);
  CHECK(fixed.at("trace").empty());

  char* untouched = nullptr;
  CHECK(st_normalize(parse(kSquare).get(), 0, &untouched) == ST_INVALID);
  CHECK(untouched == nullptr);
}

TEST_CASE("enumerate returns the census as CSV") {
  char* csv = nullptr;
  REQUIRE(st_enumerate(3, 1, &csv) == ST_OK);
  CHECK(take(csv) ==
        "word,weight,winding,is_fan,model\n-1 -1 -1,12,1,1,triangle\n");

  REQUIRE(st_enumerate(2, 3, &csv) == ST_OK);
  CHECK(take(csv) == "word,weight,winding,is_fan,model\n");
}

TEST_CASE("distance works on polygons and on ingredient lists") {
  Handle p = parse(kPolygon1);
  char* out = nullptr;
  REQUIRE(st_distance(p.get(), p.get(), "lebesgue", 1.0, 0.5, &out) == ST_OK);
  njson self = njson::parse(take(out));
  CHECK(self.at("distance") == 0.0);
  CHECK(self.at("measure") == "lebesgue");
  CHECK(self.at("tail_bound") == 0.0);

  Handle a = parse(kIngredientsA);
  Handle b = parse(kIngredientsB);
  REQUIRE(st_distance(a.get(), b.get(), "expabsx", 1.0, 0.5, &out) == ST_OK);
  njson d = njson::parse(take(out));
  CHECK(d.at("distance").get<double>() > 0.0);
  CHECK(d.at("tail_bound").get<double>() > 0.0);
  CHECK(d.at("measure") == "expabsx");

  REQUIRE(st_distance(a.get(), a.get(), nullptr, 1.0, 0.5, &out) == ST_OK);
  CHECK(njson::parse(take(out)).at("distance") == 0.0);
}

TEST_CASE("distance rejects bad arguments") {
  Handle p = parse(kPolygon1);
  Handle q = parse(kPolygon2);
  Handle a = parse(kIngredientsA);
  Handle fan = parse(kSquare);
  char* out = nullptr;
  CHECK(st_distance(p.get(), a.get(), "lebesgue", 1.0, 0.5, &out) ==
        ST_INVALID);
  CHECK(st_distance(fan.get(), fan.get(), "lebesgue", 1.0, 0.5, &out) ==
        ST_INVALID);
  CHECK(st_distance(p.get(), p.get(), "taxicab", 1.0, 0.5, &out) ==
        ST_INVALID);
  CHECK(st_distance(p.get(), p.get(), "lebesgue", 0.0, 0.5, &out) ==
        ST_INVALID);
  CHECK(st_distance(p.get(), p.get(), "lebesgue", 1.0, 1.0, &out) ==
        ST_INVALID);
  CHECK(st_distance(p.get(), q.get(), "lebesgue", 1.0, 0.5, &out) ==
        ST_INVALID);
  CHECK(out == nullptr);
  CHECK(std::strlen(st_last_error()) > 0);
}

TEST_CASE("path samples the connecting family") {
  Handle a = parse(kIngredientsA);
  Handle b = parse(kIngredientsB);
  char* out = nullptr;
  REQUIRE(st_path(a.get(), b.get(), 16, &out) == ST_OK);
  njson path = njson::parse(take(out));
  REQUIRE(path.is_array());
  REQUIRE(path.size() == 17);
  CHECK(path[0] == njson::parse(kIngredientsA));
  CHECK(path[16] == njson::parse(kIngredientsB));

  char* untouched = nullptr;
  CHECK(st_path(a.get(), b.get(), 0, &untouched) == ST_INVALID);
  CHECK(st_path(parse(kPolygon1).get(), a.get(), 4, &untouched) ==
        ST_INVALID);
  CHECK(untouched == nullptr);
}

TEST_CASE("render emits one SVG document per object") {
  for (const char* text : {kSquare, kStandard1, kPolygon1, kIngredientsA}) {
    Handle obj = parse(text);
    char* svg = nullptr;
    REQUIRE(st_render(obj.get(), &svg) == ST_OK);
    std::string doc = take(svg);
    CHECK(doc.rfind("<svg", 0) == 0);

    REQUIRE(st_render(obj.get(), &svg) == ST_OK);
    CHECK(take(svg) == doc);
  }
}

TEST_CASE("frees are null safe") {
  st_object_free(nullptr);
  st_string_free(nullptr);
  CHECK(true);
}

}
