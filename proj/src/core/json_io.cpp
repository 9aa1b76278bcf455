#include "core/json_io.hpp"

#include <sstream>

#include "json.hpp"

namespace semitoric {

namespace {

using json = nlohmann::ordered_json;

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

// Readers go through these so every shape error surfaces as ParseError.
template <typename F>
auto shaped(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

json rat_json(const Rat& r) { return rat_to_string(r); }

Rat rat_of(const json& j) {
  if (!j.is_string()) throw ParseError("rational must be a string");
  try {
    return rat_from_string(j.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(e.what());
  }
}

json vec_json(const Vec2& v) { return json::array({v.x, v.y}); }

Vec2 vec_of(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw ParseError("vector must be a pair of integers");
  return {j[0].get<i64>(), j[1].get<i64>()};
}

const char* move_name(MoveKind k) {
  switch (k) {
    case MoveKind::Chop: return "chop";
    case MoveKind::Unchop: return "unchop";
    case MoveKind::RemoveHidden: return "remove_hidden";
    case MoveKind::CommuteFakeDelzant: return "commute_fake_delzant";
    case MoveKind::ActT: return "act_t";
    case MoveKind::Rotate: return "rotate";
  }
  return "?";
}

json polygon_json(const PrimitiveSemitoricPolygon& p) {
  json verts = json::array();
  for (const Pt& v : p.polygon.vertices)
    verts.push_back(json::array({rat_json(v.x), rat_json(v.y)}));
  json markers = json::array();
  for (const Marker& m : p.markers)
    markers.push_back(
        {{"lambda", rat_json(m.lambda)}, {"eps", m.eps}, {"k", m.k}});
  return {{"vertices", verts}, {"markers", markers}};
}

PrimitiveSemitoricPolygon polygon_of(const json& j) {
  PrimitiveSemitoricPolygon p;
  if (!j.is_object() || !j.contains("vertices"))
    throw ParseError("polygon needs a \"vertices\" array");
  for (const json& v : j.at("vertices")) {
    if (!v.is_array() || v.size() != 2)
      throw ParseError("vertex must be a pair of rationals");
    p.polygon.vertices.push_back({rat_of(v[0]), rat_of(v[1])});
  }
  if (j.contains("markers"))
    for (const json& m : j.at("markers")) {
      Marker mk;
      mk.lambda = rat_of(m.at("lambda"));
      mk.eps = m.value("eps", 1);
      mk.k = m.value("k", i64{0});
      p.markers.push_back(mk);
    }
  return p;
}

json series_json(const TruncatedSeries& s) {
  json rows = json::array();
  for (const auto& row : s.coeff) rows.push_back(row);
  return rows;
}

TruncatedSeries series_of(const json& j) {
  if (!j.is_array() || j.empty())
    throw ParseError("series must be a nonempty coefficient matrix");
  TruncatedSeries s(static_cast<int>(j.size()) - 1);
  for (int i = 0; i <= s.degree; ++i) {
    const json& row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != s.degree + 1 - i)
      throw ParseError("series row " + std::to_string(i) +
                       " must have " + std::to_string(s.degree + 1 - i) +
                       " entries");
    for (int k = 0; k < static_cast<int>(row.size()); ++k)
      s.coeff[i][k] = row[k].get<double>();
  }
  return s;
}

json ingredients_json(const IngredientList& m) {
  json series = json::array();
  for (const TruncatedSeries& s : m.series) series.push_back(series_json(s));
  return {{"polygon", polygon_json(m.polygon)},
          {"h", m.h},
          {"series", series}};
}

IngredientList ingredients_of(const json& j) {
  IngredientList m;
  if (!j.is_object() || !j.contains("polygon"))
    throw ParseError("ingredient list needs a \"polygon\"");
  m.polygon = polygon_of(j.at("polygon"));
  if (j.contains("h")) m.h = j.at("h").get<std::vector<double>>();
  if (j.contains("series"))
    for (const json& s : j.at("series")) m.series.push_back(series_of(s));
  return m;
}

}  // namespace

std::string word_to_json(const GeneratorWord& w) {
  json out = json::array();
  for (const GenPower& p : w.parts())
    out.push_back({{"gen", p.gen == Gen::S ? "S" : "T"}, {"pow", p.pow}});
  return out.dump();
}

GeneratorWord word_from_json(const std::string& text) {
  const json j = parse(text);
  return shaped([&] {
    if (!j.is_array()) throw ParseError("word must be an array");
    GeneratorWord w;
    for (const json& p : j) {
      const std::string g = p.at("gen").get<std::string>();
      if (g != "S" && g != "T") throw ParseError("gen must be \"S\" or \"T\"");
      w.append(g == "S" ? Gen::S : Gen::T, p.at("pow").get<i64>());
    }
    return w;
  });
}

std::string toric_fan_to_json(const ToricFan& f) {
  json vecs = json::array();
  for (const Vec2& v : f.rays) vecs.push_back(vec_json(v));
  return json{{"vectors", vecs}}.dump();
}

ToricFan toric_fan_from_json(const std::string& text) {
  const json j = parse(text);
  return shaped([&] {
    if (!j.is_object() || !j.contains("vectors"))
      throw ParseError("fan needs a \"vectors\" array");
    ToricFan f;
    for (const json& v : j.at("vectors")) f.rays.push_back(vec_of(v));
    return f;
  });
}

std::string toric_trace_to_json(const std::vector<ToricTraceStep>& t) {
  json out = json::array();
  for (const ToricTraceStep& s : t)
    out.push_back({{"move", s.chop ? "chop" : "unchop"}, {"index", s.index}});
  return out.dump();
}

std::vector<ToricTraceStep> toric_trace_from_json(const std::string& text) {
  const json j = parse(text);
  return shaped([&] {
    if (!j.is_array()) throw ParseError("trace must be an array");
    std::vector<ToricTraceStep> out;
    for (const json& s : j) {
      const std::string mv = s.at("move").get<std::string>();
      if (mv != "chop" && mv != "unchop")
        throw ParseError("toric move must be \"chop\" or \"unchop\"");
      out.push_back({mv == "chop", s.at("index").get<int>()});
    }
    return out;
  });
}

std::string semitoric_fan_to_json(const SemitoricFan& f) {
  json vecs = json::array();
  for (const Vec2& v : f.rays) vecs.push_back(vec_json(v));
  json labels = json::array();
  for (CornerLabel l : f.labels) labels.push_back(to_string(l));
  return json{{"vectors", vecs}, {"labels", labels}}.dump();
}

SemitoricFan semitoric_fan_from_json(const std::string& text) {
  const json j = parse(text);
  return shaped([&] {
    if (!j.is_object() || !j.contains("vectors") || !j.contains("labels"))
      throw ParseError("semitoric fan needs \"vectors\" and \"labels\"");
    SemitoricFan f;
    for (const json& v : j.at("vectors")) f.rays.push_back(vec_of(v));
    for (const json& l : j.at("labels")) {
      const std::string s = l.get<std::string>();
      if (s == "delzant")
        f.labels.push_back(CornerLabel::Delzant);
      else if (s == "fake")
        f.labels.push_back(CornerLabel::Fake);
      else if (s == "hidden")
        f.labels.push_back(CornerLabel::Hidden);
      else
        throw ParseError("unknown label \"" + s + "\"");
    }
    return f;
  });
}

std::string fan_trace_to_json(const std::vector<FanMove>& t) {
  json out = json::array();
  for (const FanMove& m : t) {
    json step{{"move", move_name(m.kind)}};
    if (m.kind == MoveKind::ActT)
      step["k"] = m.k;
    else
      step["index"] = m.index;
    out.push_back(step);
  }
  return out.dump();
}

std::vector<FanMove> fan_trace_from_json(const std::string& text) {
  const json j = parse(text);
  return shaped([&] {
    if (!j.is_array()) throw ParseError("trace must be an array");
    std::vector<FanMove> out;
    for (const json& s : j) {
      const std::string mv = s.at("move").get<std::string>();
      FanMove m;
      if (mv == "chop") m.kind = MoveKind::Chop;
      else if (mv == "unchop") m.kind = MoveKind::Unchop;
      else if (mv == "remove_hidden") m.kind = MoveKind::RemoveHidden;
      else if (mv == "commute_fake_delzant") m.kind = MoveKind::CommuteFakeDelzant;
      else if (mv == "act_t") m.kind = MoveKind::ActT;
      else if (mv == "rotate") m.kind = MoveKind::Rotate;
      else throw ParseError("unknown move \"" + mv + "\"");
      if (m.kind == MoveKind::ActT)
        m.k = s.at("k").get<i64>();
      else
        m.index = s.at("index").get<int>();
      out.push_back(m);
    }
    return out;
  });
}

std::string polygon_to_json(const PrimitiveSemitoricPolygon& p) {
  return polygon_json(p).dump();
}

PrimitiveSemitoricPolygon polygon_from_json(const std::string& text) {
  const json j = parse(text);
  return shaped([&] { return polygon_of(j); });
}

std::string ingredients_to_json(const IngredientList& m) {
  return ingredients_json(m).dump();
}

IngredientList ingredients_from_json(const std::string& text) {
  const json j = parse(text);
  return shaped([&] { return ingredients_of(j); });
}

std::string path_to_json(const std::vector<IngredientList>& path) {
  json out = json::array();
  for (const IngredientList& m : path) out.push_back(ingredients_json(m));
  return out.dump();
}

std::vector<IngredientList> path_from_json(const std::string& text) {
  const json j = parse(text);
  return shaped([&] {
    if (!j.is_array()) throw ParseError("path must be an array");
    std::vector<IngredientList> out;
    for (const json& m : j) out.push_back(ingredients_of(m));
    return out;
  });
}

std::string census_to_csv(const std::vector<CensusRow>& rows) {
  std::ostringstream os;
  os << "word,weight,winding,is_fan,model\n";
  for (const CensusRow& r : rows) {
    for (std::size_t i = 0; i < r.word.size(); ++i)
      os << (i ? " " : "") << r.word[i];
    os << ',' << r.weight << ',' << r.winding << ',' << (r.is_fan ? 1 : 0)
       << ',' << r.model << '\n';
  }
  return os.str();
}

InputKind sniff_kind(const std::string& text) {
  const json j = parse(text);
  if (j.is_object()) {
    if (j.contains("polygon")) return InputKind::Ingredients;
    if (j.contains("vertices")) return InputKind::Polygon;
    if (j.contains("vectors"))
      return j.contains("labels") ? InputKind::SemitoricFan
                                  : InputKind::ToricFan;
  }
  throw ParseError("unrecognized input shape");
}

}  // namespace semitoric
