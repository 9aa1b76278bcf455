#include "semitoric/semitoric.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>
#include <variant>

#include "core/json_io.hpp"
#include "core/svg.hpp"
#include "json.hpp"

using namespace semitoric;

struct st_object {
  std::variant<ToricFan, SemitoricFan, PrimitiveSemitoricPolygon,
               IngredientList>
      value;
};

namespace {

thread_local std::string g_error;

int fail(int code, const std::string& msg) {
  g_error = msg;
  return code;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void give(char** out, const std::string& s) {
  if (out) *out = dup_string(s);
}

// Domain errors map to ST_INVALID, malformed text to ST_PARSE.
template <typename F>
int guarded(F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    return fail(ST_PARSE, e.what());
  } catch (const std::exception& e) {
    return fail(ST_INVALID, e.what());
  }
}

ValidationReport validate_any(const st_object& obj) {
  return std::visit(
      [](const auto& v) -> ValidationReport {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ToricFan>)
          return validate_toric(v);
        else if constexpr (std::is_same_v<T, SemitoricFan>)
          return validate_semitoric(v);
        else if constexpr (std::is_same_v<T, PrimitiveSemitoricPolygon>)
          return validate_semitoric_polygon(v);
        else
          return validate_ingredients(v);
      },
      obj.value);
}

int parse_density(const char* measure, Density* out) {
  const std::string m = measure ? measure : "expabsx";
  if (m == "lebesgue") {
    *out = Density::Lebesgue;
    return ST_OK;
  }
  if (m == "expabsx") {
    *out = Density::ExpAbsX;
    return ST_OK;
  }
  return fail(ST_INVALID, "unknown measure \"" + m + "\"");
}

}  // namespace

extern "C" {

int st_parse(const char* json, st_object** out) {
  if (!json || !out) return fail(ST_PARSE, "null argument");
  return guarded([&] {
    const std::string text = json;
    auto obj = std::make_unique<st_object>();
    switch (sniff_kind(text)) {
      case InputKind::ToricFan:
        obj->value = toric_fan_from_json(text);
        break;
      case InputKind::SemitoricFan:
        obj->value = semitoric_fan_from_json(text);
        break;
      case InputKind::Polygon:
        obj->value = polygon_from_json(text);
        break;
      case InputKind::Ingredients:
        obj->value = ingredients_from_json(text);
        break;
    }
    *out = obj.release();
    return ST_OK;
  });
}

int st_object_kind(const st_object* obj) {
  if (!obj) return 0;
  return static_cast<int>(obj->value.index()) + 1;
}

void st_object_free(st_object* obj) { delete obj; }

int st_object_to_json(const st_object* obj, char** out) {
  if (!obj || !out) return fail(ST_INVALID, "null argument");
  return guarded([&] {
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, ToricFan>)
            give(out, toric_fan_to_json(v));
          else if constexpr (std::is_same_v<T, SemitoricFan>)
            give(out, semitoric_fan_to_json(v));
          else if constexpr (std::is_same_v<T, PrimitiveSemitoricPolygon>)
            give(out, polygon_to_json(v));
          else
            give(out, ingredients_to_json(v));
        },
        obj->value);
    return ST_OK;
  });
}

int st_validate(const st_object* obj, char** report) {
  if (!obj) return fail(ST_INVALID, "null argument");
  return guarded([&] {
    const ValidationReport r = validate_any(*obj);
    give(report, r.reason);
    if (!r.valid) return fail(ST_INVALID, r.reason);
    return ST_OK;
  });
}

int st_reduce(const st_object* fan, int verify, char** result) {
  if (!fan || !result) return fail(ST_INVALID, "null argument");
  const ToricFan* f = std::get_if<ToricFan>(&fan->value);
  if (!f) return fail(ST_INVALID, "reduce expects a toric fan");
  return guarded([&] {
    const ReduceResult r = fulton_reduce(*f);
    std::vector<ToricTraceStep> trace;
    for (int i : r.trace) trace.push_back({false, i});
    if (verify) {
      const ToricFan replayed = replay_reduce_trace(r.reduced, r.trace);
      if (!(replayed == *f))
        return fail(ST_INVALID, "trace replay does not reproduce the input");
    }
    nlohmann::ordered_json out{
        {"model", to_string(r.model)},
        {"moves", r.trace.size()},
        {"reduced", nlohmann::ordered_json::parse(toric_fan_to_json(r.reduced))},
        {"trace", nlohmann::ordered_json::parse(toric_trace_to_json(trace))}};
    give(result, out.dump());
    return ST_OK;
  });
}

int st_normalize(const st_object* fan, int verify, char** result) {
  if (!fan || !result) return fail(ST_INVALID, "null argument");
  const SemitoricFan* f = std::get_if<SemitoricFan>(&fan->value);
  if (!f) return fail(ST_INVALID, "normalize expects a semitoric fan");
  return guarded([&] {
    const NormalizeResult r = normalize(*f);
    if (verify) {
      const SemitoricFan replayed = replay_trace(*f, r.trace);
      if (!(replayed == r.fan))
        return fail(ST_INVALID, "trace replay does not reach the result");
    }
    nlohmann::ordered_json out{
        {"complexity", complexity(r.fan)},
        {"k", r.k},
        {"moves", r.trace.size()},
        {"fan", nlohmann::ordered_json::parse(semitoric_fan_to_json(r.fan))},
        {"trace", nlohmann::ordered_json::parse(fan_trace_to_json(r.trace))}};
    give(result, out.dump());
    return ST_OK;
  });
}

int st_enumerate(int max_length, long long coeff_bound, char** csv) {
  if (!csv) return fail(ST_INVALID, "null argument");
  return guarded([&] {
    give(csv, census_to_csv(census(max_length, coeff_bound)));
    return ST_OK;
  });
}

int st_distance(const st_object* a, const st_object* b, const char* measure,
                double cap_b0, double cap_ratio, char** result) {
  if (!a || !b || !result) return fail(ST_INVALID, "null argument");
  Density density;
  if (int rc = parse_density(measure, &density)) return rc;
  if (!(cap_b0 > 0) || !(cap_ratio > 0 && cap_ratio < 1))
    return fail(ST_INVALID, "caps must have b0 > 0 and 0 < ratio < 1");
  const CapSequence caps{cap_b0, cap_ratio};
  return guarded([&] {
    double value = 0, tail = 0;
    if (const auto* pa = std::get_if<PrimitiveSemitoricPolygon>(&a->value)) {
      const auto* pb = std::get_if<PrimitiveSemitoricPolygon>(&b->value);
      if (!pb) return fail(ST_INVALID, "distance arguments have mixed kinds");
      value = family_distance(*pa, *pb, density);
    } else if (const auto* ia = std::get_if<IngredientList>(&a->value)) {
      const auto* ib = std::get_if<IngredientList>(&b->value);
      if (!ib) return fail(ST_INVALID, "distance arguments have mixed kinds");
      value = ingredient_distance(*ia, *ib, density, caps);
      if (ia->mf() > 0) tail = caps.tail_bound(ia->series[0].degree);
    } else {
      return fail(ST_INVALID,
                  "distance expects two polygons or two ingredient lists");
    }
    nlohmann::ordered_json out{
        {"distance", value},
        {"measure", density == Density::Lebesgue ? "lebesgue" : "expabsx"},
        {"cap_b0", cap_b0},
        {"cap_ratio", cap_ratio},
        {"tail_bound", tail}};
    give(result, out.dump());
    return ST_OK;
  });
}

int st_path(const st_object* a, const st_object* b, int steps, char** result) {
  if (!a || !b || !result) return fail(ST_INVALID, "null argument");
  const auto* ia = std::get_if<IngredientList>(&a->value);
  const auto* ib = std::get_if<IngredientList>(&b->value);
  if (!ia || !ib)
    return fail(ST_INVALID, "path expects two ingredient lists");
  return guarded([&] {
    give(result, path_to_json(connectivity_path(*ia, *ib, steps)));
    return ST_OK;
  });
}

int st_render(const st_object* obj, char** svg) {
  if (!obj || !svg) return fail(ST_INVALID, "null argument");
  return guarded([&] {
    std::visit([&](const auto& v) { give(svg, render_svg(v)); }, obj->value);
    return ST_OK;
  });
}

const char* st_last_error(void) { return g_error.c_str(); }

void st_string_free(char* s) { std::free(s); }

}  // extern "C"
