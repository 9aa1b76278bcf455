#pragma once

#include "core/census.hpp"
#include "core/moduli.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace semitoric {

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Serialized forms.  All writers are byte-deterministic; all readers throw
// ParseError on malformed JSON or a shape that does not match the schema.
// Semantic problems (a fan that does not validate, say) are not checked
// here; readers return the object as stored.
//
//   word            [{"gen":"S","pow":3}, ...]
//   toric fan       {"vectors":[[x,y],...]}
//   toric trace     [{"move":"chop"|"unchop","index":i}, ...]
//   semitoric fan   {"vectors":[[x,y],...],"labels":["delzant"|...]}
//   semitoric trace [{"move":"act_t","k":2}, {"move":"chop","index":1}, ...]
//   polygon         {"vertices":[["p/q","r/s"],...],"markers":[...]}
//   ingredients     {"polygon":{...},"h":[...],"series":[matrix,...]}

std::string word_to_json(const GeneratorWord& w);
GeneratorWord word_from_json(const std::string& text);

std::string toric_fan_to_json(const ToricFan& f);
ToricFan toric_fan_from_json(const std::string& text);

struct ToricTraceStep {
  bool chop = false;  // false: reverse chop (ray removal)
  int index = 0;
  friend bool operator==(const ToricTraceStep&, const ToricTraceStep&) = default;
};

std::string toric_trace_to_json(const std::vector<ToricTraceStep>& t);
std::vector<ToricTraceStep> toric_trace_from_json(const std::string& text);

std::string semitoric_fan_to_json(const SemitoricFan& f);
SemitoricFan semitoric_fan_from_json(const std::string& text);

std::string fan_trace_to_json(const std::vector<FanMove>& t);
std::vector<FanMove> fan_trace_from_json(const std::string& text);

std::string polygon_to_json(const PrimitiveSemitoricPolygon& p);
PrimitiveSemitoricPolygon polygon_from_json(const std::string& text);

std::string ingredients_to_json(const IngredientList& m);
IngredientList ingredients_from_json(const std::string& text);

std::string path_to_json(const std::vector<IngredientList>& path);
std::vector<IngredientList> path_from_json(const std::string& text);

// word,weight,winding,is_fan,model with the word space-separated.
std::string census_to_csv(const std::vector<CensusRow>& rows);

enum class InputKind { ToricFan, SemitoricFan, Polygon, Ingredients };

// Decides by shape: "vectors" plus "labels" is a semitoric fan, "vectors"
// alone toric, "vertices" a polygon, "polygon" an ingredient list.
InputKind sniff_kind(const std::string& text);

}  // namespace semitoric
