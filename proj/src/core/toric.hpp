#pragma once

// Complete nonsingular fans in Z^2 and the correspondence with words
// S T^{a0} ... S T^{a_{d-1}} of weight 12.  A fan is a cyclic list of
// primitive rays v_0, ..., v_{d-1} in counterclockwise order with
// det(v_i, v_{i+1}) = 1 and total turning once around the origin; its word
// is a_i = det(v_i, v_{i+2}), equivalently v_{i+2} = -v_i + a_i v_{i+1}.

#include <optional>
#include <string>
#include <vector>

#include "core/group.hpp"
#include "core/lattice.hpp"
#include "core/validation.hpp"

namespace semitoric {

struct FanError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ToricFan {
  std::vector<Vec2> rays;
  friend bool operator==(const ToricFan&, const ToricFan&) = default;
};

using FanWord = std::vector<i64>;

// a_i = det(v_i, v_{i+2}), indices mod d.  Requires d >= 3.
FanWord fan_to_word(const ToricFan& f);

// Runs the recurrence v_{i+2} = -v_i + a_i v_{i+1} from the seed; returns
// all d vectors.  The result is a fan iff the word has weight 12 (checked by
// validate_toric, not here).
ToricFan word_to_fan(const FanWord& a, Vec2 v0 = {1, 0}, Vec2 v1 = {0, 1});


// d >= 3, det(v_i, v_{i+1}) = 1 for all i, and the word's lift is
// (identity, weight 12).  Adjacent unit determinants force the matrix part
// to close up on their own, so the weight check is exactly the requirement
// that the rays wind once.
ValidationReport validate_toric(const ToricFan& f);

// Number of upward crossings of the positive x-axis by the closed path
// v_0 -> v_1 -> ... -> v_0.  With positive adjacent determinants every
// upward y-crossing happens at x > 0, so this counts full turns exactly.
// Throws FanError if some det(v_i, v_{i+1}) <= 0.
i64 geometric_winding(const std::vector<Vec2>& rays);

// Angle-sum winding in doubles, rounded to the nearest integer.
i64 float_winding(const std::vector<Vec2>& rays);

// Insert v_i + v_{i+1} between positions i and i+1.  The word changes by
// (..., a_{i-1}, a_i, ...) -> (..., a_{i-1}+1, 1, a_i+1, ...).
ToricFan corner_chop(const ToricFan& f, int i);

// Remove v_i; requires v_i == v_{i-1} + v_{i+1} (i.e. a_{i-1} == 1) and
// d >= 4.  Exact inverse of corner_chop at corner i-1 when i >= 1.
ToricFan reverse_corner_chop(const ToricFan& f, int i);

// Smallest i with v_i == v_{i-1} + v_{i+1}, if any.  Every valid fan with
// d > 4 has one.
std::optional<int> find_reducible(const ToricFan& f);

enum class ModelKind { Triangle, Rectangle, Hirzebruch };

struct MinimalModel {
  ModelKind kind = ModelKind::Triangle;
  i64 k = 0;  // Hirzebruch parameter, >= 1; 0 otherwise
  friend bool operator==(const MinimalModel&, const MinimalModel&) = default;
};

std::string to_string(const MinimalModel& m);

// Triangle for d == 3; Rectangle / Hirzebruch(|k|) when the word is a cyclic
// shift of (0, k, 0, -k) at d == 4.  Empty for anything else.
std::optional<MinimalModel> classify_minimal(const ToricFan& f);

// A concrete fan for each model: the triangle ((1,0),(0,1),(-1,-1)) and the
// quadrilateral ((0,1),(-1,-k),(0,-1),(1,0)).
ToricFan model_fan(const MinimalModel& m);

struct ReduceResult {
  MinimalModel model;
  ToricFan reduced;         // the fan the reduction actually stops at
  std::vector<int> trace;   // reverse_corner_chop indices, in order applied
};

// Repeatedly remove the lowest-index reducible ray until d <= 4; validates
// the input and asserts validity of every intermediate fan.
ReduceResult fulton_reduce(const ToricFan& f);

// Undo a reduction trace: chops applied in reverse order reproduce the fan
// the trace was recorded from, exactly.
ToricFan replay_reduce_trace(const ToricFan& reduced,
                             const std::vector<int>& trace);

// Canonical representative modulo cyclic rotation and SL2(Z): for every
// rotation map (v_r, v_{r+1}) to ((1,0),(0,1)) and take the lexicographically
// smallest ray list.
std::vector<Vec2> canonical_cycle(const ToricFan& f);

bool equivalent_fans(const ToricFan& a, const ToricFan& b);

}  // namespace semitoric
