#pragma once

// Fans with labeled corners.  A corner (v_i, v_{i+1}) is
//
//   Delzant:  det(v_i, v_{i+1}) = 1
//   Hidden:   det(v_i, T v_{i+1}) = 1, both rays strictly below the x-axis
//   Fake:     det(v_i, T v_{i+1}) = 0, both rays strictly below the x-axis
//
// A pair can satisfy the Delzant and fake conditions at once
// (v = (k-1,-1), w = (k,-1)); the stored label decides which corner it is,
// which is why labels are data and not derived.  The number of fake plus
// hidden corners (the complexity) is preserved by every move, and every fan
// of complexity c reduces to the standard fan of complexity c.

#include <optional>
#include <string>
#include <vector>

#include "core/toric.hpp"

namespace semitoric {

enum class CornerLabel : unsigned char { Delzant, Fake, Hidden };

const char* to_string(CornerLabel l);

struct SemitoricFan {
  std::vector<Vec2> rays;
  std::vector<CornerLabel> labels;  // labels[i] belongs to (v_i, v_{i+1 mod d})
  friend bool operator==(const SemitoricFan&, const SemitoricFan&) = default;
};

ValidationReport validate_semitoric(const SemitoricFan& f);

int complexity(const SemitoricFan& f);

// (0,-1), (1,0), (c,1), (-1,0), then (-c+n,-1) for n = 0..c-1; the first
// four corners Delzant, the rest fake.
SemitoricFan standard_fan(int c);

enum class MoveKind { Chop, Unchop, RemoveHidden, CommuteFakeDelzant, ActT, Rotate };

// index: the corner (Chop, RemoveHidden, CommuteFakeDelzant), the removed
// ray (Unchop), or the new starting ray (Rotate).  k: the T power (ActT).
struct FanMove {
  MoveKind kind = MoveKind::Chop;
  int index = 0;
  i64 k = 0;
  friend bool operator==(const FanMove&, const FanMove&) = default;
};

std::string to_string(const FanMove& m);

// The moves:
//   Chop(i)                Delzant corner i; inserts v_i + v_{i+1}, both new
//                          corners Delzant.
//   Unchop(i)              removes v_i; needs v_i = v_{i-1} + v_{i+1} and
//                          Delzant corners on both sides.
//   RemoveHidden(i)        hidden corner i; inserts T v_{i+1}, the new
//                          corners are (Delzant, Fake).
//   CommuteFakeDelzant(i)  fake corner i followed by a Delzant corner below
//                          the x-axis; replaces v_{i+1} by T v_{i+2}, the
//                          labels at (i, i+1) become (Delzant, Fake).
//   ActT(k)                every ray v -> T^k v.
//   Rotate(j)              relabel so the old index j becomes 0; geometric
//                          identity, recorded so traces replay exactly.
// Throws FanError naming the move and the violated precondition.
SemitoricFan apply_move(const SemitoricFan& f, const FanMove& m);

// Chops the lower-to-upper crossing corner until a ray (1,0) exists, shears
// its predecessor (a,-1) to (0,-1) with ActT(a), and rotates the pair to the
// front.  Appends what it did to *trace when trace is nonnull.
SemitoricFan ensure_right_angle(const SemitoricFan& f,
                                std::vector<FanMove>* trace);

struct NormalizeResult {
  SemitoricFan fan;            // exactly standard_fan(complexity(input))
  std::vector<FanMove> trace;  // replays from the input to .fan
  i64 k = 0;                   // net T power applied along the way
};

// Right angle, then remove every hidden corner, then push the fake corners
// into one block at the end, then shrink the residual Delzant part to the
// quadrilateral with word (0,0,0,0).  Complexity is asserted invariant and
// every intermediate fan is validated; a loud FanError reports any failure
// of the decreasing measures.
NormalizeResult normalize(const SemitoricFan& f);

// Applies the trace, validating every intermediate fan.
SemitoricFan replay_trace(const SemitoricFan& f,
                          const std::vector<FanMove>& trace);

// Smallest (rays, labels) sequence over all rotations of the start index.
SemitoricFan canonical_rotation(const SemitoricFan& f);

bool equal_up_to_rotation(const SemitoricFan& a, const SemitoricFan& b);

}  // namespace semitoric
