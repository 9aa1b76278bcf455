#pragma once

// Words in S and T, evaluated in the central extension of SL2(Z) in which
// the total turning of a fan is visible.  The extension is presented by
// <S,T | STS = T^-1 S T^-1>; it is classified by the weight homomorphism
//
//   w(S) = 3,  w(T) = -1,
//
// and an element is determined by the pair (SL2 matrix, weight).  The weight
// of any word for a fixed matrix is constant mod 12, so the pair is
// consistent iff weight == w(some word for the matrix) mod 12.  A kernel
// element (matrix == I) has weight 12k where k is its winding number.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "core/lattice.hpp"
#include "core/rational.hpp"

namespace semitoric {

struct GroupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Gen : unsigned char { S, T };

struct GenPower {
  Gen gen;
  i64 pow;
  friend bool operator==(const GenPower&, const GenPower&) = default;
};

// Alternating nonzero powers of S and T.  All construction paths normalize
// eagerly: adjacent powers of the same generator merge and zero powers drop,
// so two equal words always compare equal part-by-part.
class GeneratorWord {
 public:
  GeneratorWord() = default;
  explicit GeneratorWord(const std::vector<GenPower>& parts);

  void append(Gen g, i64 pow);
  void append(const GeneratorWord& w);

  const std::vector<GenPower>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;

 private:
  std::vector<GenPower> parts_;
};

// S T^{a0} S T^{a1} ... S T^{a_{d-1}}.
GeneratorWord st_word(const std::vector<i64>& a);

// 3 * (sum of S exponents) - (sum of T exponents).
i64 word_weight(const GeneratorWord& w);

struct LiftedElement {
  Mat2 matrix;
  i64 weight = 0;
  friend bool operator==(const LiftedElement&, const LiftedElement&) = default;
};

LiftedElement lift_word(const GeneratorWord& w);
inline LiftedElement lift_identity() { return {kIdentity, 0}; }

// Some word in S and T evaluating to m in SL2(Z) (Euclidean elimination on
// the first column).  Any such word does; weights of different choices agree
// mod 12.  Requires det(m) == 1.
GeneratorWord sl2_decompose(const Mat2& m);

// weight / 12 for a kernel element.  Throws GroupError if the matrix is not
// the identity or the weight is not divisible by 12.
i64 winding_number(const LiftedElement& g);

// A point of the rational projective line: a rational number or infinity.
struct ProjectivePoint {
  bool infinite = false;
  Rat value;  // meaningful only when !infinite

  static ProjectivePoint infinity() { return {true, Rat(0)}; }
  static ProjectivePoint of(const Rat& v) { return {false, v}; }
  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
};

// Linear fractional action of SL2(Z) (through its projective quotient):
// [[a,b],[c,d]] x = (ax+b)/(cx+d), with infinity handled projectively.
ProjectivePoint psl2_act(const Mat2& m, const ProjectivePoint& p);

// For a word S T^{a0} ... S T^{a_{d-1}} that is trivial in the projective
// quotient: indices (i, j) of two entries with |a| <= 1 that are not
// cyclically adjacent (d > 3), or (0, 1) for d <= 3.  Empty result means the
// scan found no witness, which contradicts triviality and flags a violated
// precondition.  Throws GroupError if the word is not +-identity in SL2(Z).
std::optional<std::pair<int, int>> psltz_witness(const std::vector<i64>& a);

}  // namespace semitoric
