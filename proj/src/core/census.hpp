#pragma once

// Brute-force enumeration of words S T^{a0} ... S T^{a_{d-1}} that lift to
// (identity, weight 12k), plus geometry-only checks that validate the fan
// correspondence without any group arithmetic.  This module is the
// independent oracle the rest of the library is tested against.

#include <cstddef>
#include <vector>

#include "core/toric.hpp"

namespace semitoric {

struct EnumerationSpec {
  int max_length = 6;     // d ranges over 1..max_length
  i64 coeff_bound = 3;    // |a_i| <= coeff_bound
  i64 weight = 12;        // required lift weight (12 <=> fans)
  unsigned threads = 1;   // partitioned by a_0; merge order is fixed
};

// All words of each length d <= max_length, in (d, lexicographic) order,
// whose lift is (identity, spec.weight).  Deterministic for any thread
// count.  Throws FanError if the search space exceeds 10^8 words.
std::vector<FanWord> enumerate_solutions(const EnumerationSpec& spec);

// Geometric verdict on a word, no group arithmetic: builds the rays from
// the seed ((1,0),(0,1)), then checks primitivity, unit adjacent
// determinants including the wrap-around, closure of the recurrence, and
// ray-crossing winding 1.
bool geometric_equiv_check(const FanWord& a);

// Floating-point winding of the ray cycle generated by a word, via angle
// summation; rounds to the nearest integer.
i64 float_winding_crosscheck(const FanWord& a);

struct CensusRow {
  FanWord word;
  i64 weight = 0;
  i64 winding = 0;
  bool is_fan = false;
  std::string model;  // minimal model tag for fans, "-" otherwise
};

// One row per kernel word (any positive winding) within the bounds.
std::vector<CensusRow> census(int max_length, i64 coeff_bound,
                              unsigned threads = 1);

}  // namespace semitoric
