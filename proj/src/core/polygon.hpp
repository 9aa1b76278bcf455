#pragma once

// Convex polygons with rational vertices, exact constructive geometry, and
// the two measures used by the polygon metric.  Vertices are stored
// counterclockwise and strictly convex; the empty polygon (no vertices) is
// the legal result of clipping everything away.

#include <stdexcept>
#include <vector>

#include "core/rational.hpp"
#include "core/validation.hpp"

namespace semitoric {

class PolygonError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RationalPolygon {
  std::vector<Pt> vertices;
  friend bool operator==(const RationalPolygon&, const RationalPolygon&) =
      default;
  bool empty() const { return vertices.empty(); }
};

// At least 3 vertices, counterclockwise, strictly convex (so no repeated or
// collinear vertices).
ValidationReport validate_polygon(const RationalPolygon& p);

// Same cycle, started at the lexicographically smallest vertex.
RationalPolygon canonical_start(const RationalPolygon& p);

// Drops repeated and collinear vertices; returns the empty polygon when
// fewer than 3 survive.  Orientation is preserved.
RationalPolygon tidy(const RationalPolygon& p);

Rat polygon_area(const RationalPolygon& p);

// The closed half plane { x : normal . x >= offset }.
struct HalfPlane {
  Pt normal;
  Rat offset;
};

RationalPolygon clip(const RationalPolygon& p, const HalfPlane& h);

RationalPolygon intersect(const RationalPolygon& p, const RationalPolygon& q);

// Densities on the plane: dx dy, or e^{-|x|} dx dy which gives every
// unbounded-in-x family member a finite measure.
enum class Density { Lebesgue, ExpAbsX };

double polygon_measure(const RationalPolygon& p, Density density);

// nu(p) + nu(q) - 2 nu(p intersect q).
double symmetric_difference_measure(const RationalPolygon& p,
                                    const RationalPolygon& q, Density density);

// (x, y) -> (x, y + k (x - lambda)) on x >= lambda, identity on
// x <= lambda; crossing edges get a break vertex first.  Throws
// PolygonError when the image fails to be convex.
RationalPolygon vertical_shear(const RationalPolygon& p, const Rat& lambda,
                               const Rat& k);

RationalPolygon translate(const RationalPolygon& p, const Pt& by);

}  // namespace semitoric
