#pragma once

// Marked polygons: a convex rational polygon together with markers
// (lambda_j, eps_j, k_j) naming the vertical cut lines, their (upward)
// direction, and the twisting integers.  Edges correspond to fan rays via
// primitive inward normals; marked top vertices carry the fake or hidden
// corners, every other corner must be Delzant.
//
// The metric between two marked polygons with the same number of markers is
//     sum over u in {0,1}^m of nu( t^u(P) symdiff t^u(Q) )
// where t^u shears by u_j at the j-th cut of each polygon and both are
// first normalized to k_0 = 0 by a global shear, so the distance only sees
// the twisting classes.

#include <vector>

#include "core/polygon.hpp"
#include "core/semitoric_fan.hpp"

namespace semitoric {

struct Marker {
  Rat lambda;
  int eps = 1;
  i64 k = 0;
  friend bool operator==(const Marker&, const Marker&) = default;
};

struct PrimitiveSemitoricPolygon {
  RationalPolygon polygon;
  std::vector<Marker> markers;  // sorted by strictly increasing lambda
  friend bool operator==(const PrimitiveSemitoricPolygon&,
                         const PrimitiveSemitoricPolygon&) = default;
};

// Primitive inward normals of the edges (vertices[i] -> vertices[i+1]),
// counterclockwise; requires a valid polygon.
std::vector<Vec2> edge_normals(const RationalPolygon& p);

// Offset of edge i: normal . x over the edge's line.
Rat edge_offset(const RationalPolygon& p, int i, const Vec2& normal);

// Rebuilds a polygon as the intersection of the half planes
// { normal_i . x >= offset_i } by walking consecutive line intersections;
// edges of zero length disappear.  Throws PolygonError if the result is
// not a valid polygon.
RationalPolygon polygon_from_offsets(const std::vector<Vec2>& normals,
                                     const std::vector<Rat>& offsets);

// Rotates the vertex cycle so that edge j has normal rays[j] for every j.
RationalPolygon align_polygon_edges(const RationalPolygon& p,
                                    const std::vector<Vec2>& rays);

// The fan whose ray j is the normal of edge j, labels decided by the
// markers: the corner at a marked top vertex is Fake when
// det(n, T n') = 0 and Hidden when det(n, T n') = 1; unmarked corners must
// be Delzant.  Throws PolygonError when the polygon and markers do not
// describe a fan.
SemitoricFan fan_of_polygon(const PrimitiveSemitoricPolygon& p);

ValidationReport validate_semitoric_polygon(const PrimitiveSemitoricPolygon& p);

// A polygon whose fan is exactly f: edge lengths are the lexicographically
// deterministic optimum of { min sum len : sum len_i dir_i = 0, len >= 1 },
// scaled to integers, walked from the start of edge 0, translated so the
// smallest vertex is the origin.  Markers sit at the fake and hidden
// corners with k = 0.  fan_of_polygon inverts this exactly.
PrimitiveSemitoricPolygon polygon_realizing_fan(const SemitoricFan& f);

// The member at time t in [0, 1] of the one-parameter family that realizes
// the move on this polygon: growing corner or edge cuts (Chop,
// RemoveHidden), a shrinking edge (Unchop), or relax-then-cut
// (CommuteFakeDelzant).  t = 0 is the input polygon; markers travel with
// their corners.  ActT and Rotate are instantaneous representative swaps
// and are rejected here; apply_polygon_move handles them.
PrimitiveSemitoricPolygon family_polygon(const SemitoricFan& fan,
                                         const PrimitiveSemitoricPolygon& p,
                                         const FanMove& move, const Rat& t);

// Endpoint of the family (or the exact transform for ActT and Rotate),
// with the vertex cycle aligned so fan_of_polygon(result) equals
// apply_move(fan, move).
PrimitiveSemitoricPolygon apply_polygon_move(const SemitoricFan& fan,
                                             const PrimitiveSemitoricPolygon& p,
                                             const FanMove& move);

// Linear interpolation of edge offsets between two polygons over the same
// fan with identical labels and twisting integers; every intermediate
// polygon realizes that fan.
PrimitiveSemitoricPolygon interpolate_same_fan(
    const PrimitiveSemitoricPolygon& a, const PrimitiveSemitoricPolygon& b,
    const Rat& t);

// Shear t^u: for each j with u_j = 1, vertical shear by eps_j at lambda_j.
RationalPolygon unfold(const PrimitiveSemitoricPolygon& p,
                       const std::vector<int>& u);

// Global shear making k_0 = 0; identity when there are no markers.
PrimitiveSemitoricPolygon align_twisting(const PrimitiveSemitoricPolygon& p);

// The marked-polygon distance described above.  Throws PolygonError when
// the marker counts differ.
double family_distance(const PrimitiveSemitoricPolygon& a,
                       const PrimitiveSemitoricPolygon& b, Density density);

}  // namespace semitoric
