#include "core/semitoric_polygon.hpp"

#include <algorithm>

#include "core/lp.hpp"

namespace semitoric {

namespace {

int wrap(int i, int d) { return ((i % d) + d) % d; }

Rat dot(const Vec2& n, const Pt& p) {
  return Rat(n.x) * p.x + Rat(n.y) * p.y;
}

Pt line_intersect(const Vec2& n1, const Rat& c1, const Vec2& n2,
                  const Rat& c2) {
  const i64 D = det2(n1, n2);
  if (D == 0) throw PolygonError("parallel edge lines do not meet");
  return {(c1 * n2.y - c2 * n1.y) / D, (c2 * n1.x - c1 * n2.x) / D};
}

void sort_markers(std::vector<Marker>& ms) {
  std::sort(ms.begin(), ms.end(),
            [](const Marker& a, const Marker& b) { return a.lambda < b.lambda; });
}

int marker_at(const std::vector<Marker>& ms, const Rat& x) {
  for (std::size_t j = 0; j < ms.size(); ++j)
    if (ms[j].lambda == x) return static_cast<int>(j);
  throw PolygonError("no marker at x = " + rat_to_string(x));
}

const Rat& min_rat(const Rat& a, const Rat& b) { return a < b ? a : b; }

}  // namespace

std::vector<Vec2> edge_normals(const RationalPolygon& p) {
  using boost::multiprecision::cpp_int;
  const int n = static_cast<int>(p.vertices.size());
  if (n < 3) throw PolygonError("normals of a degenerate polygon");
  std::vector<Vec2> out(n);
  for (int i = 0; i < n; ++i) {
    const Pt& a = p.vertices[i];
    const Pt& b = p.vertices[(i + 1) % n];
    const Rat nx = a.y - b.y;
    const Rat ny = b.x - a.x;
    const cpp_int den = lcm(denominator(nx), denominator(ny));
    cpp_int ix = numerator(nx) * (den / denominator(nx));
    cpp_int iy = numerator(ny) * (den / denominator(ny));
    const cpp_int g = gcd(abs(ix), abs(iy));
    if (g == 0) throw PolygonError("zero-length edge");
    out[i] = {(ix / g).convert_to<i64>(), (iy / g).convert_to<i64>()};
  }
  return out;
}

Rat edge_offset(const RationalPolygon& p, int i, const Vec2& normal) {
  return dot(normal, p.vertices[wrap(i, static_cast<int>(p.vertices.size()))]);
}

RationalPolygon polygon_from_offsets(const std::vector<Vec2>& normals,
                                     const std::vector<Rat>& offsets) {
  const int d = static_cast<int>(normals.size());
  if (d < 3 || offsets.size() != normals.size())
    throw PolygonError("offsets: bad edge data");
  std::vector<Pt> verts(d);
  for (int j = 0; j < d; ++j) {
    const int prev = wrap(j - 1, d);
    verts[j] = line_intersect(normals[prev], offsets[prev], normals[j],
                              offsets[j]);
  }
  RationalPolygon out = tidy({verts});
  ValidationReport r = validate_polygon(out);
  if (!r.valid) throw PolygonError("offsets yield no polygon: " + r.reason);
  return out;
}

RationalPolygon align_polygon_edges(const RationalPolygon& p,
                                    const std::vector<Vec2>& rays) {
  const std::vector<Vec2> normals = edge_normals(p);
  const int d = static_cast<int>(normals.size());
  if (static_cast<int>(rays.size()) != d)
    throw PolygonError("edge count != ray count");
  for (int r = 0; r < d; ++r) {
    bool ok = true;
    for (int j = 0; j < d && ok; ++j) ok = normals[(j + r) % d] == rays[j];
    if (ok) {
      RationalPolygon q = p;
      std::rotate(q.vertices.begin(), q.vertices.begin() + r,
                  q.vertices.end());
      return q;
    }
  }
  throw PolygonError("polygon edges do not realize the fan");
}

SemitoricFan fan_of_polygon(const PrimitiveSemitoricPolygon& sp) {
  {
    ValidationReport r = validate_polygon(sp.polygon);
    if (!r.valid) throw PolygonError("invalid polygon: " + r.reason);
  }
  for (std::size_t j = 0; j < sp.markers.size(); ++j) {
    if (sp.markers[j].eps != 1)
      throw PolygonError("marker " + std::to_string(j) + " has eps != 1");
    if (j > 0 && !(sp.markers[j - 1].lambda < sp.markers[j].lambda))
      throw PolygonError("marker lambdas not strictly increasing");
  }
  const std::vector<Vec2> normals = edge_normals(sp.polygon);
  const int d = static_cast<int>(normals.size());

  SemitoricFan fan;
  fan.rays = normals;
  fan.labels.assign(d, CornerLabel::Delzant);
  std::vector<bool> used(sp.markers.size(), false);
  for (int j = 0; j < d; ++j) {
    const Vec2& n1 = normals[j];
    const Vec2& n2 = normals[(j + 1) % d];
    const Pt& w = sp.polygon.vertices[(j + 1) % d];
    const bool top = n1.y < 0 && n2.y < 0;
    int mk = -1;
    if (top) {
      for (std::size_t s = 0; s < sp.markers.size(); ++s)
        if (sp.markers[s].lambda == w.x) mk = static_cast<int>(s);
    }
    if (mk >= 0) {
      if (used[mk]) throw PolygonError("two top corners on one marker line");
      used[mk] = true;
      const i64 dtw = det2(n1, kT * n2);
      if (dtw == 0)
        fan.labels[j] = CornerLabel::Fake;
      else if (dtw == 1)
        fan.labels[j] = CornerLabel::Hidden;
      else
        throw PolygonError("marked corner at x = " + rat_to_string(w.x) +
                           " has det(n, Tn') = " + std::to_string(dtw));
    } else {
      const i64 dd = det2(n1, n2);
      if (dd != 1)
        throw PolygonError("unmarked corner " + std::to_string(j) +
                           " has det = " + std::to_string(dd));
    }
  }
  for (std::size_t s = 0; s < used.size(); ++s)
    if (!used[s])
      throw PolygonError("marker at x = " + rat_to_string(sp.markers[s].lambda) +
                         " hits no top vertex");
  ValidationReport r = validate_semitoric(fan);
  if (!r.valid) throw PolygonError("edge normals are not a fan: " + r.reason);
  return fan;
}

ValidationReport validate_semitoric_polygon(
    const PrimitiveSemitoricPolygon& p) {
  try {
    fan_of_polygon(p);
    return {true, ""};
  } catch (const std::exception& e) {
    return {false, e.what()};
  }
}

PrimitiveSemitoricPolygon polygon_realizing_fan(const SemitoricFan& f) {
  using boost::multiprecision::cpp_int;
  {
    ValidationReport r = validate_semitoric(f);
    if (!r.valid) throw FanError("realize: invalid fan: " + r.reason);
  }
  const int d = static_cast<int>(f.rays.size());
  std::vector<Vec2> dirs(d);
  for (int i = 0; i < d; ++i) dirs[i] = {f.rays[i].y, -f.rays[i].x};

  std::vector<std::vector<Rat>> A(2, std::vector<Rat>(d));
  std::vector<Rat> b(2, Rat(0)), c(d, Rat(1));
  for (int i = 0; i < d; ++i) {
    A[0][i] = Rat(dirs[i].x);
    A[1][i] = Rat(dirs[i].y);
    b[0] -= dirs[i].x;
    b[1] -= dirs[i].y;
  }
  auto y = lp_solve_min(A, b, c);
  if (!y) throw FanError("realize: no closed polygon with edge lengths >= 1");
  std::vector<Rat> len(d);
  cpp_int scale = 1;
  for (int i = 0; i < d; ++i) {
    len[i] = (*y)[i] + 1;
    scale = lcm(scale, denominator(len[i]));
  }
  std::vector<Pt> verts(d);
  Pt cur{Rat(0), Rat(0)};
  for (int i = 0; i < d; ++i) {
    verts[i] = cur;
    cur = cur + (len[i] * Rat(scale)) * to_point(dirs[i]);
  }
  if (!(cur == Pt{Rat(0), Rat(0)}))
    throw FanError("realize: edge walk does not close");
  Pt low = *std::min_element(verts.begin(), verts.end(), lex_less);
  for (Pt& v : verts) v = v - low;

  PrimitiveSemitoricPolygon out;
  out.polygon = {verts};
  for (int i = 0; i < d; ++i)
    if (f.labels[i] != CornerLabel::Delzant)
      out.markers.push_back({verts[(i + 1) % d].x, 1, 0});
  sort_markers(out.markers);
  return out;
}

PrimitiveSemitoricPolygon family_polygon(const SemitoricFan& fan,
                                         const PrimitiveSemitoricPolygon& p,
                                         const FanMove& move, const Rat& t) {
  if (t < 0 || t > 1)
    throw PolygonError("family parameter outside [0, 1]");
  apply_move(fan, move);  // enforce the move's preconditions
  const RationalPolygon poly = align_polygon_edges(p.polygon, fan.rays);
  const int d = static_cast<int>(fan.rays.size());
  auto ray = [&](int j) -> const Vec2& { return fan.rays[wrap(j, d)]; };
  auto vert = [&](int j) -> const Pt& { return poly.vertices[wrap(j, d)]; };
  auto offset = [&](int j) -> Rat { return dot(ray(j), vert(j)); };

  switch (move.kind) {
    case MoveKind::Chop:
    case MoveKind::RemoveHidden: {
      const int i = move.index;
      const Vec2 n = move.kind == MoveKind::Chop ? ray(i) + ray(i + 1)
                                                 : kT * ray(i + 1);
      const Pt& corner = vert(i + 1);
      const Rat base = dot(n, corner);
      const Rat tau = min_rat(dot(n, vert(i)), dot(n, vert(i + 2))) - base;
      if (tau <= 0) throw PolygonError("cut family has no room");
      const Rat off = base + t * (tau / 2);
      RationalPolygon cut = clip(poly, {to_point(n), off});
      std::vector<Marker> markers = p.markers;
      if (move.kind == MoveKind::RemoveHidden) {
        // The marker follows the fake corner, where the cut meets edge i+1.
        const int mk = marker_at(markers, corner.x);
        markers[mk].lambda =
            line_intersect(n, off, ray(i + 1), offset(i + 1)).x;
        sort_markers(markers);
      }
      return {cut, markers};
    }
    case MoveKind::Unchop: {
      const int i = move.index;
      std::vector<Rat> offs(d);
      for (int j = 0; j < d; ++j) offs[j] = offset(j);
      const Pt pp = line_intersect(ray(i - 1), offs[wrap(i - 1, d)],
                                   ray(i + 1), offs[wrap(i + 1, d)]);
      const Rat relaxed = dot(ray(i), pp);
      offs[i] = offs[i] + t * (relaxed - offs[i]);
      return {polygon_from_offsets(fan.rays, offs), p.markers};
    }
    case MoveKind::CommuteFakeDelzant: {
      const int i = move.index;
      std::vector<Rat> offs(d);
      for (int j = 0; j < d; ++j) offs[j] = offset(j);
      const Pt pp =
          line_intersect(ray(i), offs[i], ray(i + 2), offs[wrap(i + 2, d)]);
      const Rat relaxed = dot(ray(i + 1), pp);
      const Rat s = 2 * t < 1 ? 2 * t : Rat(1);
      std::vector<Rat> offs2 = offs;
      const int i1 = wrap(i + 1, d);
      offs2[i1] = offs[i1] + s * (relaxed - offs[i1]);
      RationalPolygon mid = polygon_from_offsets(fan.rays, offs2);
      std::vector<Marker> markers = p.markers;
      const int mk = marker_at(markers, vert(i + 1).x);
      if (2 * t <= 1) {
        markers[mk].lambda =
            line_intersect(ray(i), offs[i], ray(i + 1), offs2[i1]).x;
        sort_markers(markers);
        return {mid, markers};
      }
      const Vec2 n = kT * ray(i + 2);
      const Rat base = dot(n, pp);
      const Pt q1 = vert(i);      // far end of edge i, fixed by the relax
      const Pt q2 = vert(i + 3);  // far end of edge i+2
      const Rat tau = min_rat(dot(n, q1), dot(n, q2)) - base;
      if (tau <= 0) throw PolygonError("commute cut has no room");
      const Rat off = base + (2 * t - 1) * (tau / 2);
      RationalPolygon cut = clip(mid, {to_point(n), off});
      markers[mk].lambda =
          line_intersect(n, off, ray(i + 2), offs[wrap(i + 2, d)]).x;
      sort_markers(markers);
      return {cut, markers};
    }
    case MoveKind::ActT:
    case MoveKind::Rotate:
      throw PolygonError("instantaneous move has no one-parameter family");
  }
  throw PolygonError("unknown move");
}

PrimitiveSemitoricPolygon apply_polygon_move(const SemitoricFan& fan,
                                             const PrimitiveSemitoricPolygon& p,
                                             const FanMove& move) {
  const SemitoricFan after = apply_move(fan, move);
  switch (move.kind) {
    case MoveKind::ActT: {
      RationalPolygon q = p.polygon;
      for (Pt& v : q.vertices) v.y -= move.k * v.x;
      std::vector<Marker> markers = p.markers;
      for (Marker& m : markers) m.k -= move.k;
      return {align_polygon_edges(q, after.rays), markers};
    }
    case MoveKind::Rotate:
      return {align_polygon_edges(p.polygon, after.rays), p.markers};
    default: {
      PrimitiveSemitoricPolygon fam = family_polygon(fan, p, move, Rat(1));
      return {align_polygon_edges(fam.polygon, after.rays), fam.markers};
    }
  }
}

PrimitiveSemitoricPolygon interpolate_same_fan(
    const PrimitiveSemitoricPolygon& a, const PrimitiveSemitoricPolygon& b,
    const Rat& t) {
  const SemitoricFan fa = fan_of_polygon(a);
  const SemitoricFan fb = fan_of_polygon(b);
  if (!equal_up_to_rotation(fa, fb))
    throw PolygonError("interpolate: polygons realize different fans");
  const RationalPolygon pa = align_polygon_edges(a.polygon, fa.rays);
  const RationalPolygon pb = align_polygon_edges(b.polygon, fa.rays);
  const int d = static_cast<int>(fa.rays.size());

  // Twisting integers per labeled corner must agree.
  auto corner_k = [&](const PrimitiveSemitoricPolygon& sp,
                      const RationalPolygon& aligned, int corner) -> i64 {
    const Rat x = aligned.vertices[(corner + 1) % d].x;
    return sp.markers[marker_at(sp.markers, x)].k;
  };
  for (int j = 0; j < d; ++j)
    if (fa.labels[j] != CornerLabel::Delzant &&
        corner_k(a, pa, j) != corner_k(b, pb, j))
      throw PolygonError("interpolate: twisting integers differ");

  std::vector<Rat> offs(d);
  for (int j = 0; j < d; ++j) {
    const Rat ca = dot(fa.rays[j], pa.vertices[j]);
    const Rat cb = dot(fa.rays[j], pb.vertices[j]);
    offs[j] = (1 - t) * ca + t * cb;
  }
  RationalPolygon mid = polygon_from_offsets(fa.rays, offs);
  const RationalPolygon aligned = align_polygon_edges(mid, fa.rays);
  PrimitiveSemitoricPolygon out;
  out.polygon = aligned;
  for (int j = 0; j < d; ++j)
    if (fa.labels[j] != CornerLabel::Delzant)
      out.markers.push_back(
          {aligned.vertices[(j + 1) % d].x, 1, corner_k(a, pa, j)});
  sort_markers(out.markers);
  return out;
}

RationalPolygon unfold(const PrimitiveSemitoricPolygon& p,
                       const std::vector<int>& u) {
  if (u.size() != p.markers.size())
    throw PolygonError("unfold: bit count != marker count");
  RationalPolygon q = p.polygon;
  for (std::size_t j = 0; j < u.size(); ++j)
    if (u[j])
      q = vertical_shear(q, p.markers[j].lambda, Rat(p.markers[j].eps));
  return q;
}

PrimitiveSemitoricPolygon align_twisting(const PrimitiveSemitoricPolygon& p) {
  if (p.markers.empty() || p.markers[0].k == 0) return p;
  const i64 k0 = p.markers[0].k;
  PrimitiveSemitoricPolygon out = p;
  for (Pt& v : out.polygon.vertices) v.y -= k0 * v.x;
  for (Marker& m : out.markers) m.k -= k0;
  return out;
}

double family_distance(const PrimitiveSemitoricPolygon& a,
                       const PrimitiveSemitoricPolygon& b, Density density) {
  if (a.markers.size() != b.markers.size())
    throw PolygonError("distance needs equal marker counts, got " +
                       std::to_string(a.markers.size()) + " and " +
                       std::to_string(b.markers.size()));
  const PrimitiveSemitoricPolygon A = align_twisting(a);
  const PrimitiveSemitoricPolygon B = align_twisting(b);
  const std::size_t m = A.markers.size();
  for (std::size_t j = 0; j < m; ++j)
    if (A.markers[j].k != B.markers[j].k)
      throw PolygonError("twisting index mismatch at marker " +
                         std::to_string(j));
  double total = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::vector<int> u(m, 0);
    for (std::size_t j = 0; j < m; ++j) u[j] = (mask >> j) & 1;
    total +=
        symmetric_difference_measure(unfold(A, u), unfold(B, u), density);
  }
  return total;
}

}  // namespace semitoric
