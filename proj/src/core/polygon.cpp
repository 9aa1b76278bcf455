#include "core/polygon.hpp"

#include <algorithm>
#include <cmath>

namespace semitoric {

namespace {

Rat corner_cross(const Pt& a, const Pt& b, const Pt& c) {
  return cross(b - a, c - b);
}

}  // namespace

ValidationReport validate_polygon(const RationalPolygon& p) {
  const int n = static_cast<int>(p.vertices.size());
  if (n < 3) return {false, "n = " + std::to_string(n) + " < 3"};
  for (int i = 0; i < n; ++i) {
    const Pt& a = p.vertices[i];
    const Pt& b = p.vertices[(i + 1) % n];
    const Pt& c = p.vertices[(i + 2) % n];
    if (corner_cross(a, b, c) <= 0)
      return {false, "vertex " + std::to_string((i + 1) % n) +
                         " not a strictly convex ccw turn"};
  }
  return {true, ""};
}

RationalPolygon canonical_start(const RationalPolygon& p) {
  if (p.vertices.size() < 2) return p;
  RationalPolygon q = p;
  auto it = std::min_element(q.vertices.begin(), q.vertices.end(), lex_less);
  std::rotate(q.vertices.begin(), it, q.vertices.end());
  return q;
}

RationalPolygon tidy(const RationalPolygon& p) {
  std::vector<Pt> v = p.vertices;
  // Dropping a vertex can make its neighbor collinear, so iterate.
  for (bool again = true; again;) {
    again = false;
    const int n = static_cast<int>(v.size());
    if (n < 3) return {};
    std::vector<Pt> keep;
    keep.reserve(v.size());
    for (int i = 0; i < n; ++i) {
      const Pt& a = v[(i + n - 1) % n];
      const Pt& b = v[i];
      const Pt& c = v[(i + 1) % n];
      // A duplicate pair makes the cross test degenerate at the second
      // copy; keep it and let the next sweep see its real predecessor.
      if (b == c || (!(a == b) && corner_cross(a, b, c) == 0)) {
        again = true;
        continue;
      }
      keep.push_back(b);
    }
    v = std::move(keep);
  }
  return {v};
}

Rat polygon_area(const RationalPolygon& p) {
  Rat twice(0);
  const int n = static_cast<int>(p.vertices.size());
  for (int i = 0; i < n; ++i)
    twice += cross(p.vertices[i], p.vertices[(i + 1) % n]);
  return twice / 2;
}

RationalPolygon clip(const RationalPolygon& p, const HalfPlane& h) {
  const int n = static_cast<int>(p.vertices.size());
  if (n < 3) return {};
  auto side = [&](const Pt& pt) -> Rat {
    return h.normal.x * pt.x + h.normal.y * pt.y - h.offset;
  };
  std::vector<Pt> out;
  for (int i = 0; i < n; ++i) {
    const Pt& a = p.vertices[i];
    const Pt& b = p.vertices[(i + 1) % n];
    const Rat va = side(a), vb = side(b);
    if (va >= 0) out.push_back(a);
    if ((va > 0 && vb < 0) || (va < 0 && vb > 0)) {
      const Rat t = va / (va - vb);
      out.push_back(a + t * (b - a));
    }
  }
  return tidy({out});
}

RationalPolygon intersect(const RationalPolygon& p, const RationalPolygon& q) {
  RationalPolygon r = p;
  const int n = static_cast<int>(q.vertices.size());
  if (n < 3) return {};
  for (int i = 0; i < n && !r.empty(); ++i) {
    const Pt& a = q.vertices[i];
    const Pt& b = q.vertices[(i + 1) % n];
    const Pt e = b - a;
    const Pt normal{-e.y, e.x};  // interior of a ccw polygon is left of e
    r = clip(r, {normal, normal.x * a.x + normal.y * a.y});
  }
  return r;
}

namespace {

// Integral of (alpha x + beta) e^{-|x|} over [a, b] where a, b do not
// straddle 0; antiderivatives -(alpha x + beta + alpha) e^{-x} on x >= 0
// and (alpha x + beta - alpha) e^{x} on x <= 0.
double strip_integral(double alpha, double beta, double a, double b) {
  if (a >= 0) {
    auto F = [&](double x) { return -(alpha * x + beta + alpha) * std::exp(-x); };
    return F(b) - F(a);
  }
  auto F = [&](double x) { return (alpha * x + beta - alpha) * std::exp(x); };
  return F(b) - F(a);
}

double measure_exp_abs_x(const RationalPolygon& p) {
  const int n = static_cast<int>(p.vertices.size());
  std::vector<Rat> xs;
  xs.reserve(n + 1);
  for (const Pt& v : p.vertices) xs.push_back(v.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  if (xs.front() < 0 && 0 < xs.back()) {
    xs.push_back(Rat(0));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  }
  double total = 0;
  for (std::size_t s = 0; s + 1 < xs.size(); ++s) {
    const Rat a = xs[s], b = xs[s + 1];
    const Rat mid = (a + b) / 2;
    // Exactly one edge of a convex polygon spans this strip on top and one
    // on the bottom; vertical edges live on strip borders.
    bool have_top = false, have_bot = false;
    Rat top_slope, top_icpt, bot_slope, bot_icpt, top_mid, bot_mid;
    for (int i = 0; i < n; ++i) {
      const Pt& u = p.vertices[i];
      const Pt& v = p.vertices[(i + 1) % n];
      if (u.x == v.x) continue;
      const Rat& lo = u.x < v.x ? u.x : v.x;
      const Rat& hi = u.x < v.x ? v.x : u.x;
      if (!(lo <= a && b <= hi)) continue;
      const Rat slope = (v.y - u.y) / (v.x - u.x);
      const Rat icpt = u.y - slope * u.x;
      const Rat ymid = slope * mid + icpt;
      if (!have_top || ymid > top_mid) {
        if (have_top && !have_bot) {
          bot_slope = top_slope, bot_icpt = top_icpt, bot_mid = top_mid;
          have_bot = true;
        }
        top_slope = slope, top_icpt = icpt, top_mid = ymid;
        have_top = true;
      } else if (!have_bot || ymid < bot_mid) {
        bot_slope = slope, bot_icpt = icpt, bot_mid = ymid;
        have_bot = true;
      }
    }
    if (!have_top || !have_bot)
      throw PolygonError("measure: strip without two spanning edges");
    total += strip_integral(to_double(top_slope - bot_slope),
                            to_double(top_icpt - bot_icpt), to_double(a),
                            to_double(b));
  }
  return total;
}

}  // namespace

double polygon_measure(const RationalPolygon& p, Density density) {
  if (p.vertices.size() < 3) return 0.0;
  switch (density) {
    case Density::Lebesgue: return to_double(polygon_area(p));
    case Density::ExpAbsX: return measure_exp_abs_x(p);
  }
  return 0.0;
}

double symmetric_difference_measure(const RationalPolygon& p,
                                    const RationalPolygon& q,
                                    Density density) {
  return polygon_measure(p, density) + polygon_measure(q, density) -
         2.0 * polygon_measure(intersect(p, q), density);
}

RationalPolygon vertical_shear(const RationalPolygon& p, const Rat& lambda,
                               const Rat& k) {
  {
    ValidationReport r = validate_polygon(p);
    if (!r.valid) throw PolygonError("shear: invalid input: " + r.reason);
  }
  if (k == 0) return p;
  const int n = static_cast<int>(p.vertices.size());
  std::vector<Pt> pts;
  pts.reserve(n + 2);
  for (int i = 0; i < n; ++i) {
    const Pt& a = p.vertices[i];
    const Pt& b = p.vertices[(i + 1) % n];
    pts.push_back(a);
    if ((a.x < lambda && lambda < b.x) || (b.x < lambda && lambda < a.x)) {
      const Rat t = (lambda - a.x) / (b.x - a.x);
      pts.push_back(a + t * (b - a));
    }
  }
  for (Pt& v : pts)
    if (v.x >= lambda) v.y += k * (v.x - lambda);
  RationalPolygon out = tidy({pts});
  ValidationReport r = validate_polygon(out);
  if (!r.valid)
    throw PolygonError("shear by " + rat_to_string(k) + " at x = " +
                       rat_to_string(lambda) + " breaks convexity: " +
                       r.reason);
  return out;
}

RationalPolygon translate(const RationalPolygon& p, const Pt& by) {
  RationalPolygon q = p;
  for (Pt& v : q.vertices) v = v + by;
  return q;
}

}  // namespace semitoric
