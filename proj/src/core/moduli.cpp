#include "core/moduli.hpp"

#include <algorithm>
#include <cmath>

namespace semitoric {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double wrap_angle(double a) {
  double v = std::fmod(a, kTwoPi);
  if (v < 0) v += kTwoPi;
  return v;
}

}  // namespace

TruncatedSeries::TruncatedSeries(int n) : degree(n) {
  if (n < 1) throw ModuliError("series degree must be >= 1");
  coeff.resize(n + 1);
  for (int i = 0; i <= n; ++i) coeff[i].assign(n + 1 - i, 0.0);
}

ValidationReport validate_series(const TruncatedSeries& s) {
  if (s.degree < 1) return {false, "degree < 1"};
  if (static_cast<int>(s.coeff.size()) != s.degree + 1)
    return {false, "coefficient rows != degree + 1"};
  for (int i = 0; i <= s.degree; ++i)
    if (static_cast<int>(s.coeff[i].size()) != s.degree + 1 - i)
      return {false, "row " + std::to_string(i) + " has wrong length"};
  if (s.at(0, 0) != 0) return {false, "sigma_00 != 0"};
  if (!(s.at(0, 1) >= 0 && s.at(0, 1) < kTwoPi))
    return {false, "sigma_01 outside [0, 2pi)"};
  return {true, ""};
}

double CapSequence::b(int n) const { return b0 * std::pow(ratio, n); }

double CapSequence::tail_bound(int degree) const {
  const double r = ratio;
  const int n = degree;
  return b0 * std::pow(r, n + 1) * ((n + 2) * (1 - r) + r) /
         ((1 - r) * (1 - r));
}

double series_distance(const TruncatedSeries& s, const TruncatedSeries& t,
                       const CapSequence& caps) {
  if (s.degree != t.degree)
    throw ModuliError("series degrees differ: " + std::to_string(s.degree) +
                      " vs " + std::to_string(t.degree));
  double total = 0;
  for (int i = 0; i <= s.degree; ++i)
    for (int j = 0; j + i <= s.degree; ++j) {
      if (i == 0 && j == 1) continue;
      total += std::min(std::fabs(s.at(i, j) - t.at(i, j)), caps.b(i + j));
    }
  const double d01 = std::fabs(s.at(0, 1) - t.at(0, 1));
  total += std::min({d01, kTwoPi - d01, caps.b(1)});
  return total;
}

Rat vertical_slice_length(const RationalPolygon& p, const Rat& x) {
  const int n = static_cast<int>(p.vertices.size());
  bool any = false;
  Rat lo, hi;
  auto consider = [&](const Rat& y) {
    if (!any) {
      lo = hi = y;
      any = true;
    } else if (y < lo) {
      lo = y;
    } else if (y > hi) {
      hi = y;
    }
  };
  for (int i = 0; i < n; ++i) {
    const Pt& a = p.vertices[i];
    const Pt& b = p.vertices[(i + 1) % n];
    if (a.x == b.x) {
      if (a.x == x) {
        consider(a.y);
        consider(b.y);
      }
      continue;
    }
    if ((a.x <= x && x <= b.x) || (b.x <= x && x <= a.x)) {
      const Rat t = (x - a.x) / (b.x - a.x);
      consider(a.y + t * (b.y - a.y));
    }
  }
  if (!any) return Rat(0);
  return hi - lo;
}

ValidationReport validate_ingredients(const IngredientList& m) {
  const std::size_t mf = m.polygon.markers.size();
  if (m.h.size() != mf)
    return {false, "h count " + std::to_string(m.h.size()) +
                       " != marker count " + std::to_string(mf)};
  if (m.series.size() != mf)
    return {false, "series count " + std::to_string(m.series.size()) +
                       " != marker count " + std::to_string(mf)};
  {
    ValidationReport r = validate_semitoric_polygon(m.polygon);
    if (!r.valid) return r;
  }
  for (std::size_t j = 0; j < mf; ++j) {
    ValidationReport r = validate_series(m.series[j]);
    if (!r.valid)
      return {false, "series " + std::to_string(j) + ": " + r.reason};
    const double len =
        to_double(vertical_slice_length(m.polygon.polygon,
                                        m.polygon.markers[j].lambda));
    if (!(m.h[j] > 0 && m.h[j] < len))
      return {false, "h_" + std::to_string(j) + " = " +
                         std::to_string(m.h[j]) +
                         " outside (0, " + std::to_string(len) + ")"};
  }
  return {true, ""};
}

double h_interpolate(double h, double len, double hp, double lenp,
                     double len_t, double t) {
  if (!(h > 0 && h < len)) throw ModuliError("h outside (0, len)");
  if (!(hp > 0 && hp < lenp)) throw ModuliError("h' outside (0, len')");
  if (!(len_t > 0)) throw ModuliError("len_t <= 0");
  if (!(t >= 0 && t <= 1)) throw ModuliError("t outside [0, 1]");
  if (t == 0) return h;
  if (t == 1) return hp;
  return ((1 - t) * h / len + t * hp / lenp) * len_t;
}

double ingredient_distance(const IngredientList& a, const IngredientList& b,
                           Density density, const CapSequence& caps) {
  if (a.mf() != b.mf() || a.h.size() != b.h.size() ||
      a.series.size() != b.series.size())
    throw ModuliError("component mismatch: m_f " + std::to_string(a.mf()) +
                      " vs " + std::to_string(b.mf()));
  double total = family_distance(a.polygon, b.polygon, density);
  for (std::size_t j = 0; j < a.h.size(); ++j) {
    total += series_distance(a.series[j], b.series[j], caps);
    total += std::fabs(a.h[j] - b.h[j]);
  }
  return total;
}

namespace {

struct EmitSeg {
  enum Kind { Jump, Sweep, Blend, Hold } kind = Jump;
  PrimitiveSemitoricPolygon to;    // far-end checkpoint for every kind
  SemitoricFan fan;                // Sweep: fan the move applies to
  PrimitiveSemitoricPolygon base;  // Sweep: polygon before the move; Blend: from
  FanMove move{};
  bool reverse = false;
};

struct SideWalk {
  std::vector<EmitSeg> segs;  // forward order, input -> standard realization
  std::vector<PrimitiveSemitoricPolygon> pre;  // state before each segment
  PrimitiveSemitoricPolygon end;
};

// Polygon at local parameter t in [0, 1] along a continuous segment, in
// path order: t = 0 is the state the path enters with, t = 1 is seg.to.
PrimitiveSemitoricPolygon seg_polygon(const EmitSeg& s, const Rat& t) {
  switch (s.kind) {
    case EmitSeg::Sweep: {
      const Rat u = s.reverse ? Rat(1) - t : t;
      return family_polygon(s.fan, s.base, s.move, u);
    }
    case EmitSeg::Blend:
      return interpolate_same_fan(s.base, s.to, t);
    default:
      return s.to;
  }
}

// Cumulative metric length of the polygon part of a segment on a coarse
// subdivision: profile[j] is the length up to t = j/K. Used only to place
// samples; ExpAbsX keeps it finite for any polygon.
constexpr int kProfileSteps = 32;

std::vector<double> seg_profile(const EmitSeg& s) {
  if (s.kind != EmitSeg::Sweep && s.kind != EmitSeg::Blend) return {};
  std::vector<double> cum(kProfileSteps + 1, 0.0);
  PrimitiveSemitoricPolygon prev = seg_polygon(s, Rat(0));
  for (int j = 1; j <= kProfileSteps; ++j) {
    PrimitiveSemitoricPolygon nxt = seg_polygon(s, Rat(j, kProfileSteps));
    cum[j] = cum[j - 1] + family_distance(prev, nxt, Density::ExpAbsX);
    prev = std::move(nxt);
  }
  return cum;
}

// Parameter t at which the profile reaches the given fraction of its total,
// so samples spaced evenly in the fraction come out evenly spaced in the
// metric.
Rat param_at(const std::vector<double>& cum, int k, int n) {
  if (cum.empty() || !(cum.back() > 0)) return Rat(k, n);
  const int K = static_cast<int>(cum.size()) - 1;
  const double target = cum.back() * k / n;
  int j = 0;
  while (j + 1 < K && cum[j + 1] < target) ++j;
  const double lo = cum[j], hi = cum[j + 1];
  const double within = hi > lo ? (target - lo) / (hi - lo) : 0.0;
  const double td = (j + within) / K;
  const long long denom = 4096;
  long long num = std::llround(td * denom);
  if (num < 0) num = 0;
  if (num > denom) num = denom;
  return Rat(num, denom);
}

SideWalk walk_to_standard(const PrimitiveSemitoricPolygon& input) {
  SideWalk w;
  PrimitiveSemitoricPolygon cur = input;
  {
    PrimitiveSemitoricPolygon aligned = align_twisting(cur);
    if (!(aligned == cur)) {
      w.pre.push_back(cur);
      w.segs.push_back({EmitSeg::Jump, aligned, {}, {}, {}, false});
      cur = aligned;
    }
  }
  SemitoricFan fan = fan_of_polygon(cur);
  const NormalizeResult nr = normalize(fan);
  for (const FanMove& mv : nr.trace) {
    PrimitiveSemitoricPolygon nxt = apply_polygon_move(fan, cur, mv);
    w.pre.push_back(cur);
    if (mv.kind == MoveKind::ActT || mv.kind == MoveKind::Rotate)
      w.segs.push_back({EmitSeg::Jump, nxt, {}, {}, {}, false});
    else
      w.segs.push_back({EmitSeg::Sweep, nxt, fan, cur, mv, false});
    cur = nxt;
    fan = apply_move(fan, mv);
  }
  if (!(fan == nr.fan))
    throw ModuliError("path: trace replay missed the standard fan");
  w.end = cur;
  return w;
}

// Chops, one lap of fake-corner commutes, and a closing rotation take
// T^n std_c to T^{n-1} std_c. Commuting only runs one way, so only positive
// T powers can be walked down; descend_gauge picks its side accordingly.
std::vector<FanMove> unit_bridge_moves(int c) {
  std::vector<FanMove> mv;
  mv.push_back({MoveKind::Chop, 0, 0});
  mv.push_back({MoveKind::Chop, 3, 0});
  mv.push_back({MoveKind::Unchop, 3, 0});
  for (int i = c + 4; i >= 5; --i)
    mv.push_back({MoveKind::CommuteFakeDelzant, i, 0});
  mv.push_back({MoveKind::Unchop, 5, 0});
  mv.push_back({MoveKind::Rotate, 1, 0});
  return mv;
}

// Extends a walk that ends on the standard fan: one zero-distance jump
// lowers every twisting label by n >= 1 (shear and labels move together, so
// the aligned polygon is unchanged), leaving the fan at T^n std_c; n bridge
// laps then sweep the fan back down with the labels held constant.
void descend_gauge(SideWalk& w, i64 n) {
  PrimitiveSemitoricPolygon cur = w.end;
  const int c = static_cast<int>(cur.markers.size());
  const SemitoricFan home = standard_fan(c);
  SemitoricFan fan = home;
  {
    const FanMove mv{MoveKind::ActT, 0, n};
    PrimitiveSemitoricPolygon nxt = apply_polygon_move(fan, cur, mv);
    w.pre.push_back(cur);
    w.segs.push_back({EmitSeg::Jump, nxt, {}, {}, {}, false});
    cur = nxt;
    fan = apply_move(fan, mv);
  }
  const std::vector<FanMove> bridge = unit_bridge_moves(c);
  for (i64 j = 0; j < n; ++j) {
    for (const FanMove& mv : bridge) {
      PrimitiveSemitoricPolygon nxt = apply_polygon_move(fan, cur, mv);
      w.pre.push_back(cur);
      if (mv.kind == MoveKind::Rotate)
        w.segs.push_back({EmitSeg::Jump, nxt, {}, {}, {}, false});
      else
        w.segs.push_back({EmitSeg::Sweep, nxt, fan, cur, mv, false});
      cur = nxt;
      fan = apply_move(fan, mv);
    }
  }
  if (!(fan == home))
    throw ModuliError("path: gauge bridge missed the standard fan");
  w.end = cur;
}

}  // namespace

std::vector<IngredientList> connectivity_path(const IngredientList& a,
                                              const IngredientList& b,
                                              int steps) {
  {
    ValidationReport r = validate_ingredients(a);
    if (!r.valid) throw ModuliError("path start invalid: " + r.reason);
    r = validate_ingredients(b);
    if (!r.valid) throw ModuliError("path end invalid: " + r.reason);
  }
  const int mf = a.mf();
  if (mf != b.mf())
    throw ModuliError("m_f mismatch: " + std::to_string(mf) + " vs " +
                      std::to_string(b.mf()));
  {
    const PrimitiveSemitoricPolygon ta = align_twisting(a.polygon);
    const PrimitiveSemitoricPolygon tb = align_twisting(b.polygon);
    for (int j = 0; j < mf; ++j)
      if (ta.markers[j].k != tb.markers[j].k)
        throw ModuliError("twisting index mismatch at marker " +
                          std::to_string(j));
  }
  for (int j = 0; j < mf; ++j)
    if (a.series[j].degree != b.series[j].degree)
      throw ModuliError("series degree mismatch at marker " +
                        std::to_string(j));
  const int N = steps;
  if (N < 1) throw ModuliError("steps must be >= 1");

  SideWalk wa = walk_to_standard(a.polygon);
  SideWalk wb = walk_to_standard(b.polygon);

  if (mf > 0) {
    const i64 delta = wa.end.markers[0].k - wb.end.markers[0].k;
    for (int j = 0; j < mf; ++j)
      if (wb.end.markers[j].k + delta != wa.end.markers[j].k)
        throw ModuliError("twisting classes diverged along the traces");
    if (delta > 0)
      descend_gauge(wa, delta);
    else if (delta < 0)
      descend_gauge(wb, -delta);
  }

  std::vector<EmitSeg> segs = wa.segs;
  const PrimitiveSemitoricPolygon& Q = wa.end;
  const PrimitiveSemitoricPolygon& Z = wb.end;
  if (!(Q == Z)) segs.push_back({EmitSeg::Blend, Z, {}, Q, {}, false});
  for (int i = static_cast<int>(wb.segs.size()) - 1; i >= 0; --i) {
    EmitSeg s = wb.segs[i];
    s.to = wb.pre[i];
    s.reverse = true;  // Sweep: run the family from t=1 back to t=0
    segs.push_back(s);
  }

  int jumps = 0, cont = 0;
  for (const EmitSeg& s : segs)
    (s.kind == EmitSeg::Jump ? jumps : cont) += 1;
  int leftover = N - jumps;
  if (leftover < cont)
    throw ModuliError("steps = " + std::to_string(N) +
                      " too small for a path with " + std::to_string(jumps) +
                      " jumps and " + std::to_string(cont) + " sweeps");
  std::vector<int> alloc(segs.size(), 1);
  std::vector<std::vector<double>> profile(segs.size());
  if (cont > 0) {
    // One sample per segment pins its checkpoint; the rest go where the
    // polygon actually moves, so consecutive samples stay evenly spaced in
    // the metric.
    std::vector<double> weight(segs.size(), 0);
    double wsum = 0;
    for (std::size_t i = 0; i < segs.size(); ++i)
      if (segs[i].kind != EmitSeg::Jump) {
        profile[i] = seg_profile(segs[i]);
        wsum += weight[i] = profile[i].empty() ? 0 : profile[i].back();
      }
    int rem = leftover - cont;
    if (wsum > 0) {
      std::vector<std::pair<double, std::size_t>> frac;
      int given = 0;
      for (std::size_t i = 0; i < segs.size(); ++i)
        if (segs[i].kind != EmitSeg::Jump) {
          const double share = rem * weight[i] / wsum;
          const int whole = static_cast<int>(share);
          alloc[i] += whole;
          given += whole;
          frac.emplace_back(share - whole, i);
        }
      std::sort(frac.begin(), frac.end(),
                [](const auto& x, const auto& y) { return x.first > y.first; });
      for (std::size_t j = 0; given < rem; ++j, ++given) alloc[frac[j].second] += 1;
    } else {
      const int base = rem / cont, extra = rem % cont;
      int seen = 0;
      for (std::size_t i = 0; i < segs.size(); ++i)
        if (segs[i].kind != EmitSeg::Jump) {
          alloc[i] += base + (seen < extra ? 1 : 0);
          ++seen;
        }
    }
  } else if (leftover > 0) {
    segs.push_back({EmitSeg::Hold,
                    segs.empty() ? a.polygon : segs.back().to,
                    {}, {}, {}, false});
    alloc.push_back(leftover);
  }

  // Slice lengths at the endpoint markers, for the h interpolation.
  std::vector<double> len_a(mf), len_b(mf);
  for (int j = 0; j < mf; ++j) {
    len_a[j] = to_double(
        vertical_slice_length(a.polygon.polygon, a.polygon.markers[j].lambda));
    len_b[j] = to_double(
        vertical_slice_length(b.polygon.polygon, b.polygon.markers[j].lambda));
  }

  std::vector<IngredientList> out;
  out.reserve(N + 1);
  out.push_back(a);
  auto emit = [&](const PrimitiveSemitoricPolygon& poly) {
    const int idx = static_cast<int>(out.size());
    IngredientList m;
    if (idx == N) {
      m = b;
    } else {
      const double s = static_cast<double>(idx) / N;
      m.polygon = poly;
      m.h.resize(mf);
      m.series.assign(mf, TruncatedSeries(mf > 0 ? a.series[0].degree : 6));
      for (int j = 0; j < mf; ++j) {
        const double len_t = to_double(vertical_slice_length(
            poly.polygon, poly.markers[j].lambda));
        m.h[j] = h_interpolate(a.h[j], len_a[j], b.h[j], len_b[j], len_t, s);
        TruncatedSeries& ts = m.series[j];
        ts = TruncatedSeries(a.series[j].degree);
        for (int p = 0; p <= ts.degree; ++p)
          for (int q = 0; q + p <= ts.degree; ++q)
            ts.at(p, q) =
                (1 - s) * a.series[j].at(p, q) + s * b.series[j].at(p, q);
        double d01 = b.series[j].at(0, 1) - a.series[j].at(0, 1);
        if (d01 > kTwoPi / 2) d01 -= kTwoPi;
        if (d01 < -kTwoPi / 2) d01 += kTwoPi;
        ts.at(0, 1) = wrap_angle(a.series[j].at(0, 1) + s * d01);
        ts.at(0, 0) = 0;
      }
    }
    ValidationReport r = validate_ingredients(m);
    if (!r.valid)
      throw ModuliError("path sample " + std::to_string(idx) +
                        " invalid: " + r.reason);
    out.push_back(std::move(m));
  };

  for (std::size_t i = 0; i < segs.size(); ++i) {
    const EmitSeg& s = segs[i];
    const int n = alloc[i];
    switch (s.kind) {
      case EmitSeg::Jump:
        emit(s.to);
        break;
      case EmitSeg::Hold:
        for (int k = 0; k < n; ++k) emit(s.to);
        break;
      case EmitSeg::Sweep:
      case EmitSeg::Blend:
        for (int k = 1; k <= n; ++k)
          emit(k == n ? s.to : seg_polygon(s, param_at(profile[i], k, n)));
        break;
    }
  }
  if (static_cast<int>(out.size()) != N + 1)
    throw ModuliError("path sample budget error");
  return out;
}

}  // namespace semitoric
