#include "core/toric.hpp"

#include <algorithm>
#include <cmath>

namespace semitoric {

namespace {

int wrap(int i, int d) { return ((i % d) + d) % d; }

}  // namespace

FanWord fan_to_word(const ToricFan& f) {
  const int d = static_cast<int>(f.rays.size());
  if (d < 3) throw FanError("fan_to_word: need at least 3 rays");
  FanWord a(d);
  for (int i = 0; i < d; ++i)
    a[i] = det2(f.rays[i], f.rays[wrap(i + 2, d)]);
  return a;
}

ToricFan word_to_fan(const FanWord& a, Vec2 v0, Vec2 v1) {
  const int d = static_cast<int>(a.size());
  if (d < 1) throw FanError("word_to_fan: empty word");
  if (det2(v0, v1) != 1) throw FanError("word_to_fan: seed det != 1");
  ToricFan f;
  f.rays.reserve(d);
  f.rays.push_back(v0);
  if (d >= 2) f.rays.push_back(v1);
  for (int i = 0; i + 2 < d; ++i)
    f.rays.push_back(-f.rays[i] + a[i] * f.rays[i + 1]);
  return f;
}

ValidationReport validate_toric(const ToricFan& f) {
  const int d = static_cast<int>(f.rays.size());
  if (d < 3)
    return {false, "d = " + std::to_string(d) + " < 3"};
  for (int i = 0; i < d; ++i) {
    i64 det = det2(f.rays[i], f.rays[wrap(i + 1, d)]);
    if (det != 1)
      return {false, "det(v" + std::to_string(i) + ",v" +
                         std::to_string(wrap(i + 1, d)) + ") = " +
                         std::to_string(det)};
  }
  // Unit determinants close the matrix product; only the turning can fail.
  LiftedElement lift = lift_word(st_word(fan_to_word(f)));
  if (lift.weight != 12)
    return {false, "winding = " + std::to_string(lift.weight / 12)};
  return {true, ""};
}

i64 geometric_winding(const std::vector<Vec2>& rays) {
  const int d = static_cast<int>(rays.size());
  i64 w = 0;
  for (int i = 0; i < d; ++i) {
    const Vec2& p = rays[i];
    const Vec2& q = rays[wrap(i + 1, d)];
    if (det2(p, q) <= 0)
      throw FanError("geometric_winding: det(v" + std::to_string(i) + ",v" +
                     std::to_string(wrap(i + 1, d)) + ") <= 0");
    if (p.y <= 0 && q.y > 0) ++w;  // upward crossing, necessarily at x > 0
  }
  return w;
}

i64 float_winding(const std::vector<Vec2>& rays) {
  const int d = static_cast<int>(rays.size());
  double total = 0.0;
  for (int i = 0; i < d; ++i) {
    const Vec2& p = rays[i];
    const Vec2& q = rays[wrap(i + 1, d)];
    double cross = static_cast<double>(p.x) * q.y - static_cast<double>(p.y) * q.x;
    double dot = static_cast<double>(p.x) * q.x + static_cast<double>(p.y) * q.y;
    total += std::atan2(cross, dot);
  }
  return std::llround(total / (2.0 * M_PI));
}

ToricFan corner_chop(const ToricFan& f, int i) {
  const int d = static_cast<int>(f.rays.size());
  if (i < 0 || i >= d) throw FanError("corner_chop: index out of range");
  ToricFan g = f;
  g.rays.insert(g.rays.begin() + i + 1, f.rays[i] + f.rays[wrap(i + 1, d)]);
  return g;
}

ToricFan reverse_corner_chop(const ToricFan& f, int i) {
  const int d = static_cast<int>(f.rays.size());
  if (i < 0 || i >= d) throw FanError("reverse_corner_chop: index out of range");
  if (d <= 3) throw FanError("reverse_corner_chop: would drop below 3 rays");
  if (!(f.rays[i] == f.rays[wrap(i - 1, d)] + f.rays[wrap(i + 1, d)]))
    throw FanError("reverse_corner_chop: v" + std::to_string(i) +
                   " is not the sum of its neighbours");
  ToricFan g = f;
  g.rays.erase(g.rays.begin() + i);
  return g;
}

std::optional<int> find_reducible(const ToricFan& f) {
  const int d = static_cast<int>(f.rays.size());
  for (int i = 0; i < d; ++i)
    if (f.rays[i] == f.rays[wrap(i - 1, d)] + f.rays[wrap(i + 1, d)]) return i;
  return std::nullopt;
}

std::string to_string(const MinimalModel& m) {
  switch (m.kind) {
    case ModelKind::Triangle: return "triangle";
    case ModelKind::Rectangle: return "rectangle";
    default: return "hirzebruch(" + std::to_string(m.k) + ")";
  }
}

std::optional<MinimalModel> classify_minimal(const ToricFan& f) {
  const int d = static_cast<int>(f.rays.size());
  if (d == 3) return MinimalModel{ModelKind::Triangle, 0};
  if (d != 4) return std::nullopt;
  FanWord a = fan_to_word(f);
  // Look for a rotation matching (0, k, 0, -k).
  for (int r = 0; r < 4; ++r) {
    if (a[r] != 0 || a[wrap(r + 2, 4)] != 0) continue;
    i64 k = a[wrap(r + 1, 4)];
    if (a[wrap(r + 3, 4)] != -k) continue;
    if (k == 0) return MinimalModel{ModelKind::Rectangle, 0};
    return MinimalModel{ModelKind::Hirzebruch, std::abs(k)};
  }
  return std::nullopt;
}

ToricFan model_fan(const MinimalModel& m) {
  switch (m.kind) {
    case ModelKind::Triangle:
      return ToricFan{{{1, 0}, {0, 1}, {-1, -1}}};
    case ModelKind::Rectangle:
      return ToricFan{{{0, 1}, {-1, 0}, {0, -1}, {1, 0}}};
    default:
      return ToricFan{{{0, 1}, {-1, -m.k}, {0, -1}, {1, 0}}};
  }
}

ReduceResult fulton_reduce(const ToricFan& f) {
  ValidationReport r = validate_toric(f);
  if (!r.valid) throw FanError("fulton_reduce: invalid fan: " + r.reason);
  ReduceResult out;
  ToricFan cur = f;
  while (cur.rays.size() > 4) {
    auto i = find_reducible(cur);
    if (!i)
      throw FanError("fulton_reduce: no reducible ray at d = " +
                     std::to_string(cur.rays.size()));
    cur = reverse_corner_chop(cur, *i);
    out.trace.push_back(*i);
    r = validate_toric(cur);
    if (!r.valid)
      throw FanError("fulton_reduce: intermediate fan invalid: " + r.reason);
  }
  auto model = classify_minimal(cur);
  if (!model)
    throw FanError("fulton_reduce: stopped at an unclassifiable fan");
  out.model = *model;
  out.reduced = cur;
  return out;
}

ToricFan replay_reduce_trace(const ToricFan& reduced,
                             const std::vector<int>& trace) {
  ToricFan cur = reduced;
  for (auto it = trace.rbegin(); it != trace.rend(); ++it) {
    int i = *it;
    const int d = static_cast<int>(cur.rays.size());
    // Undoing "remove ray i" means chopping the corner (i-1, i); removal at
    // index 0 is undone at the wrap corner, which reinserts the ray at the
    // back, so rotate it home to keep the replay exact.
    cur = corner_chop(cur, i == 0 ? d - 1 : i - 1);
    if (i == 0)
      std::rotate(cur.rays.begin(), cur.rays.end() - 1, cur.rays.end());
  }
  return cur;
}

std::vector<Vec2> canonical_cycle(const ToricFan& f) {
  const int d = static_cast<int>(f.rays.size());
  std::vector<Vec2> best;
  for (int r = 0; r < d; ++r) {
    Mat2 frame{f.rays[r].x, f.rays[wrap(r + 1, d)].x,
               f.rays[r].y, f.rays[wrap(r + 1, d)].y};
    if (frame.det() != 1) continue;  // non-unimodular corners can't be a seed
    Mat2 inv = frame.inverse_unimodular();
    std::vector<Vec2> cand(d);
    for (int j = 0; j < d; ++j) cand[j] = inv * f.rays[wrap(r + j, d)];
    auto lt = [](const Vec2& u, const Vec2& v) {
      return u.x != v.x ? u.x < v.x : u.y < v.y;
    };
    if (best.empty() ||
        std::lexicographical_compare(cand.begin(), cand.end(), best.begin(),
                                     best.end(), lt))
      best = std::move(cand);
  }
  if (best.empty()) throw FanError("canonical_cycle: no unimodular corner");
  return best;
}

bool equivalent_fans(const ToricFan& a, const ToricFan& b) {
  return canonical_cycle(a) == canonical_cycle(b);
}

}  // namespace semitoric
