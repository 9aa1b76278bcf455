#include "core/semitoric_fan.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "core/group.hpp"

namespace semitoric {

namespace {

int wrap(int i, int d) { return ((i % d) + d) % d; }

bool on_top(const Vec2& v, const Vec2& w) { return v.y < 0 && w.y < 0; }

FanError move_error(const FanMove& m, const std::string& reason) {
  return FanError(to_string(m) + ": " + reason);
}

}  // namespace

const char* to_string(CornerLabel l) {
  switch (l) {
    case CornerLabel::Delzant: return "delzant";
    case CornerLabel::Fake: return "fake";
    case CornerLabel::Hidden: return "hidden";
  }
  return "?";
}

std::string to_string(const FanMove& m) {
  std::ostringstream os;
  switch (m.kind) {
    case MoveKind::Chop: os << "chop(" << m.index << ")"; break;
    case MoveKind::Unchop: os << "unchop(" << m.index << ")"; break;
    case MoveKind::RemoveHidden: os << "remove_hidden(" << m.index << ")"; break;
    case MoveKind::CommuteFakeDelzant:
      os << "commute_fake_delzant(" << m.index << ")";
      break;
    case MoveKind::ActT: os << "act_t(" << m.k << ")"; break;
    case MoveKind::Rotate: os << "rotate(" << m.index << ")"; break;
  }
  return os.str();
}

ValidationReport validate_semitoric(const SemitoricFan& f) {
  const int d = static_cast<int>(f.rays.size());
  if (d < 3) return {false, "d = " + std::to_string(d) + " < 3"};
  if (f.labels.size() != f.rays.size())
    return {false, "labels.size() = " + std::to_string(f.labels.size()) +
                       " != d = " + std::to_string(d)};
  for (int i = 0; i < d; ++i) {
    if (!is_primitive(f.rays[i]))
      return {false, "ray " + std::to_string(i) + " = " +
                         to_string(f.rays[i]) + " not primitive"};
  }
  for (int i = 0; i < d; ++i) {
    const Vec2& v = f.rays[i];
    const Vec2& w = f.rays[wrap(i + 1, d)];
    const i64 dvw = det2(v, w);
    const i64 dvtw = det2(v, kT * w);
    const std::string at = "corner " + std::to_string(i);
    switch (f.labels[i]) {
      case CornerLabel::Delzant:
        if (dvw != 1)
          return {false, at + " delzant but det = " + std::to_string(dvw)};
        break;
      case CornerLabel::Fake:
        if (!on_top(v, w)) return {false, at + " fake but not below the x-axis"};
        if (dvtw != 0)
          return {false, at + " fake but det(v, Tw) = " + std::to_string(dvtw)};
        break;
      case CornerLabel::Hidden:
        if (!on_top(v, w))
          return {false, at + " hidden but not below the x-axis"};
        if (dvtw != 1)
          return {false, at + " hidden but det(v, Tw) = " + std::to_string(dvtw)};
        break;
    }
    if (dvw <= 0)
      return {false, at + " has det(v_i, v_{i+1}) = " + std::to_string(dvw) +
                         " <= 0"};
  }
  // All adjacent determinants are positive, so the winding number is
  // defined; a fan must wind exactly once.
  const i64 w = geometric_winding(f.rays);
  if (w != 1) return {false, "winding = " + std::to_string(w)};
  return {true, ""};
}

int complexity(const SemitoricFan& f) {
  int c = 0;
  for (CornerLabel l : f.labels)
    if (l != CornerLabel::Delzant) ++c;
  return c;
}

SemitoricFan standard_fan(int c) {
  if (c < 0) throw FanError("standard fan needs c >= 0");
  SemitoricFan f;
  f.rays = {{0, -1}, {1, 0}, {c, 1}, {-1, 0}};
  f.labels.assign(4, CornerLabel::Delzant);
  for (int n = 0; n < c; ++n) {
    f.rays.push_back({-c + n, -1});
    f.labels.push_back(CornerLabel::Fake);
  }
  return f;
}

SemitoricFan apply_move(const SemitoricFan& f, const FanMove& m) {
  const int d = static_cast<int>(f.rays.size());
  SemitoricFan g = f;
  switch (m.kind) {
    case MoveKind::Chop: {
      const int i = m.index;
      if (i < 0 || i >= d) throw move_error(m, "index out of range");
      if (f.labels[i] != CornerLabel::Delzant)
        throw move_error(m, "corner not delzant");
      const Vec2 u = f.rays[i] + f.rays[wrap(i + 1, d)];
      g.rays.insert(g.rays.begin() + i + 1, u);
      g.labels[i] = CornerLabel::Delzant;
      g.labels.insert(g.labels.begin() + i + 1, CornerLabel::Delzant);
      return g;
    }
    case MoveKind::Unchop: {
      const int i = m.index;
      if (i < 0 || i >= d) throw move_error(m, "index out of range");
      if (d < 4) throw move_error(m, "d = " + std::to_string(d) + " < 4");
      const int prev = wrap(i - 1, d);
      if (f.labels[prev] != CornerLabel::Delzant ||
          f.labels[i] != CornerLabel::Delzant)
        throw move_error(m, "flanking corners not both delzant");
      if (!(f.rays[prev] + f.rays[wrap(i + 1, d)] == f.rays[i]))
        throw move_error(m, "ray " + to_string(f.rays[i]) +
                                " is not the sum of its neighbors");
      g.rays.erase(g.rays.begin() + i);
      g.labels.erase(g.labels.begin() + i);
      // det(v_{i-1}, v_{i+1}) = det(v_{i-1}, v_i) = 1, so the merged corner
      // stays Delzant.
      g.labels[wrap(i - 1, d - 1)] = CornerLabel::Delzant;
      return g;
    }
    case MoveKind::RemoveHidden: {
      const int i = m.index;
      if (i < 0 || i >= d) throw move_error(m, "index out of range");
      if (f.labels[i] != CornerLabel::Hidden)
        throw move_error(m, "corner not hidden");
      const Vec2 u = kT * f.rays[wrap(i + 1, d)];
      g.rays.insert(g.rays.begin() + i + 1, u);
      g.labels[i] = CornerLabel::Delzant;
      g.labels.insert(g.labels.begin() + i + 1, CornerLabel::Fake);
      return g;
    }
    case MoveKind::CommuteFakeDelzant: {
      const int i = m.index;
      if (i < 0 || i >= d) throw move_error(m, "index out of range");
      const int i1 = wrap(i + 1, d), i2 = wrap(i + 2, d);
      if (f.labels[i] != CornerLabel::Fake)
        throw move_error(m, "corner not fake");
      if (f.labels[i1] != CornerLabel::Delzant)
        throw move_error(m, "next corner not delzant");
      if (!on_top(f.rays[i1], f.rays[i2]))
        throw move_error(m, "delzant corner not below the x-axis");
      g.rays[i1] = kT * f.rays[i2];
      g.labels[i] = CornerLabel::Delzant;
      g.labels[i1] = CornerLabel::Fake;
      return g;
    }
    case MoveKind::ActT: {
      const Mat2 tk = t_power(m.k);
      for (Vec2& v : g.rays) v = tk * v;
      return g;
    }
    case MoveKind::Rotate: {
      const int j = m.index;
      if (j < 0 || j >= d) throw move_error(m, "index out of range");
      std::rotate(g.rays.begin(), g.rays.begin() + j, g.rays.end());
      std::rotate(g.labels.begin(), g.labels.begin() + j, g.labels.end());
      return g;
    }
  }
  throw move_error(m, "unknown move");
}

SemitoricFan ensure_right_angle(const SemitoricFan& f,
                                std::vector<FanMove>* trace) {
  SemitoricFan g = f;
  auto step = [&](FanMove m) {
    g = apply_move(g, m);
    if (trace) trace->push_back(m);
  };
  // |y_i| + |y_{i+1}| of the crossing pair strictly drops per chop, so this
  // terminates.
  for (;;) {
    const int d = static_cast<int>(g.rays.size());
    int pos = -1;
    for (int i = 0; i < d; ++i)
      if (g.rays[i] == Vec2{1, 0}) pos = i;
    if (pos >= 0) {
      const Vec2 pred = g.rays[wrap(pos - 1, d)];
      if (pred.y != -1)
        throw FanError("predecessor of (1,0) is " + to_string(pred) +
                       ", expected y = -1");
      if (pred.x != 0) step({MoveKind::ActT, 0, pred.x});
      if (pos != 1) step({MoveKind::Rotate, wrap(pos - 1, d), 0});
      return g;
    }
    int cross = -1;
    for (int i = 0; i < d; ++i)
      if (g.rays[i].y < 0 && g.rays[wrap(i + 1, d)].y > 0) cross = i;
    if (cross < 0) throw FanError("no ray crosses the positive x-axis");
    step({MoveKind::Chop, cross, 0});
  }
}

namespace {

// The Delzant block of a fan in right-angle position with its fake corners
// in one final block: rays w_0 .. w_{l-1} with l = d - c, plus the cycle
// closing ray t_0 = w_l (= w_0 when c = 0).  The residual toric fan is
// (t_0, w_1, .., w_{l-1}) and b is its word.
struct ToricPart {
  int l = 0;
  std::vector<Vec2> t;
  FanWord b;
};

ToricPart toric_part(const SemitoricFan& f) {
  const int d = static_cast<int>(f.rays.size());
  const int c = complexity(f);
  ToricPart p;
  p.l = d - c;
  p.t.resize(p.l);
  p.t[0] = f.rays[c == 0 ? 0 : p.l];
  for (int j = 1; j < p.l; ++j) p.t[j] = f.rays[j];
  p.b = fan_to_word(ToricFan{p.t});
  return p;
}

}  // namespace

NormalizeResult normalize(const SemitoricFan& f) {
  {
    ValidationReport r = validate_semitoric(f);
    if (!r.valid) throw FanError("normalize: invalid input: " + r.reason);
  }
  const int c = complexity(f);
  NormalizeResult res;
  SemitoricFan g = f;
  auto step = [&](FanMove m) {
    g = apply_move(g, m);
    res.trace.push_back(m);
    if (m.kind == MoveKind::ActT) res.k += m.k;
    if (complexity(g) != c)
      throw FanError("normalize: complexity changed after " + to_string(m));
    ValidationReport r = validate_semitoric(g);
    if (!r.valid)
      throw FanError("normalize: invalid fan after " + to_string(m) + ": " +
                     r.reason);
  };

  // 1. Right angle: w_0 = (0,-1), w_1 = (1,0).
  {
    std::vector<FanMove> t;
    g = ensure_right_angle(g, &t);
    for (const FanMove& m : t) {
      res.trace.push_back(m);
      if (m.kind == MoveKind::ActT) res.k += m.k;
    }
  }

  // 2. No hidden corners.  Each removal turns one hidden corner into
  // (Delzant, Fake) and never creates a hidden corner.
  for (;;) {
    const int d = static_cast<int>(g.rays.size());
    int i = -1;
    for (int j = 0; j < d && i < 0; ++j)
      if (g.labels[j] == CornerLabel::Hidden) i = j;
    if (i < 0) break;
    step({MoveKind::RemoveHidden, i, 0});
  }

  // 3. Push every fake corner rightward until the fakes form one block
  // ending at the wrap corner (w_{d-1}, w_0).  Each commute swaps a
  // (fake, delzant) pair, so the number of inversions strictly drops.
  for (;;) {
    const int d = static_cast<int>(g.rays.size());
    int i = -1;
    for (int j = 0; j < d && i < 0; ++j) {
      if (g.labels[j] != CornerLabel::Fake) continue;
      const int j1 = wrap(j + 1, d);
      if (g.labels[j1] != CornerLabel::Delzant) continue;
      if (!on_top(g.rays[j1], g.rays[wrap(j + 2, d)])) continue;
      i = j;
    }
    if (i < 0) break;
    step({MoveKind::CommuteFakeDelzant, i, 0});
  }
  {
    // The fake block must now be exactly the last c corners.
    const int d = static_cast<int>(g.rays.size());
    for (int j = 0; j < d; ++j) {
      const bool fake = g.labels[j] == CornerLabel::Fake;
      if (fake != (j >= d - c))
        throw FanError("normalize: fake corners not in final block at " +
                       std::to_string(j));
    }
  }

  // 4. Shrink the residual toric fan.  Its word b always satisfies
  // sum(b) = 3l - 12 and winds once, so some entry of b in [1, l-2] lies in
  // {-1, 0, 1}; zeros are transferred to the front, ones unchopped away,
  // minus ones chopped open.  Chops at corner j in [1, l-1] and unchops of
  // ray j in [2, l-1] keep w_0, w_1 and the fake block intact.  The word
  // plus the pinned rays t_0, t_1 determine the fan, so a repeated word is
  // a genuine cycle and is reported instead of looping.
  std::set<FanWord> seen;
  const std::size_t move_cap =
      10000 + 200 * res.trace.size() + 2000 * g.rays.size();
  for (;;) {
    const ToricPart p = toric_part(g);
    const int l = p.l;
    const FanWord& b = p.b;
    auto word_str = [&] {
      std::ostringstream os;
      for (i64 x : b) os << x << " ";
      return os.str();
    };
    if (l == 4 && b[0] == 0 && b[1] == 0 && b[2] == 0 && b[3] == 0) break;
    if (res.trace.size() > move_cap)
      throw FanError("normalize: move cap exceeded at toric word " +
                     word_str());
    if (!seen.insert(b).second)
      throw FanError("normalize: toric word repeated: " + word_str());
    if (l == 3) {
      // (-1,-1,-1) -> (0,1,0,-1).
      step({MoveKind::Chop, 1, 0});
      continue;
    }
    if (l == 4) {
      // b is a rotation of (0,k,0,-k); one chop plus one unchop moves k one
      // step toward 0.
      if (b[1] != 0) {
        if (b[1] > 0) {
          step({MoveKind::Chop, 3, 0});
          step({MoveKind::Unchop, 3, 0});
        } else {
          step({MoveKind::Chop, 2, 0});
          step({MoveKind::Unchop, 4, 0});
        }
      } else {
        if (b[0] > 0) {
          step({MoveKind::Chop, 2, 0});
          step({MoveKind::Unchop, 2, 0});
        } else if (b[0] < 0) {
          step({MoveKind::Chop, 1, 0});
          step({MoveKind::Unchop, 3, 0});
        } else {
          throw FanError("normalize: quadrilateral word not (0,k,0,-k)");
        }
      }
      continue;
    }
    // l > 4.  Zeros first: a zero at an index in [1, l-2] with a nonzero
    // left neighbor absorbs one unit from that neighbor.
    int z = -1;
    for (int j = 1; j <= l - 2 && z < 0; ++j)
      if (b[j] == 0 && b[j - 1] != 0) z = j;
    if (z >= 0) {
      if (b[z - 1] > 0) {
        // (x, 0, y) -> (x-1, 0, y+1)
        step({MoveKind::Chop, z + 1, 0});
        step({MoveKind::Unchop, z + 1, 0});
      } else {
        // (x, 0, y) -> (x+1, 0, y-1)
        step({MoveKind::Chop, z, 0});
        step({MoveKind::Unchop, z + 2, 0});
      }
      continue;
    }
    // Entries of size one, preferring those whose move touches no zero on
    // the left: unchopping a 1 right after the zero prefix drops a prefix
    // zero to -1, and chopping a -1 there is undone by the unchop rule, so
    // those variants come last.
    int one_safe = -1, one_any = -1, minus_safe = -1, minus_any = -1;
    for (int j = 1; j <= l - 2; ++j) {
      if (b[j] == 1) {
        if (one_any < 0) one_any = j;
        if (b[j - 1] != 0 && one_safe < 0) one_safe = j;
      } else if (b[j] == -1) {
        if (minus_any < 0) minus_any = j;
        if (b[j - 1] != 0 && minus_safe < 0) minus_safe = j;
      }
    }
    if (one_safe >= 0) {
      step({MoveKind::Unchop, one_safe + 1, 0});
    } else if (minus_safe >= 0) {
      // (-1, y) -> (0, 1, y+1); the new zero feeds the transfer rule.
      step({MoveKind::Chop, minus_safe + 1, 0});
    } else if (one_any >= 0) {
      step({MoveKind::Unchop, one_any + 1, 0});
    } else if (minus_any >= 0) {
      step({MoveKind::Chop, minus_any + 1, 0});
    } else {
      throw FanError("normalize: no entry of the toric word in {-1,0,1}: " +
                     word_str());
    }
  }

  if (!(g == standard_fan(c)))
    throw FanError("normalize: result is not the standard fan of complexity " +
                   std::to_string(c));
  res.fan = g;
  return res;
}

SemitoricFan replay_trace(const SemitoricFan& f,
                          const std::vector<FanMove>& trace) {
  SemitoricFan g = f;
  {
    ValidationReport r = validate_semitoric(g);
    if (!r.valid) throw FanError("replay: invalid input: " + r.reason);
  }
  for (std::size_t s = 0; s < trace.size(); ++s) {
    g = apply_move(g, trace[s]);
    ValidationReport r = validate_semitoric(g);
    if (!r.valid)
      throw FanError("replay: invalid fan after step " + std::to_string(s) +
                     " (" + to_string(trace[s]) + "): " + r.reason);
  }
  return g;
}

SemitoricFan canonical_rotation(const SemitoricFan& f) {
  const int d = static_cast<int>(f.rays.size());
  SemitoricFan best = f;
  for (int j = 1; j < d; ++j) {
    SemitoricFan cand = apply_move(f, {MoveKind::Rotate, j, 0});
    auto key = [](const SemitoricFan& x) {
      std::vector<std::pair<std::pair<i64, i64>, int>> k;
      k.reserve(x.rays.size());
      for (std::size_t i = 0; i < x.rays.size(); ++i)
        k.push_back({{x.rays[i].x, x.rays[i].y}, static_cast<int>(x.labels[i])});
      return k;
    };
    if (key(cand) < key(best)) best = cand;
  }
  return best;
}

bool equal_up_to_rotation(const SemitoricFan& a, const SemitoricFan& b) {
  if (a.rays.size() != b.rays.size()) return false;
  return canonical_rotation(a) == canonical_rotation(b);
}

}  // namespace semitoric
