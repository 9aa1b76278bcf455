#include "core/group.hpp"

namespace semitoric {

GeneratorWord::GeneratorWord(const std::vector<GenPower>& parts) {
  for (const auto& p : parts) append(p.gen, p.pow);
}

void GeneratorWord::append(Gen g, i64 pow) {
  if (pow == 0) return;
  if (!parts_.empty() && parts_.back().gen == g) {
    parts_.back().pow += pow;
    if (parts_.back().pow == 0) parts_.pop_back();
    return;
  }
  parts_.push_back({g, pow});
}

void GeneratorWord::append(const GeneratorWord& w) {
  for (const auto& p : w.parts_) append(p.gen, p.pow);
}

GeneratorWord st_word(const std::vector<i64>& a) {
  GeneratorWord w;
  for (i64 ai : a) {
    w.append(Gen::S, 1);
    w.append(Gen::T, ai);
  }
  return w;
}

i64 word_weight(const GeneratorWord& w) {
  i64 s = 0, t = 0;
  for (const auto& p : w.parts()) (p.gen == Gen::S ? s : t) += p.pow;
  return 3 * s - t;
}

LiftedElement lift_word(const GeneratorWord& w) {
  Mat2 m = kIdentity;
  for (const auto& p : w.parts())
    m = m * (p.gen == Gen::S ? s_power(p.pow) : t_power(p.pow));
  return {m, word_weight(w)};
}

GeneratorWord sl2_decompose(const Mat2& m) {
  if (m.det() != 1) throw GroupError("sl2_decompose: determinant != 1");
  // Peel factors off the left: T^-q then S clear the bottom-left entry by
  // the Euclidean algorithm, and the peeled factors are replayed in reverse.
  GeneratorWord prefix;  // m == eval(prefix) * cur  throughout
  Mat2 cur = m;
  while (cur.c != 0) {
    // floor division so the remainder satisfies 0 <= r < |c|
    i64 q = cur.a / cur.c;
    if ((cur.a % cur.c != 0) && ((cur.a < 0) != (cur.c < 0))) --q;
    Mat2 after_t{cur.a - q * cur.c, cur.b - q * cur.d, cur.c, cur.d};
    cur = {after_t.c, after_t.d, -after_t.a, -after_t.b};  // S^-1 * after_t
    prefix.append(Gen::T, q);
    prefix.append(Gen::S, 1);
  }
  // cur is now upper triangular with det 1: +-T^b.
  if (cur.a == 1) {
    prefix.append(Gen::T, cur.b);
  } else {
    prefix.append(Gen::S, 2);  // S^2 = -I
    prefix.append(Gen::T, -cur.b);
  }
  return prefix;
}

i64 winding_number(const LiftedElement& g) {
  if (!(g.matrix == kIdentity))
    throw GroupError("winding_number: matrix is not the identity");
  if (g.weight % 12 != 0)
    throw GroupError("winding_number: weight " + std::to_string(g.weight) +
                     " not divisible by 12");
  return g.weight / 12;
}

ProjectivePoint psl2_act(const Mat2& m, const ProjectivePoint& p) {
  if (p.infinite) {
    if (m.c == 0) return ProjectivePoint::infinity();
    return ProjectivePoint::of(Rat(m.a, m.c));
  }
  Rat num = Rat(m.a) * p.value + Rat(m.b);
  Rat den = Rat(m.c) * p.value + Rat(m.d);
  if (den == 0) return ProjectivePoint::infinity();
  return ProjectivePoint::of(num / den);
}

std::optional<std::pair<int, int>> psltz_witness(const std::vector<i64>& a) {
  const int d = static_cast<int>(a.size());
  Mat2 m = lift_word(st_word(a)).matrix;
  Mat2 neg{-1, 0, 0, -1};
  if (!(m == kIdentity) && !(m == neg))
    throw GroupError("psltz_witness: word is not +-identity in SL2(Z)");
  if (d <= 1) return std::nullopt;  // no length-1 kernel word exists
  if (d <= 3) return std::make_pair(0, 1);
  auto small = [&](int i) { return a[i] >= -1 && a[i] <= 1; };
  for (int i = 0; i < d; ++i) {
    if (!small(i)) continue;
    int last = (i == 0) ? d - 2 : d - 1;
    for (int j = i + 2; j <= last; ++j)
      if (small(j)) return std::make_pair(i, j);
  }
  return std::nullopt;
}

}  // namespace semitoric
