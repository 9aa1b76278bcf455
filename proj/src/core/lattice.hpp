#pragma once

// Exact primitives for the integer lattice Z^2: column vectors, 2x2 integer
// matrices acting on them, and the two generators
//
//   S = [[0,-1],[1,0]]   (quarter turn),
//   T = [[1,1],[0,1]]    (unit shear).
//
// Entries are int64. Inputs throughout the library are small (fan rays,
// words with small coefficients), so arithmetic here is unchecked.

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>

namespace semitoric {

using i64 = std::int64_t;

struct Vec2 {
  i64 x = 0;
  i64 y = 0;

  friend bool operator==(const Vec2&, const Vec2&) = default;
  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator-() const { return {-x, -y}; }
};

inline Vec2 operator*(i64 k, const Vec2& v) { return {k * v.x, k * v.y}; }

inline i64 det2(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

// gcd(0,0) == 0, so the zero vector is not primitive.
inline bool is_primitive(const Vec2& v) {
  return std::gcd(std::abs(v.x), std::abs(v.y)) == 1;
}

// Row-major [[a,b],[c,d]], defaulting to the identity.
struct Mat2 {
  i64 a = 1;
  i64 b = 0;
  i64 c = 0;
  i64 d = 1;

  friend bool operator==(const Mat2&, const Mat2&) = default;

  Vec2 operator*(const Vec2& v) const {
    return {a * v.x + b * v.y, c * v.x + d * v.y};
  }
  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d,
            c * o.a + d * o.c, c * o.b + d * o.d};
  }
  i64 det() const { return a * d - b * c; }

  // Inverse for det == +1 (the only case the library needs).
  Mat2 inverse_unimodular() const { return {d, -b, -c, a}; }
};

inline const Mat2 kS{0, -1, 1, 0};
inline const Mat2 kT{1, 1, 0, 1};
inline const Mat2 kIdentity{};

// T^e = [[1,e],[0,1]] for any integer e.
inline Mat2 t_power(i64 e) { return {1, e, 0, 1}; }

// S has order 4 in SL2(Z); reduce the exponent mod 4.
inline Mat2 s_power(i64 e) {
  switch (((e % 4) + 4) % 4) {
    case 0: return kIdentity;
    case 1: return kS;
    case 2: return {-1, 0, 0, -1};
    default: return {0, 1, -1, 0};
  }
}

inline std::string to_string(const Vec2& v) {
  return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

inline std::string to_string(const Mat2& m) {
  return "[[" + std::to_string(m.a) + "," + std::to_string(m.b) + "],[" +
         std::to_string(m.c) + "," + std::to_string(m.d) + "]]";
}

}  // namespace semitoric
