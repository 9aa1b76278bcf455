#pragma once

// Exact rational scalars and points for polygon geometry.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

#include "core/lattice.hpp"

namespace semitoric {

using Rat = boost::multiprecision::cpp_rational;

struct Pt {
  Rat x;
  Rat y;
  friend bool operator==(const Pt&, const Pt&) = default;
  Pt operator+(const Pt& o) const { return {x + o.x, y + o.y}; }
  Pt operator-(const Pt& o) const { return {x - o.x, y - o.y}; }
};

inline Pt operator*(const Rat& k, const Pt& p) { return {k * p.x, k * p.y}; }

inline Rat cross(const Pt& a, const Pt& b) { return a.x * b.y - a.y * b.x; }

inline Pt to_point(const Vec2& v) { return {Rat(v.x), Rat(v.y)}; }

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

// Canonical "p/q" form; integers print without the "/q" part.
inline std::string rat_to_string(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "p", "p/q", and plain decimal strings like "-1.25".
inline Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  // cpp_int's string constructor treats a leading 0 as an octal prefix, so
  // strip redundant zeros to keep every literal base 10.
  auto parse_int = [](std::string t) {
    bool neg = false;
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
      neg = t[0] == '-';
      t.erase(0, 1);
    }
    auto nz = t.find_first_not_of('0');
    t = nz == std::string::npos ? (t.empty() ? "" : "0") : t.substr(nz);
    boost::multiprecision::cpp_int v(t);
    return neg ? -v : v;
  };
  auto slash = s.find('/');
  try {
    if (slash != std::string::npos) {
      boost::multiprecision::cpp_int num = parse_int(s.substr(0, slash));
      boost::multiprecision::cpp_int den = parse_int(s.substr(slash + 1));
      if (den == 0) throw std::invalid_argument("zero denominator");
      return Rat(num, den);
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rat(parse_int(s));
    boost::multiprecision::cpp_int num =
        parse_int(s.substr(0, dot) + s.substr(dot + 1));
    boost::multiprecision::cpp_int den = 1;
    for (size_t i = dot + 1; i < s.size(); ++i) den *= 10;
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
}

// Total order on points, x before y; used for canonical vertex rotations.
inline bool lex_less(const Pt& a, const Pt& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

}  // namespace semitoric
