#pragma once

#include "core/semitoric_polygon.hpp"
#include "core/validation.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace semitoric {

class ModuliError : public std::runtime_error {
 public:
  explicit ModuliError(const std::string& what) : std::runtime_error(what) {}
};

// Taylor coefficients sigma_{i,j} for 0 <= i+j <= degree, with sigma_{0,0} = 0
// and sigma_{0,1} an angle in [0, 2*pi).
struct TruncatedSeries {
  int degree = 6;
  std::vector<std::vector<double>> coeff;  // coeff[i][j], i + j <= degree

  explicit TruncatedSeries(int n = 6);
  double at(int i, int j) const { return coeff[i][j]; }
  double& at(int i, int j) { return coeff[i][j]; }
  bool operator==(const TruncatedSeries& o) const {
    return degree == o.degree && coeff == o.coeff;
  }
};

ValidationReport validate_series(const TruncatedSeries& s);

// Cap sequence b_n = b0 * ratio^n, positive and linearly summable.
struct CapSequence {
  double b0 = 1;
  double ratio = 0.5;

  double b(int n) const;
  // sum_{n > degree} (n+1) b_n, the truncation error of the series metric.
  double tail_bound(int degree) const;
};

// sum over (i,j) != (0,1) of min{|sigma - sigma'|, b_{i+j}} plus the circle
// term min{|d01|, 2*pi - |d01|, b_1}.
double series_distance(const TruncatedSeries& s, const TruncatedSeries& t,
                       const CapSequence& caps);

struct IngredientList {
  PrimitiveSemitoricPolygon polygon;
  std::vector<double> h;
  std::vector<TruncatedSeries> series;

  int mf() const { return static_cast<int>(polygon.markers.size()); }
  bool operator==(const IngredientList& o) const {
    return polygon == o.polygon && h == o.h && series == o.series;
  }
};

// Length of the vertical slice {x} x R intersected with the polygon.
Rat vertical_slice_length(const RationalPolygon& p, const Rat& x);

ValidationReport validate_ingredients(const IngredientList& m);

// ((1-t) h/len + t h'/len') * len_t; stays strictly inside (0, len_t).
double h_interpolate(double h, double len, double hp, double lenp,
                     double len_t, double t);

double ingredient_distance(const IngredientList& a, const IngredientList& b,
                           Density density, const CapSequence& caps);

// Piecewise path from a to b with steps+1 samples: move families replayed
// from the normalization traces of both fans, a same-fan interpolation in the
// middle, h and series interpolated along the way. path[0] == a and
// path[steps] == b exactly; every sample is a valid ingredient list.
std::vector<IngredientList> connectivity_path(const IngredientList& a,
                                              const IngredientList& b,
                                              int steps);

}  // namespace semitoric
