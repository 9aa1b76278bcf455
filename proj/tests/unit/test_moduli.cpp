#include "doctest.h"

#include <cmath>
#include <random>

#include "core/moduli.hpp"
#include "support/generators.hpp"

using namespace semitoric;

namespace {

constexpr double kPi = 3.14159265358979323846;

TruncatedSeries series_with(int degree, double base, double angle) {
  TruncatedSeries s(degree);
  for (int i = 0; i <= degree; ++i)
    for (int j = 0; i + j <= degree; ++j) s.at(i, j) = base / (1 + i + j);
  s.at(0, 0) = 0.0;
  s.at(0, 1) = angle;
  return s;
}

IngredientList simple_ingredients(const SemitoricFan& fan, double base,
                                  double angle, double frac) {
  IngredientList m;
  m.polygon = polygon_realizing_fan(fan);
  for (const Marker& mk : m.polygon.markers) {
    double len = to_double(vertical_slice_length(m.polygon.polygon,
                                                 mk.lambda));
    m.h.push_back(frac * len);
    m.series.push_back(series_with(4, base, angle));
  }
  return m;
}

}  // namespace

TEST_SUITE("moduli") {

TEST_CASE("series shape and validation") {
  TruncatedSeries s(3);
  CHECK(s.degree == 3);
  REQUIRE(s.coeff.size() == 4);
  for (int i = 0; i <= 3; ++i)
    CHECK(s.coeff[i].size() == static_cast<std::size_t>(4 - i));
  CHECK(validate_series(s).valid);

  CHECK_THROWS_AS(TruncatedSeries(0), ModuliError);

  TruncatedSeries bad0 = s;
  bad0.at(0, 0) = 0.5;
  CHECK_FALSE(validate_series(bad0).valid);

  TruncatedSeries neg = s;
  neg.at(0, 1) = -0.1;
  CHECK_FALSE(validate_series(neg).valid);
  TruncatedSeries big = s;
  big.at(0, 1) = 2 * kPi;
  CHECK_FALSE(validate_series(big).valid);

  TruncatedSeries ragged = s;
  ragged.coeff[1].push_back(0.0);
  CHECK_FALSE(validate_series(ragged).valid);
}

TEST_CASE("caps halve and the tail bound is the series remainder") {
  CapSequence caps;
  CHECK(caps.b(0) == 1.0);
  CHECK(caps.b(3) == 0.125);

  double tail = 0.0;
  for (int n = 7; n < 200; ++n) tail += (n + 1) * caps.b(n);
  CHECK(caps.tail_bound(6) == doctest::Approx(tail).epsilon(1e-12));

  CapSequence slow{2.0, 0.75};
  tail = 0.0;
  for (int n = 4; n < 400; ++n) tail += (n + 1) * slow.b(n);
  CHECK(slow.tail_bound(3) == doctest::Approx(tail).epsilon(1e-12));
}

TEST_CASE("series distance saturates its caps") {
  CapSequence caps;
  TruncatedSeries a = series_with(3, 0.0, 1.0);
  CHECK(series_distance(a, a, caps) == 0.0);

  TruncatedSeries far = series_with(3, 100.0, 1.0);
  double expect = 0.0;
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; i + j <= 3; ++j)
      if (!(i == 0 && (j == 0 || j == 1))) expect += caps.b(i + j);
  CHECK(series_distance(a, far, caps) ==
        doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("the angle coordinate lives on a circle") {
  CapSequence caps;
  TruncatedSeries a = series_with(3, 0.25, 0.1);
  TruncatedSeries b = series_with(3, 0.25, 2 * kPi - 0.1);
  CHECK(series_distance(a, b, caps) == doctest::Approx(0.2).epsilon(1e-12));

  TruncatedSeries c = series_with(3, 0.25, 0.1 + 0.3);
  CHECK(series_distance(a, c, caps) == doctest::Approx(0.3).epsilon(1e-12));

  TruncatedSeries other(4);
  CHECK_THROWS_AS(series_distance(a, other, caps), ModuliError);
}

TEST_CASE("series distance is symmetric and triangular") {
  CapSequence caps{0.7, 0.6};
  std::mt19937 rng(3141u);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  std::uniform_real_distribution<double> ang(0.0, 2 * kPi - 1e-9);
  auto random_series = [&] {
    TruncatedSeries s(3);
    for (int i = 0; i <= 3; ++i)
      for (int j = 0; i + j <= 3; ++j) s.at(i, j) = coef(rng);
    s.at(0, 0) = 0.0;
    s.at(0, 1) = ang(rng);
    return s;
  };
  for (int iter = 0; iter < 100; ++iter) {
    TruncatedSeries x = random_series(), y = random_series(),
                    z = random_series();
    double xy = series_distance(x, y, caps);
    double yx = series_distance(y, x, caps);
    double yz = series_distance(y, z, caps);
    double xz = series_distance(x, z, caps);
    CHECK(xy == yx);
    CHECK(xz <= xy + yz + 1e-12);
  }
}

TEST_CASE("vertical slices of simple shapes") {
  RationalPolygon sq{{{Rat(0), Rat(0)},
                      {Rat(1), Rat(0)},
                      {Rat(1), Rat(1)},
                      {Rat(0), Rat(1)}}};
  CHECK(vertical_slice_length(sq, Rat(1, 2)) == Rat(1));
  CHECK(vertical_slice_length(sq, Rat(0)) == Rat(1));
  CHECK(vertical_slice_length(sq, Rat(2)) == Rat(0));

  RationalPolygon tri{{{Rat(0), Rat(0)}, {Rat(2), Rat(0)}, {Rat(0), Rat(2)}}};
  CHECK(vertical_slice_length(tri, Rat(1)) == Rat(1));
  CHECK(vertical_slice_length(tri, Rat(2)) == Rat(0));
  CHECK(vertical_slice_length(tri, Rat(3, 2)) == Rat(1, 2));
}

TEST_CASE("ingredient lists validate h against the slice") {
  IngredientList m = simple_ingredients(standard_fan(1), 0.3, 1.0, 0.5);
  CHECK(validate_ingredients(m).valid);
  CHECK(m.mf() == 1);

  IngredientList zero = m;
  zero.h[0] = 0.0;
  CHECK_FALSE(validate_ingredients(zero).valid);

  IngredientList tall = m;
  tall.h[0] = to_double(vertical_slice_length(m.polygon.polygon, Rat(1)));
  CHECK_FALSE(validate_ingredients(tall).valid);

  IngredientList missing = m;
  missing.series.clear();
  CHECK_FALSE(validate_ingredients(missing).valid);

  IngredientList extra = m;
  extra.h.push_back(0.5);
  CHECK_FALSE(validate_ingredients(extra).valid);
}

TEST_CASE("height interpolation is exact at the ends") {
  CHECK(h_interpolate(0.5, 2.0, 0.75, 3.0, 2.0, 0.0) == 0.5);
  CHECK(h_interpolate(0.5, 2.0, 0.75, 3.0, 3.0, 1.0) == 0.75);

  double mid = h_interpolate(0.5, 2.0, 0.75, 3.0, 4.0, 0.5);
  CHECK(mid == doctest::Approx(4.0 * (0.5 * 0.25 + 0.5 * 0.25)));
  CHECK(mid > 0.0);
  CHECK(mid < 4.0);
}

TEST_CASE("ingredient distance is a metric on samples") {
  CapSequence caps;
  std::mt19937 rng(777u);
  std::vector<IngredientList> pool;
  pool.push_back(simple_ingredients(standard_fan(1), 0.3, 1.0, 0.5));
  pool.push_back(simple_ingredients(standard_fan(1), 0.6, 1.5, 0.75));
  pool.push_back(simple_ingredients(standard_fan(1), -0.2, 5.9, 0.25));
  IngredientList moved = pool[0];
  moved.polygon.polygon = translate(moved.polygon.polygon, {Rat(0), Rat(2)});
  pool.push_back(moved);

  for (const IngredientList& m : pool)
    CHECK(ingredient_distance(m, m, Density::ExpAbsX, caps) == 0.0);

  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      double ij = ingredient_distance(pool[i], pool[j], Density::ExpAbsX,
                                      caps);
      double ji = ingredient_distance(pool[j], pool[i], Density::ExpAbsX,
                                      caps);
      CHECK(ij == doctest::Approx(ji).epsilon(1e-12));
      CHECK(ij > 0.0);
    }

  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = 0; j < pool.size(); ++j)
      for (std::size_t k = 0; k < pool.size(); ++k) {
        double ik = ingredient_distance(pool[i], pool[k], Density::ExpAbsX,
                                        caps);
        double ij = ingredient_distance(pool[i], pool[j], Density::ExpAbsX,
                                        caps);
        double jk = ingredient_distance(pool[j], pool[k], Density::ExpAbsX,
                                        caps);
        CHECK(ik <= ij + jk + 1e-9);
      }

  IngredientList two = simple_ingredients(standard_fan(2), 0.3, 1.0, 0.5);
  CHECK_THROWS_AS(ingredient_distance(pool[0], two, Density::ExpAbsX, caps),
                  ModuliError);
}

TEST_CASE("connectivity paths hit both ends exactly") {
  IngredientList a = simple_ingredients(standard_fan(1), 0.4, 1.0, 0.5);
  SemitoricFan fan = standard_fan(1);
  SemitoricFan moved = apply_move(fan, {MoveKind::Chop, 1, 0});
  IngredientList b = simple_ingredients(moved, 0.6, 1.5, 0.75);

  const int steps = 24;
  std::vector<IngredientList> path = connectivity_path(a, b, steps);
  REQUIRE(path.size() == static_cast<std::size_t>(steps + 1));
  CHECK(path.front() == a);
  CHECK(path.back() == b);
  for (const IngredientList& m : path)
    CHECK(validate_ingredients(m).valid);
}

TEST_CASE("paths work through hidden corners") {
  SemitoricFan h1{{{0, -1}, {1, 0}, {1, 1}, {-1, 0}, {-2, -1}},
                  {CornerLabel::Delzant, CornerLabel::Delzant,
                   CornerLabel::Delzant, CornerLabel::Delzant,
                   CornerLabel::Hidden}};
  IngredientList a = simple_ingredients(h1, 0.2, 0.5, 0.4);
  IngredientList b = simple_ingredients(standard_fan(1), 0.5, 4.0, 0.6);

  std::vector<IngredientList> path = connectivity_path(a, b, 40);
  REQUIRE(path.size() == 41);
  CHECK(path.front() == a);
  CHECK(path.back() == b);
  for (const IngredientList& m : path)
    CHECK(validate_ingredients(m).valid);
}

TEST_CASE("paths bridge walks that land at different T powers") {
  // The two normalize traces end with twisting labels one apart; the path
  // has to absorb that with a coupled shear jump plus a lap of fan moves,
  // all at zero extra metric cost in the limit.
  SemitoricFan std1 = standard_fan(1);
  IngredientList a = simple_ingredients(
      apply_move(std1, {MoveKind::Chop, 1, 0}), 0.4, 1.0, 0.5);
  IngredientList b = simple_ingredients(
      apply_move(apply_move(std1, {MoveKind::Chop, 2, 0}),
                 {MoveKind::ActT, 0, 1}),
      0.6, 1.5, 0.75);
  REQUIRE(a.polygon.markers[0].k == 0);
  REQUIRE(b.polygon.markers[0].k == 0);

  const CapSequence caps;
  auto worst_step = [&](int steps) {
    std::vector<IngredientList> path = connectivity_path(a, b, steps);
    REQUIRE(path.size() == static_cast<std::size_t>(steps) + 1);
    CHECK(path.front() == a);
    CHECK(path.back() == b);
    double worst = 0.0;
    for (std::size_t i = 0; i < path.size(); ++i) {
      CHECK(validate_ingredients(path[i]).valid);
      CHECK(path[i].mf() == 1);
      if (i)
        worst = std::max(worst, ingredient_distance(path[i - 1], path[i],
                                                    Density::ExpAbsX, caps));
    }
    return worst;
  };

  const double coarse = worst_step(150);
  const double fine = worst_step(1500);
  CHECK(fine < coarse / 3.0);
}

TEST_CASE("paths refuse impossible inputs") {
  IngredientList a = simple_ingredients(standard_fan(1), 0.4, 1.0, 0.5);
  IngredientList two = simple_ingredients(standard_fan(2), 0.4, 1.0, 0.5);
  CHECK_THROWS_AS(connectivity_path(a, two, 50), ModuliError);

  SemitoricFan fan = standard_fan(1);
  SemitoricFan sheared = apply_move(fan, {MoveKind::ActT, 0, 1});
  IngredientList b = simple_ingredients(sheared, 0.4, 1.0, 0.5);
  CHECK_THROWS_AS(connectivity_path(a, b, 1), ModuliError);

  IngredientList deg = a;
  deg.series[0] = series_with(6, 0.4, 1.0);
  CHECK_THROWS_AS(connectivity_path(a, deg, 50), ModuliError);
}

TEST_CASE("path samples interpolate the angle along the short arc") {
  IngredientList a = simple_ingredients(standard_fan(1), 0.3, 0.2, 0.5);
  IngredientList b = simple_ingredients(standard_fan(1), 0.3, 6.0, 0.5);
  b.polygon.polygon = translate(b.polygon.polygon, {Rat(0), Rat(1)});

  std::vector<IngredientList> path = connectivity_path(a, b, 10);
  for (const IngredientList& m : path) {
    double ang = m.series[0].at(0, 1);
    CHECK((ang <= 0.2 + 1e-9 || ang >= 6.0 - 1e-9));
    CHECK(validate_ingredients(m).valid);
  }
}

}
