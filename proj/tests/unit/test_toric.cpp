#include "doctest.h"

#include <random>

#include "core/group.hpp"
#include "core/toric.hpp"
#include "support/generators.hpp"

using namespace semitoric;

namespace {

const ToricFan kTriangle{{{1, 0}, {0, 1}, {-1, -1}}};
const ToricFan kSquare{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};

}  // namespace

TEST_SUITE("toric") {

TEST_CASE("fan and word views agree on the triangle") {
  CHECK(fan_to_word(kTriangle) == FanWord{-1, -1, -1});
  CHECK(word_to_fan({-1, -1, -1}) == kTriangle);
  CHECK(fan_to_word(kSquare) == FanWord{0, 0, 0, 0});
}

TEST_CASE("word and fan round trips") {
  for (const ToricFan& f :
       {kTriangle, kSquare, model_fan({ModelKind::Hirzebruch, 3})}) {
    CHECK(word_to_fan(fan_to_word(f), f.rays[0], f.rays[1]) == f);
  }
  for (const FanWord& a :
       {FanWord{-1, -1, -1}, FanWord{0, 2, 0, -2}, FanWord{1, 1, 0, 0, 1}}) {
    CHECK(fan_to_word(word_to_fan(a)) == a);
  }
}

TEST_CASE("toric validation") {
  CHECK(validate_toric(kTriangle).valid);
  CHECK(validate_toric(kSquare).valid);

  ToricFan reversed{{{-1, -1}, {0, 1}, {1, 0}}};
  CHECK_FALSE(validate_toric(reversed).valid);

  CHECK_FALSE(validate_toric(ToricFan{{{1, 0}, {0, 1}}}).valid);
  CHECK_FALSE(validate_toric(word_to_fan({0, 0, 0})).valid);

  ValidationReport fig = validate_toric(word_to_fan({-1, -1, -2, -1, -1, 0}));
  CHECK_FALSE(fig.valid);
}

TEST_CASE("ray crossing counts match weights for closed words") {
  CHECK(geometric_winding(kSquare.rays) == 1);
  CHECK(geometric_winding(kTriangle.rays) == 1);

  ToricFan fig = word_to_fan({-1, -1, -2, -1, -1, 0});
  CHECK(geometric_winding(fig.rays) == 2);
  CHECK(float_winding(fig.rays) == doctest::Approx(2.0).epsilon(1e-9));

  ToricFan pinched{{{1, 0}, {0, 1}, {1, 1}, {0, -1}}};
  CHECK_THROWS_AS(geometric_winding(pinched.rays), FanError);
}

TEST_CASE("corner chop acts on words as claimed") {
  for (const ToricFan& f : {kTriangle, kSquare}) {
    FanWord a = fan_to_word(f);
    int d = static_cast<int>(a.size());
    for (int i = 0; i < d; ++i) {
      ToricFan g = corner_chop(f, i);
      CHECK(validate_toric(g).valid);
      FanWord b = a;
      int prev = (i + d - 1) % d;
      b[prev] += 1;
      b[i] += 1;
      b.insert(b.begin() + i, 1);
      CHECK(fan_to_word(g) == b);
      CHECK(reverse_corner_chop(g, i + 1) == f);
    }
  }
}

TEST_CASE("reverse chop demands an actual sum ray") {
  CHECK_THROWS_AS(reverse_corner_chop(kSquare, 1), FanError);
  CHECK_THROWS_AS(reverse_corner_chop(kTriangle, 1), FanError);
}

TEST_CASE("smallest reducible index is found") {
  ToricFan chopped = corner_chop(kSquare, 0);
  auto idx = find_reducible(chopped);
  REQUIRE(idx.has_value());
  CHECK(*idx == 0);

  CHECK_FALSE(find_reducible(kSquare).has_value());
  CHECK_FALSE(find_reducible(kTriangle).has_value());
  CHECK_FALSE(find_reducible(model_fan({ModelKind::Hirzebruch, 2})).has_value());
}

TEST_CASE("minimal models classify and rebuild") {
  CHECK(classify_minimal(kTriangle) ==
        std::optional<MinimalModel>{{ModelKind::Triangle, 0}});
  for (int k = 1; k <= 5; ++k) {
    MinimalModel m{ModelKind::Hirzebruch, k};
    CHECK(classify_minimal(model_fan(m)) == std::optional<MinimalModel>{m});
  }
  MinimalModel rect{ModelKind::Rectangle, 0};
  CHECK(classify_minimal(model_fan(rect)) == std::optional<MinimalModel>{rect});
  CHECK_FALSE(classify_minimal(corner_chop(kSquare, 0)).has_value());

  CHECK(to_string(MinimalModel{ModelKind::Triangle, 0}) == "triangle");
  CHECK(to_string(MinimalModel{ModelKind::Rectangle, 0}) == "rectangle");
  CHECK(to_string(MinimalModel{ModelKind::Hirzebruch, 1}) == "hirzebruch(1)");
}

TEST_CASE("reduction strips a single chop") {
  ToricFan chopped = corner_chop(kSquare, 0);
  ReduceResult r = fulton_reduce(chopped);
  CHECK(r.trace.size() == 1);
  CHECK(r.model.kind == ModelKind::Hirzebruch);
  CHECK(r.model.k == 1);
  CHECK(classify_minimal(r.reduced) == std::optional<MinimalModel>{r.model});
  CHECK(replay_reduce_trace(r.reduced, r.trace) == chopped);
}

TEST_CASE("reduction fixes minimal models") {
  for (const ToricFan& f :
       {kTriangle, model_fan({ModelKind::Rectangle, 0}),
        model_fan({ModelKind::Hirzebruch, 4})}) {
    ReduceResult r = fulton_reduce(f);
    CHECK(r.trace.empty());
    CHECK(r.reduced == f);
  }
}

TEST_CASE("random chop stacks reduce with exact replay") {
  std::mt19937 rng(91u);
  for (int iter = 0; iter < 50; ++iter) {
    ToricFan f = support::random_chopped_model(rng, 6, 4);
    REQUIRE(validate_toric(f).valid);
    ReduceResult r = fulton_reduce(f);
    CHECK(validate_toric(r.reduced).valid);
    CHECK(classify_minimal(r.reduced) == std::optional<MinimalModel>{r.model});
    CHECK(replay_reduce_trace(r.reduced, r.trace) == f);
    CHECK(equivalent_fans(r.reduced, r.reduced));
  }
}

TEST_CASE("cycle equivalence ignores rotation and basis") {
  ToricFan rotated{{{0, 1}, {-1, 0}, {0, -1}, {1, 0}}};
  CHECK(equivalent_fans(kSquare, rotated));
  CHECK_FALSE(equivalent_fans(kSquare, kTriangle));
  CHECK_FALSE(equivalent_fans(model_fan({ModelKind::Hirzebruch, 1}),
                              model_fan({ModelKind::Hirzebruch, 2})));

  ToricFan sheared{{{1, 0}, {1, 1}, {-2, -1}}};
  REQUIRE(validate_toric(sheared).valid);
  CHECK(equivalent_fans(kTriangle, sheared));

  CHECK(canonical_cycle(kSquare) == canonical_cycle(rotated));
}

}
