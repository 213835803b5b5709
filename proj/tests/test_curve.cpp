#include <cmath>
#include <complex>

#include "doctest.h"
#include "holo/curve.hpp"
#include "holo/errors.hpp"

using holo::AffineCurve;
using holo::classify_fibers;
using holo::CurvePt;
using holo::Cx;
using holo::EntireFn;
using holo::FiberKind;

namespace {

AffineCurve torus_a2() {
  return AffineCurve(EntireFn::product(Cx{1.0}, {Cx{0.0}, Cx{1.0}, Cx{2.0}}));
}

const double kSqrt6 = std::sqrt(6.0);

}  // namespace

TEST_CASE("fiber over a regular point returns the conjugate pair") {
  AffineCurve c = torus_a2();
  auto fib = c.fiber(Cx{3.0});
  REQUIRE(fib.size() == 2);
  // p(3) = 3*2*1 = 6, principal root first
  CHECK(fib[0].y.real() == doctest::Approx(2.449489743).epsilon(1e-9));
  CHECK(fib[0].y.imag() == doctest::Approx(0.0));
  CHECK(fib[1].y == -fib[0].y);
  CHECK(fib[0].x == Cx{3.0});
  CHECK(c.on_curve(fib[0]));
  CHECK(c.on_curve(fib[1]));
}

TEST_CASE("fiber collapses at branch points") {
  AffineCurve c = torus_a2();
  for (double r : {0.0, 1.0, 2.0}) {
    auto fib = c.fiber(Cx{r});
    REQUIRE(fib.size() == 1);
    CHECK(fib[0].y == Cx{0.0});
    CHECK(c.is_ramified_at(Cx{r}));
  }
  CHECK(!c.is_ramified_at(Cx{3.0}));
}

TEST_CASE("ramification threshold scales with the coefficient size") {
  // p = 1e8 (x - 1e4)(x + 1e4): coefficients reach 1e16
  AffineCurve c(EntireFn::product(Cx{1e8}, {Cx{1e4}, Cx{-1e4}}));
  CHECK(c.ramification_threshold() > 1e-12);
  CHECK(c.is_ramified_at(Cx{1e4}));
  CHECK(c.fiber(Cx{2e4}).size() == 2);
}

TEST_CASE("residual and on_curve agree with the defining equation") {
  AffineCurve c = torus_a2();
  CurvePt good{Cx{3.0}, Cx{kSqrt6}};
  CHECK(c.residual(good) < 1e-12);
  CHECK(c.on_curve(good));
  CurvePt bad{Cx{3.0}, Cx{kSqrt6 + 1e-3}};
  CHECK(!c.on_curve(bad));
}

TEST_CASE("sheet_near tracks the reference sign") {
  AffineCurve c = torus_a2();
  Cx plus = c.sheet_near(Cx{3.0}, Cx{2.0});
  Cx minus = c.sheet_near(Cx{3.0}, Cx{-2.0});
  CHECK(plus.real() > 0.0);
  CHECK(minus == -plus);
  // continuation along a short step keeps the branch
  Cx stay = c.sheet_near(Cx{3.01}, plus);
  CHECK(std::abs(stay - plus) < 0.1);
}

TEST_CASE("half fiber keeps the conjugate point and its second coordinate") {
  AffineCurve c = torus_a2();
  auto cols = classify_fibers(c, {CurvePt{Cx{3.0}, Cx{kSqrt6}}});
  REQUIRE(cols.size() == 1);
  CHECK(cols[0].kind == FiberKind::Half);
  REQUIRE(cols[0].kept.has_value());
  CHECK(cols[0].kept->y.real() == doctest::Approx(-kSqrt6).epsilon(1e-12));
  CHECK(cols[0].y_target == cols[0].kept->y);
  CHECK(cols[0].removed.size() == 1);
}

TEST_CASE("full fiber targets sit at distance one past the fiber values") {
  AffineCurve c = torus_a2();
  auto cols = classify_fibers(
      c, {CurvePt{Cx{3.0}, Cx{kSqrt6}}, CurvePt{Cx{3.0}, Cx{-kSqrt6}}});
  REQUIRE(cols.size() == 1);
  CHECK(cols[0].kind == FiberKind::Full);
  CHECK(!cols[0].kept.has_value());
  CHECK(cols[0].y_target.real() == doctest::Approx(1.0 + kSqrt6).epsilon(1e-12));
  CHECK(cols[0].y_target.imag() == 0.0);
}

TEST_CASE("punctured ramification point is a full fiber with target one") {
  AffineCurve c = torus_a2();
  auto cols = classify_fibers(c, {CurvePt{Cx{0.0}, Cx{0.0}}});
  REQUIRE(cols.size() == 1);
  CHECK(cols[0].kind == FiberKind::Full);
  CHECK(cols[0].y_target == Cx{1.0});
}

TEST_CASE("classification groups nearby base coordinates and keeps puncture order") {
  AffineCurve c = torus_a2();
  auto f3 = c.fiber(Cx{3.0});
  auto f5 = c.fiber(Cx{5.0});
  auto cols = classify_fibers(c, {CurvePt{Cx{5.0}, f5[0].y},
                                  CurvePt{Cx{3.0}, f3[0].y},
                                  CurvePt{Cx{3.0 + 1e-12}, f3[1].y}});
  REQUIRE(cols.size() == 2);
  CHECK(cols[0].x == Cx{5.0});
  CHECK(cols[0].kind == FiberKind::Half);
  CHECK(cols[1].kind == FiberKind::Full);
  CHECK(cols[1].removed.size() == 2);
}

TEST_CASE("classification rejects bad punctures") {
  AffineCurve c = torus_a2();
  CHECK_THROWS_AS(classify_fibers(c, {CurvePt{Cx{3.0}, Cx{1.0}}}),
                  holo::PunctureOffCurve);
  CHECK_THROWS_AS(classify_fibers(c, {CurvePt{Cx{3.0}, Cx{kSqrt6}},
                                      CurvePt{Cx{3.0}, Cx{kSqrt6 + 1e-12}}}),
                  holo::DuplicatePuncture);
}

TEST_CASE("regular fibers always clear the submersion bound") {
  // The ramification cut at 1e-12 forces |y| > 1e-6 on any surviving fiber,
  // so the branch-locus rejection inside classification stays defensive.
  AffineCurve c = torus_a2();
  for (double d : {1e-15, 1e-13, 1e-11, 1e-9, 1e-6, 1e-3}) {
    auto fib = c.fiber(Cx{1.0 + d});
    if (fib.size() == 1) continue;
    for (const CurvePt& f : fib) CHECK(std::abs(f.y) > 1e-9);
    auto cols = classify_fibers(c, {fib[0]});
    CHECK(cols[0].kind == FiberKind::Half);
  }
}

TEST_CASE("classification covers every puncture exactly once") {
  AffineCurve c = torus_a2();
  holo::Rng rng(777);
  std::vector<CurvePt> punctures;
  for (int i = 0; i < 12; ++i) {
    Cx x = rng.in_disk(Cx{0.0}, 6.0);
    auto fib = c.fiber(x);
    if (fib.size() < 2) continue;
    punctures.push_back(fib[i % 2]);
  }
  auto cols = classify_fibers(c, punctures);
  std::size_t total = 0;
  for (const auto& col : cols) {
    total += col.removed.size();
    if (col.kind == FiberKind::Full) {
      for (const CurvePt& f : c.fiber(col.x))
        CHECK(std::abs(col.y_target - f.y) >= 1.0 - 1e-12);
    } else {
      CHECK(col.y_target == col.kept->y);
    }
  }
  CHECK(total == punctures.size());
}
