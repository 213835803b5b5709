#include <cmath>
#include <complex>
#include <optional>

#include "doctest.h"
#include "holo/errors.hpp"
#include "holo/surfaces.hpp"

using namespace holo;

static const double kSqrt6 = std::sqrt(6.0);

// ---------------------------------------------------------------------------
// Mobius
// ---------------------------------------------------------------------------

TEST_CASE("two point normalization: infinity and zero give the identity") {
  MobiusMap mu = mobius_two_points(ExtComplex::inf(), ExtComplex::at(Cx{0.0}));
  CHECK(mu.apply_finite(Cx{5.0, -2.0}) == Cx{5.0, -2.0});
  CHECK(mu.apply(ExtComplex::inf()).infinite);
}

TEST_CASE("two point normalization maps its arguments exactly") {
  const ExtComplex cases_p[] = {ExtComplex::at(Cx{0.0, -1.0}), ExtComplex::at(Cx{-1.0}),
                                ExtComplex::inf(), ExtComplex::at(Cx{3.0, 4.0})};
  const ExtComplex cases_q[] = {ExtComplex::at(Cx{0.0, 1.0}), ExtComplex::at(Cx{1.0}),
                                ExtComplex::at(Cx{7.0}), ExtComplex::inf()};
  for (int i = 0; i < 4; ++i) {
    MobiusMap mu = mobius_two_points(cases_p[i], cases_q[i]);
    ExtComplex img_p = mu.apply(cases_p[i]);
    ExtComplex img_q = mu.apply(cases_q[i]);
    CHECK(img_p.infinite);
    CHECK(!img_q.infinite);
    CHECK(img_q.value == Cx{0.0});
  }
}

TEST_CASE("normalization for conjugate imaginary pair is the Cayley-type quotient") {
  MobiusMap mu = mobius_two_points(ExtComplex::at(Cx{0.0, -1.0}), ExtComplex::at(Cx{0.0, 1.0}));
  // (z - i)/(z + i) at z = 1 is (1 - i)/(1 + i) = -i
  Cx w = mu.apply_finite(Cx{1.0});
  CHECK(std::abs(w - Cx{0.0, -1.0}) < 1e-15);
  MobiusMap mu2 = mobius_two_points(ExtComplex::at(Cx{-1.0}), ExtComplex::at(Cx{1.0}));
  CHECK(std::abs(mu2.apply_finite(Cx{3.0}) - Cx{0.5}) < 1e-15);
}

TEST_CASE("coincident normalization points are rejected") {
  CHECK_THROWS_AS(mobius_two_points(ExtComplex::inf(), ExtComplex::inf()), CoincidentPoints);
  CHECK_THROWS_AS(mobius_two_points(ExtComplex::at(Cx{2.0}), ExtComplex::at(Cx{2.0})),
                  CoincidentPoints);
}

// ---------------------------------------------------------------------------
// Model validation
// ---------------------------------------------------------------------------

TEST_CASE("torus modulus must avoid the degenerate values") {
  TorusModel bad1{Cx{1.0}, {}};
  TorusModel bad0{Cx{1e-12}, {}};
  TorusModel good{Cx{2.0}, {}};
  CHECK_THROWS_WITH_AS(validate(SurfaceModel{bad1}), "A must differ from 0 and 1", ConfigError);
  CHECK_THROWS_AS(validate(SurfaceModel{bad0}), ConfigError);
  CHECK_NOTHROW(validate(SurfaceModel{good}));
}

TEST_CASE("torus punctures must sit on the cubic") {
  TorusModel m{Cx{2.0}, {CurvePt{Cx{3.0}, Cx{2.0}}}};
  CHECK_THROWS_AS(validate(SurfaceModel{m}), PunctureOffCurve);
  m.punctures = {CurvePt{Cx{3.0}, Cx{kSqrt6}}, CurvePt{Cx{3.0}, Cx{kSqrt6}}};
  CHECK_THROWS_AS(validate(SurfaceModel{m}), DuplicatePuncture);
}

TEST_CASE("sphere model constraints") {
  CHECK_THROWS_AS(validate(SurfaceModel{SphereModel{}}), ConfigError);
  SphereModel three_acc;
  three_acc.accumulation = {ExtComplex::at(Cx{0.0}), ExtComplex::inf(), ExtComplex::at(Cx{1.0})};
  CHECK_THROWS_AS(validate(SurfaceModel{three_acc}), ConfigError);
  SphereModel dup;
  dup.punctures = {ExtComplex::inf(), ExtComplex::inf()};
  CHECK_THROWS_AS(validate(SurfaceModel{dup}), DuplicatePuncture);
  SphereModel ok;
  ok.punctures = {ExtComplex::inf(), ExtComplex::at(Cx{0.0}), ExtComplex::at(Cx{1.0})};
  CHECK_NOTHROW(validate(SurfaceModel{ok}));
}

TEST_CASE("punctured plane model constraints") {
  CStarModel zero{{Cx{0.0}}};
  CHECK_THROWS_AS(validate(SurfaceModel{zero}), ZeroInput);
  CStarModel dup{{Cx{2.0}, Cx{2.0}}};
  CHECK_THROWS_AS(validate(SurfaceModel{dup}), DuplicatePuncture);
  CStarModel ok{{Cx{2.0}, Cx{0.5}}};
  CHECK_NOTHROW(validate(SurfaceModel{ok}));
}

TEST_CASE("hyperelliptic model constraints") {
  HyperellipticModel few{{Cx{0.0}, Cx{1.0}, Cx{2.0}}, Cx{1.0}, {}};
  CHECK_THROWS_AS(validate(SurfaceModel{few}), ConfigError);
  HyperellipticModel dup{{Cx{0.0}, Cx{1.0}, Cx{2.0}, Cx{2.0}}, Cx{1.0}, {}};
  CHECK_THROWS_AS(validate(SurfaceModel{dup}), DuplicateZero);
  HyperellipticModel ok{{Cx{0.0}, Cx{1.0}, Cx{2.0}, Cx{3.0}}, Cx{1.0}, {}};
  CHECK_NOTHROW(validate(SurfaceModel{ok}));
}

TEST_CASE("role swapped model validates punctures against x^2 = f(y)") {
  InfiniteGenusModel m;
  m.f_roots = {Cx{0.0}, Cx{1.0}};
  // y = 3: f(3) = 6, x = sqrt(6): stored as (x, y)
  m.punctures = {CurvePt{Cx{kSqrt6}, Cx{3.0}}};
  CHECK_NOTHROW(validate(SurfaceModel{m}));
  m.punctures = {CurvePt{Cx{2.0}, Cx{3.0}}};
  CHECK_THROWS_AS(validate(SurfaceModel{m}), PunctureOffCurve);
  InfiniteGenusModel empty;
  CHECK_THROWS_AS(validate(SurfaceModel{empty}), ConfigError);
}

// ---------------------------------------------------------------------------
// Covering map onto s^2 = t^2 - 1
// ---------------------------------------------------------------------------

TEST_CASE("punctured plane parametrization lands on its curve") {
  AffineCurve c = curve_of(CStarModel{});
  CHECK(cstar_on_curve(Cx{1.0}).x == Cx{1.0});
  CHECK(cstar_on_curve(Cx{1.0}).y == Cx{0.0});
  CHECK(cstar_on_curve(Cx{-1.0}).x == Cx{-1.0});
  CurvePt q = cstar_on_curve(Cx{2.0});
  CHECK(q.x == Cx{1.25});
  CHECK(q.y == Cx{0.75});
  CHECK(std::abs(q.x * q.x - q.y * q.y - Cx{1.0}) < 1e-15);
  CHECK_THROWS_AS(cstar_on_curve(Cx{0.0}), ZeroInput);

  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    Cx t = rng.in_disk(Cx{0.0}, 4.0);
    if (std::abs(t) < 1e-6) continue;
    CHECK(c.on_curve(cstar_on_curve(t)));
  }
}

TEST_CASE("reciprocal parameters share a base point on opposite sheets") {
  Cx t{1.7, 0.4};
  CurvePt a = cstar_on_curve(t);
  CurvePt b = cstar_on_curve(Cx{1.0} / t);
  CHECK(std::abs(a.x - b.x) < 1e-15);
  CHECK(std::abs(a.y + b.y) < 1e-15);
}

// ---------------------------------------------------------------------------
// Elliptic group law
// ---------------------------------------------------------------------------

TEST_CASE("inverse pairs and 2-torsion points sum to the identity") {
  Cx A{2.0};
  std::optional<CurvePt> P{CurvePt{Cx{3.0}, Cx{kSqrt6}}};
  std::optional<CurvePt> negP{CurvePt{Cx{3.0}, Cx{-kSqrt6}}};
  CHECK(!elliptic_add(A, P, negP).has_value());
  std::optional<CurvePt> two_torsion{CurvePt{Cx{0.0}, Cx{0.0}}};
  CHECK(!elliptic_add(A, two_torsion, two_torsion).has_value());
  auto same = elliptic_add(A, P, std::nullopt);
  REQUIRE(same.has_value());
  CHECK(same->x == P->x);
  CHECK(same->y == P->y);
}

TEST_CASE("doubling oracle: x coordinate of 2(3, sqrt 6) is 49/24") {
  // lambda = p'(3)/(2 sqrt 6) = 11/(2 sqrt 6); x3 = lambda^2 + 3 - 6 = 49/24
  Cx A{2.0};
  std::optional<CurvePt> P{CurvePt{Cx{3.0}, Cx{kSqrt6}}};
  auto D = elliptic_add(A, P, P);
  REQUIRE(D.has_value());
  CHECK(std::abs(D->x - Cx{49.0 / 24.0}) < 1e-12);
  // y3 = lambda (3 - 49/24) - sqrt 6 = -35/(48 sqrt 6)
  CHECK(std::abs(D->y - Cx{-35.0 / (48.0 * kSqrt6)}) < 1e-12);
  // result stays on the cubic
  Cx p = D->x * (D->x - Cx{1.0}) * (D->x - A);
  CHECK(std::abs(D->y * D->y - p) < 1e-12);
}

TEST_CASE("group law is associative on random triples") {
  Cx A{2.0};
  AffineCurve c = curve_of(TorusModel{A, {}});
  Rng rng(42);
  int done = 0;
  while (done < 20) {
    Cx x1 = rng.in_disk(Cx{0.0}, 5.0), x2 = rng.in_disk(Cx{0.0}, 5.0),
       x3 = rng.in_disk(Cx{0.0}, 5.0);
    auto f1 = c.fiber(x1), f2 = c.fiber(x2), f3 = c.fiber(x3);
    if (f1.size() < 2 || f2.size() < 2 || f3.size() < 2) continue;
    std::optional<CurvePt> P{f1[0]}, Q{f2[1]}, R{f3[0]};
    auto lhs = elliptic_add(A, elliptic_add(A, P, Q), R);
    auto rhs = elliptic_add(A, P, elliptic_add(A, Q, R));
    REQUIRE(lhs.has_value() == rhs.has_value());
    if (lhs) {
      CHECK(std::abs(lhs->x - rhs->x) < 1e-8);
      CHECK(std::abs(lhs->y - rhs->y) < 1e-8);
      Cx p = lhs->x * (lhs->x - Cx{1.0}) * (lhs->x - A);
      CHECK(std::abs(lhs->y * lhs->y - p) <= 1e-8 * (1.0 + std::abs(p)));
    }
    ++done;
  }
}

TEST_CASE("translation sends the chosen point to the identity and transports punctures") {
  Cx A{2.0};
  AffineCurve c = curve_of(TorusModel{A, {}});
  CurvePt p0 = c.fiber(Cx{5.0, 1.0})[0];
  TorusModel m{A, {CurvePt{Cx{3.0}, Cx{kSqrt6}}, CurvePt{Cx{0.0}, Cx{0.0}}}};
  auto [moved, tau] = elliptic_translate(m, p0);
  CHECK(!tau.apply(std::optional<CurvePt>{p0}).has_value());
  // two old punctures survive, the old identity appears at -p0
  REQUIRE(moved.punctures.size() == 3);
  CHECK(std::abs(moved.punctures.back().x - p0.x) < 1e-12);
  CHECK(std::abs(moved.punctures.back().y + p0.y) < 1e-12);
  for (const CurvePt& q : moved.punctures) CHECK(c.residual(q) < 1e-8);
  CHECK_NOTHROW(validate(SurfaceModel{moved}));
}

TEST_CASE("translating by a puncture absorbs it into the removed identity") {
  Cx A{2.0};
  CurvePt p0{Cx{3.0}, Cx{kSqrt6}};
  TorusModel m{A, {p0, CurvePt{Cx{0.0}, Cx{0.0}}}};
  auto [moved, tau] = elliptic_translate(m, p0);
  REQUIRE(moved.punctures.size() == 2);  // (0,0) image and -p0
  CHECK(std::abs(moved.punctures.back().y + kSqrt6) < 1e-12);
}

TEST_CASE("off-curve translation base point is rejected") {
  TorusModel m{Cx{2.0}, {}};
  CHECK_THROWS_AS(elliptic_translate(m, CurvePt{Cx{3.0}, Cx{1.0}}), PointOffCurve);
}

// ---------------------------------------------------------------------------
// Branch point moves
// ---------------------------------------------------------------------------

TEST_CASE("genus bookkeeping") {
  CHECK(hyperelliptic_genus(4) == 1);
  CHECK(hyperelliptic_genus(5) == 2);
  CHECK(hyperelliptic_genus(6) == 2);
  CHECK(hyperelliptic_genus(7) == 3);
  CHECK(weierstrass_point_count(6) == 6);
  CHECK(weierstrass_point_count(5) == 6);
  CHECK(weierstrass_point_count(4) == 4);
  // 2g + 2 consistency
  for (std::size_t n = 4; n <= 9; ++n)
    CHECK(weierstrass_point_count(n) == 2 * hyperelliptic_genus(n) + 2);
}

TEST_CASE("moving a branch point of an even model drops the degree by one") {
  // y^2 = x(x-1)(x-2)(x-3), move 0: v^2 = (1-u)(1-2u)(1-3u)
  HyperellipticModel m{{Cx{0.0}, Cx{1.0}, Cx{2.0}, Cx{3.0}}, Cx{1.0}, {}};
  BranchMove mv = move_branch_point_to_infinity(m, Cx{0.0});
  REQUIRE(mv.model.branch.size() == 3);
  CHECK(mv.half_power == 2);

  EntireFn ft = EntireFn::product(mv.model.lead, mv.model.branch);
  // (1-u)(1-2u)(1-3u) = 1 - 6u + 11u^2 - 6u^3
  const double expect[] = {1.0, -6.0, 11.0, -6.0};
  auto coeffs = ft.coefficients();
  REQUIRE(coeffs.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(std::abs(coeffs[i] - Cx{expect[i]}) < 1e-12);

  // branch images 1/(e_j - e_k)
  CHECK(std::abs(mv.model.branch[0] - Cx{1.0}) < 1e-15);
  CHECK(std::abs(mv.model.branch[1] - Cx{0.5}) < 1e-15);
  CHECK(std::abs(mv.model.branch[2] - Cx{1.0 / 3.0}) < 1e-15);
}

TEST_CASE("transported punctures stay on the moved curve") {
  HyperellipticModel m{{Cx{0.0}, Cx{1.0}, Cx{2.0}, Cx{3.0}}, Cx{1.0}, {}};
  double s24 = std::sqrt(24.0);
  m.punctures = {CurvePt{Cx{4.0}, Cx{s24}}};
  BranchMove mv = move_branch_point_to_infinity(m, Cx{0.0});
  REQUIRE(mv.model.punctures.size() == 1);
  CHECK(std::abs(mv.model.punctures[0].x - Cx{0.25}) < 1e-15);
  CHECK(std::abs(mv.model.punctures[0].y - Cx{s24 / 16.0}) < 1e-14);
  AffineCurve moved = curve_of(mv.model);
  CHECK(moved.residual(mv.model.punctures[0]) < 1e-9);
}

TEST_CASE("odd models keep their degree and gain zero as a branch point") {
  HyperellipticModel m{{Cx{0.0}, Cx{1.0}, Cx{2.0}, Cx{3.0}, Cx{4.0}}, Cx{1.0}, {}};
  BranchMove mv = move_branch_point_to_infinity(m, Cx{1.0});
  REQUIRE(mv.model.branch.size() == 5);
  CHECK(mv.model.branch[0] == Cx{0.0});
  CHECK(mv.half_power == 3);
  // random puncture transport keeps residual
  AffineCurve orig = curve_of(m);
  AffineCurve moved = curve_of(mv.model);
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    Cx x = rng.in_disk(Cx{0.0}, 8.0);
    if (std::abs(x - Cx{1.0}) < 1e-3) continue;
    auto fib = orig.fiber(x);
    if (fib.size() < 2) continue;
    CurvePt img = mv.transport(fib[0]);
    CHECK(moved.residual(img) <= 1e-9 * (1.0 + std::abs(moved.p().eval(img.x))));
  }
}

TEST_CASE("moving a non branch point is rejected") {
  HyperellipticModel m{{Cx{0.0}, Cx{1.0}, Cx{2.0}, Cx{3.0}}, Cx{1.0}, {}};
  CHECK_THROWS_AS(move_branch_point_to_infinity(m, Cx{7.0}), NotABranchPoint);
}
