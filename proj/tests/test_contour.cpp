#include <doctest.h>

#include <vector>

#include "holo/complex_util.hpp"
#include "holo/contour.hpp"
#include "holo/entire_fn.hpp"
#include "holo/errors.hpp"

using holo::Cx;
using holo::EntireFn;

TEST_CASE("single zero at the origin") {
  EntireFn f = holo::build_weierstrass({Cx(0.0)});
  CHECK(holo::count_zeros_in_disk(f, Cx(0.0), 1.0) == 1);
}

TEST_CASE("two of three zeros inside radius 1.5") {
  EntireFn f = holo::build_weierstrass({Cx(0.0), Cx(1.0), Cx(2.0)});
  CHECK(holo::count_zeros_in_disk(f, Cx(0.0), 1.5) == 2);
  CHECK(holo::count_zeros_in_disk(f, Cx(0.0), 2.5) == 3);
  CHECK(holo::count_zeros_in_disk(f, Cx(10.0), 1.0) == 0);
}

TEST_CASE("nonvanishing functions have winding zero") {
  CHECK(holo::count_zeros_in_disk(EntireFn::constant(Cx(1.0)), Cx(0.0), 3.0) == 0);
  CHECK(holo::count_zeros_in_disk(EntireFn::constant(Cx(0.0, -2.0)), Cx(1.0), 7.0) == 0);
}

TEST_CASE("multiplicity is counted") {
  EntireFn f = EntireFn::product(Cx(1.0), {Cx(0.0), Cx(0.0)});
  CHECK(holo::count_zeros_in_disk(f, Cx(0.0), 1.0) == 2);
}

TEST_CASE("zero sitting on a quadrature node is reported") {
  // first node of the default grid is center + radius
  EntireFn f = holo::build_weierstrass({Cx(1.0)});
  CHECK_THROWS_AS(holo::count_zeros_in_disk(f, Cx(0.0), 1.0),
                  holo::ContourThroughZero);
}

TEST_CASE("zero hugging the circle defeats the integer check") {
  const Cx root = (1.0 - 1e-9) * Cx(std::cos(holo::kPi / 7), std::sin(holo::kPi / 7));
  EntireFn f = holo::build_weierstrass({root});
  CHECK_THROWS_AS(holo::count_zeros_in_disk(f, Cx(0.0), 1.0),
                  holo::NonIntegerWinding);
}

TEST_CASE("sample floor is enforced") {
  EntireFn f = holo::build_weierstrass({Cx(0.0)});
  CHECK_THROWS_AS(holo::count_zeros_in_disk(f, Cx(0.0), 1.0, 32),
                  std::invalid_argument);
  CHECK(holo::count_zeros_in_disk(f, Cx(0.0), 1.0, 64) == 1);
}

TEST_CASE("wide disk over the first twenty integers") {
  std::vector<Cx> zeros;
  for (int k = 1; k <= 20; ++k) zeros.push_back(Cx(static_cast<double>(k)));
  EntireFn f = holo::build_weierstrass(zeros);
  CHECK(holo::count_zeros_in_disk(f, Cx(0.0), 25.0) == 20);
}

TEST_CASE("random zero sets are counted exactly") {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    holo::Rng rng(seed);
    const int n = static_cast<int>(rng.next_u64() % 13);
    std::vector<Cx> zeros;
    for (int i = 0; i < n; ++i) {
      Cx z;
      bool ok;
      do {
        z = rng.in_disk(Cx(0.0), 3.0);
        ok = std::abs(std::abs(z) - 3.5) > 0.2;  // keep clear of the test circle
        for (Cx w : zeros) {
          if (std::abs(z - w) < 1e-3) ok = false;
        }
      } while (!ok);
      zeros.push_back(z);
    }
    EntireFn f = holo::build_weierstrass(zeros);
    CHECK(holo::count_zeros_in_disk(f, Cx(0.0), 3.5) == n);
  }
}
