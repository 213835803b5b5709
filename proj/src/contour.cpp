#include "holo/contour.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "holo/errors.hpp"

namespace holo {

namespace {

double winding_estimate(const EntireFn& f, Cx center, double radius, int n) {
  std::vector<Cx> nodes(n), dirs(n);
  for (int k = 0; k < n; ++k) {
    double th = 2.0 * kPi * k / n;
    dirs[k] = Cx(std::cos(th), std::sin(th));
    nodes[k] = center + radius * dirs[k];
  }
  std::vector<Cx> fv(n), dv(n);
  f.eval_many(nodes.data(), n, fv.data(), dv.data());
  Cx acc(0.0);
  for (int k = 0; k < n; ++k) {
    if (std::abs(fv[k]) < 1e-9) {
      throw ContourThroughZero("|f| = " + fmt_double(std::abs(fv[k])) +
                               " at quadrature node " + fmt_complex(nodes[k]));
    }
    acc += dv[k] / fv[k] * dirs[k];
  }
  return (radius * acc / static_cast<double>(n)).real();
}

}  // namespace

int count_zeros_in_disk(const EntireFn& f, Cx center, double radius, int samples) {
  if (!(radius > 0.0) || !is_finite(center)) {
    throw std::invalid_argument("zero count needs a finite center and positive radius");
  }
  if (samples < 64) {
    throw std::invalid_argument("zero count needs at least 64 quadrature samples");
  }

  const int cap = 1 << 17;
  int n = samples;
  double est = winding_estimate(f, center, radius, n);
  while (n < cap) {
    n *= 2;
    double next = winding_estimate(f, center, radius, n);
    double gap = std::abs(next - est);
    est = next;
    if (gap < 0.05) break;
  }

  double rounded = std::round(est);
  if (std::abs(est - rounded) > 0.1) {
    throw NonIntegerWinding("winding estimate " + fmt_double(est) +
                            " is not within 0.1 of an integer");
  }
  return static_cast<int>(rounded);
}

}  // namespace holo
