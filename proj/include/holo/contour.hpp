#pragma once

#include "holo/complex_util.hpp"
#include "holo/entire_fn.hpp"

namespace holo {

struct Disk {
  Cx center;
  double radius;
};

/// Number of zeros of f inside the disk, counted with multiplicity through
/// the winding number of f along the boundary circle:
///
///   (1 / 2 pi i) * integral of f'/f
///
/// evaluated with the trapezoidal rule on equispaced nodes, which converges
/// spectrally for analytic integrands. The node count starts at `samples`
/// (at least 64) and doubles until two successive estimates differ by less
/// than 0.05. The final estimate must land within 0.1 of an integer.
///
/// Throws ContourThroughZero when |f| < 1e-9 at a quadrature node and
/// NonIntegerWinding when the estimate does not settle near an integer.
/// The caller is expected to keep zeros at least 1e-6 * radius away from
/// the circle, nudging the radius otherwise.
int count_zeros_in_disk(const EntireFn& f, Cx center, double radius,
                        int samples = 256);

}  // namespace holo
