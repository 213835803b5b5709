#pragma once

#include <cstddef>

namespace holo::kernels {

// Batch evaluation of monic products over split real/imag arrays.
// These loops dominate contour quadrature and verification probe sweeps,
// so they come in a scalar reference form and SIMD variants chosen at
// runtime. All variants implement the same recurrence and must agree to
// rounding error; tests compare them on random batches.

enum class Backend { Scalar, Avx2, Neon };

// p(x_j) = prod_i (x_j - r_i) with first and second derivative.
// Points are (xr, xi), length n. Roots are (rr, ri), length m.
// d1*/d2* may be nullptr when the caller does not need that order.
void product_jet(const double* xr, const double* xi, std::size_t n,
                 const double* rr, const double* ri, std::size_t m,
                 double* pr, double* pi,
                 double* d1r, double* d1i,
                 double* d2r, double* d2i);

Backend active_backend();
bool backend_supported(Backend b);
// Switches the dispatch target. Returns false (and leaves the previous
// choice in place) when the host cannot run the requested variant.
bool set_backend(Backend b);
const char* backend_name(Backend b);

}  // namespace holo::kernels
