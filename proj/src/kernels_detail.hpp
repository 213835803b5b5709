#pragma once

#include <cstddef>

namespace holo::kernels::detail {

// Shared recurrence, one factor at a time with t = x - r:
//   h <- h*t + 2*d,  d <- d*t + p,  p <- p*t
// starting from p = 1, d = h = 0. After all factors p is the product and
// d, h are its first and second derivatives.

void product_jet_scalar(const double* xr, const double* xi, std::size_t n,
                        const double* rr, const double* ri, std::size_t m,
                        double* pr, double* pi,
                        double* d1r, double* d1i,
                        double* d2r, double* d2i);

#if defined(HOLO_HAVE_AVX2)
void product_jet_avx2(const double* xr, const double* xi, std::size_t n,
                      const double* rr, const double* ri, std::size_t m,
                      double* pr, double* pi,
                      double* d1r, double* d1i,
                      double* d2r, double* d2i);
bool avx2_usable();
#endif

#if defined(HOLO_HAVE_NEON)
void product_jet_neon(const double* xr, const double* xi, std::size_t n,
                      const double* rr, const double* ri, std::size_t m,
                      double* pr, double* pi,
                      double* d1r, double* d1i,
                      double* d2r, double* d2i);
#endif

}  // namespace holo::kernels::detail
