// NEON variant of the product jet recurrence, two points per lane group.
// Compiled only for aarch64 targets; NEON is baseline there, so no runtime
// CPU probe is needed.

#include <arm_neon.h>

#include "kernels_detail.hpp"

namespace holo::kernels::detail {

void product_jet_neon(const double* xr, const double* xi, std::size_t n,
                      const double* rr, const double* ri, std::size_t m,
                      double* pr, double* pi,
                      double* d1r, double* d1i,
                      double* d2r, double* d2i) {
  const std::size_t vec_n = n - (n % 2);
  for (std::size_t j = 0; j < vec_n; j += 2) {
    const float64x2_t x_re = vld1q_f64(xr + j);
    const float64x2_t x_im = vld1q_f64(xi + j);
    float64x2_t p_re = vdupq_n_f64(1.0), p_im = vdupq_n_f64(0.0);
    float64x2_t d_re = vdupq_n_f64(0.0), d_im = vdupq_n_f64(0.0);
    float64x2_t h_re = vdupq_n_f64(0.0), h_im = vdupq_n_f64(0.0);
    for (std::size_t i = 0; i < m; ++i) {
      const float64x2_t t_re = vsubq_f64(x_re, vdupq_n_f64(rr[i]));
      const float64x2_t t_im = vsubq_f64(x_im, vdupq_n_f64(ri[i]));
      float64x2_t nh_re = vfmaq_f64(vnegq_f64(vmulq_f64(h_im, t_im)), h_re, t_re);
      nh_re = vaddq_f64(nh_re, vaddq_f64(d_re, d_re));
      float64x2_t nh_im = vfmaq_f64(vmulq_f64(h_im, t_re), h_re, t_im);
      nh_im = vaddq_f64(nh_im, vaddq_f64(d_im, d_im));
      float64x2_t nd_re = vfmaq_f64(vnegq_f64(vmulq_f64(d_im, t_im)), d_re, t_re);
      nd_re = vaddq_f64(nd_re, p_re);
      float64x2_t nd_im = vfmaq_f64(vmulq_f64(d_im, t_re), d_re, t_im);
      nd_im = vaddq_f64(nd_im, p_im);
      const float64x2_t np_re =
          vfmaq_f64(vnegq_f64(vmulq_f64(p_im, t_im)), p_re, t_re);
      const float64x2_t np_im = vfmaq_f64(vmulq_f64(p_im, t_re), p_re, t_im);
      h_re = nh_re; h_im = nh_im;
      d_re = nd_re; d_im = nd_im;
      p_re = np_re; p_im = np_im;
    }
    vst1q_f64(pr + j, p_re);
    vst1q_f64(pi + j, p_im);
    if (d1r) {
      vst1q_f64(d1r + j, d_re);
      vst1q_f64(d1i + j, d_im);
    }
    if (d2r) {
      vst1q_f64(d2r + j, h_re);
      vst1q_f64(d2i + j, h_im);
    }
  }
  if (vec_n < n) {
    product_jet_scalar(xr + vec_n, xi + vec_n, n - vec_n, rr, ri, m,
                       pr + vec_n, pi + vec_n,
                       d1r ? d1r + vec_n : nullptr, d1i ? d1i + vec_n : nullptr,
                       d2r ? d2r + vec_n : nullptr, d2i ? d2i + vec_n : nullptr);
  }
}

}  // namespace holo::kernels::detail
