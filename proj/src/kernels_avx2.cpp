// AVX2 + FMA variant of the product jet recurrence, four points per lane
// group. This translation unit is the only one compiled with -mavx2 -mfma;
// callers reach it through the dispatch table after a runtime CPU check.

#include <immintrin.h>

#include "kernels_detail.hpp"

namespace holo::kernels::detail {

bool avx2_usable() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

void product_jet_avx2(const double* xr, const double* xi, std::size_t n,
                      const double* rr, const double* ri, std::size_t m,
                      double* pr, double* pi,
                      double* d1r, double* d1i,
                      double* d2r, double* d2i) {
  const std::size_t vec_n = n - (n % 4);
  for (std::size_t j = 0; j < vec_n; j += 4) {
    const __m256d x_re = _mm256_loadu_pd(xr + j);
    const __m256d x_im = _mm256_loadu_pd(xi + j);
    __m256d p_re = _mm256_set1_pd(1.0), p_im = _mm256_setzero_pd();
    __m256d d_re = _mm256_setzero_pd(), d_im = _mm256_setzero_pd();
    __m256d h_re = _mm256_setzero_pd(), h_im = _mm256_setzero_pd();
    for (std::size_t i = 0; i < m; ++i) {
      const __m256d t_re = _mm256_sub_pd(x_re, _mm256_set1_pd(rr[i]));
      const __m256d t_im = _mm256_sub_pd(x_im, _mm256_set1_pd(ri[i]));
      const __m256d nh_re = _mm256_add_pd(
          _mm256_fmsub_pd(h_re, t_re, _mm256_mul_pd(h_im, t_im)),
          _mm256_add_pd(d_re, d_re));
      const __m256d nh_im = _mm256_add_pd(
          _mm256_fmadd_pd(h_re, t_im, _mm256_mul_pd(h_im, t_re)),
          _mm256_add_pd(d_im, d_im));
      const __m256d nd_re = _mm256_add_pd(
          _mm256_fmsub_pd(d_re, t_re, _mm256_mul_pd(d_im, t_im)), p_re);
      const __m256d nd_im = _mm256_add_pd(
          _mm256_fmadd_pd(d_re, t_im, _mm256_mul_pd(d_im, t_re)), p_im);
      const __m256d np_re = _mm256_fmsub_pd(p_re, t_re, _mm256_mul_pd(p_im, t_im));
      const __m256d np_im = _mm256_fmadd_pd(p_re, t_im, _mm256_mul_pd(p_im, t_re));
      h_re = nh_re; h_im = nh_im;
      d_re = nd_re; d_im = nd_im;
      p_re = np_re; p_im = np_im;
    }
    _mm256_storeu_pd(pr + j, p_re);
    _mm256_storeu_pd(pi + j, p_im);
    if (d1r) {
      _mm256_storeu_pd(d1r + j, d_re);
      _mm256_storeu_pd(d1i + j, d_im);
    }
    if (d2r) {
      _mm256_storeu_pd(d2r + j, h_re);
      _mm256_storeu_pd(d2i + j, h_im);
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
