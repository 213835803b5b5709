#include "holo/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <mutex>

#include "kernels_detail.hpp"

namespace holo::kernels {

namespace detail {

void product_jet_scalar(const double* xr, const double* xi, std::size_t n,
                        const double* rr, const double* ri, std::size_t m,
                        double* pr, double* pi,
                        double* d1r, double* d1i,
                        double* d2r, double* d2i) {
  for (std::size_t j = 0; j < n; ++j) {
    double p_re = 1.0, p_im = 0.0;
    double d_re = 0.0, d_im = 0.0;
    double h_re = 0.0, h_im = 0.0;
    const double x_re = xr[j], x_im = xi[j];
    for (std::size_t i = 0; i < m; ++i) {
      const double t_re = x_re - rr[i];
      const double t_im = x_im - ri[i];
      const double nh_re = h_re * t_re - h_im * t_im + 2.0 * d_re;
      const double nh_im = h_re * t_im + h_im * t_re + 2.0 * d_im;
      const double nd_re = d_re * t_re - d_im * t_im + p_re;
      const double nd_im = d_re * t_im + d_im * t_re + p_im;
      const double np_re = p_re * t_re - p_im * t_im;
      const double np_im = p_re * t_im + p_im * t_re;
      h_re = nh_re; h_im = nh_im;
      d_re = nd_re; d_im = nd_im;
      p_re = np_re; p_im = np_im;
    }
    pr[j] = p_re; pi[j] = p_im;
    if (d1r) { d1r[j] = d_re; d1i[j] = d_im; }
    if (d2r) { d2r[j] = h_re; d2i[j] = h_im; }
  }
}

}  // namespace detail

namespace {

using JetFn = void (*)(const double*, const double*, std::size_t,
                       const double*, const double*, std::size_t,
                       double*, double*, double*, double*, double*, double*);

JetFn g_fn = nullptr;
Backend g_backend = Backend::Scalar;
std::once_flag g_init;

JetFn fn_for(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return &detail::product_jet_scalar;
#if defined(HOLO_HAVE_AVX2)
    case Backend::Avx2:
      return &detail::product_jet_avx2;
#endif
#if defined(HOLO_HAVE_NEON)
    case Backend::Neon:
      return &detail::product_jet_neon;
#endif
    default:
      return nullptr;
  }
}

bool supported(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return true;
    case Backend::Avx2:
#if defined(HOLO_HAVE_AVX2)
      return detail::avx2_usable();
#else
      return false;
#endif
    case Backend::Neon:
#if defined(HOLO_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Backend pick_default() {
  // HOLO_SIMD=scalar|avx2|neon forces a variant for testing.
  if (const char* env = std::getenv("HOLO_SIMD")) {
    if (std::strcmp(env, "scalar") == 0) return Backend::Scalar;
    if (std::strcmp(env, "avx2") == 0 && supported(Backend::Avx2)) return Backend::Avx2;
    if (std::strcmp(env, "neon") == 0 && supported(Backend::Neon)) return Backend::Neon;
  }
  if (supported(Backend::Avx2)) return Backend::Avx2;
  if (supported(Backend::Neon)) return Backend::Neon;
  return Backend::Scalar;
}

void ensure_init() {
  std::call_once(g_init, [] {
    g_backend = pick_default();
    g_fn = fn_for(g_backend);
  });
}

}  // namespace

void product_jet(const double* xr, const double* xi, std::size_t n,
                 const double* rr, const double* ri, std::size_t m,
                 double* pr, double* pi,
                 double* d1r, double* d1i,
                 double* d2r, double* d2i) {
  ensure_init();
  g_fn(xr, xi, n, rr, ri, m, pr, pi, d1r, d1i, d2r, d2i);
}

Backend active_backend() {
  ensure_init();
  return g_backend;
}

bool backend_supported(Backend b) { return supported(b); }

bool set_backend(Backend b) {
  ensure_init();
  if (!supported(b)) return false;
  g_backend = b;
  g_fn = fn_for(b);
  return true;
}

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
    case Backend::Neon: return "neon";
  }
  return "unknown";
}

}  // namespace holo::kernels
