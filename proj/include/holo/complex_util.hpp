#pragma once

#include <charconv>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>

namespace holo {

using Cx = std::complex<double>;

inline bool is_finite(double v) { return std::isfinite(v); }
inline bool is_finite(Cx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Shortest decimal string that round-trips to the same double.
inline std::string fmt_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline std::string fmt_complex(Cx z) {
  return "(" + fmt_double(z.real()) + "," + fmt_double(z.imag()) + ")";
}

// Deterministic RNG with a fixed algorithm so that seeded runs produce
// identical streams on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  // uniform over the closed disk |z - center| <= radius
  Cx in_disk(Cx center, double radius) {
    double r = radius * std::sqrt(unit());
    double t = 2.0 * 3.14159265358979323846 * unit();
    return center + Cx(r * std::cos(t), r * std::sin(t));
  }

  // uniform direction on the unit circle
  Cx on_circle() {
    double t = 2.0 * 3.14159265358979323846 * unit();
    return Cx(std::cos(t), std::sin(t));
  }

 private:
  std::uint64_t state_;
};

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace holo
