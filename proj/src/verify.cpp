#include "holo/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "holo/errors.hpp"

namespace holo {

namespace {

constexpr const char* kCheckOrder[6] = {"interpolation", "zero_audit", "injectivity",
                                        "immersion",     "properness", "curve_residual"};

double euclid(const CurvePt& p, const CurvePt& q) {
  double dx = std::abs(p.x - q.x), dy = std::abs(p.y - q.y);
  return std::sqrt(dx * dx + dy * dy);
}

double norm2(const std::array<Cx, 2>& v) {
  return std::sqrt(std::norm(v[0]) + std::norm(v[1]));
}

/// Random domain points with the probe hygiene all sampled checks share:
/// bases at least 1e-2 from branch points, points at least 1e-3 from every
/// puncture.
struct ProbeGen {
  const EmbeddingArtifact& art;
  Rng& rng;
  double R;
  const AffineCurve* curve;

  ProbeGen(const EmbeddingArtifact& a, Rng& r)
      : art(a), rng(r), R(a.region_radius()), curve(a.curve()) {}

  bool base_ok(Cx x) const {
    if (curve)
      for (const Cx& root : curve->p().roots())
        if (std::abs(x - root) < 1e-2) return false;
    return true;
  }

  bool point_ok(const CurvePt& pt) const {
    for (const CurvePt& q : art.punctures)
      if (euclid(pt, q) < 1e-3) return false;
    return true;
  }

  Cx draw_base() {
    for (int tries = 0; tries < 100000; ++tries) {
      Cx x = rng.in_disk(Cx{0.0}, R);
      if (base_ok(x)) return x;
    }
    throw Error("probe region exhausted");
  }

  CurvePt draw() {
    for (int tries = 0; tries < 100000; ++tries) {
      Cx x = rng.in_disk(Cx{0.0}, R);
      if (!base_ok(x)) continue;
      CurvePt pt{x, Cx{0.0}};
      if (curve) {
        auto fib = curve->fiber(x);
        if (fib.size() < 2) continue;
        pt = rng.unit() < 0.5 ? fib[0] : fib[1];
      }
      if (point_ok(pt)) return pt;
    }
    throw Error("probe region exhausted");
  }
};

double branch_distance(const EmbeddingArtifact& art, Cx x) {
  const AffineCurve* curve = art.curve();
  if (!curve) return std::numeric_limits<double>::infinity();
  double d = std::numeric_limits<double>::infinity();
  for (const Cx& root : curve->p().roots()) d = std::min(d, std::abs(x - root));
  return d;
}

// ---------------------------------------------------------------------------
// Individual checks
// ---------------------------------------------------------------------------

CheckResult check_interpolation(const EmbeddingArtifact& art, const VerifyOptions& opt) {
  CheckResult r{"interpolation", false, 0.0, 1e-9, art.columns.size(), opt.seed};
  r.value = interpolation_error(art);
  r.passed = r.value < r.threshold;
  return r;
}

CheckResult check_zero_audit(const EmbeddingArtifact& art, const VerifyOptions& opt) {
  std::vector<Disk> disks = default_audit_disks(art);
  CheckResult r{"zero_audit", false, 0.0, 0.5, disks.size(), opt.seed};
  r.value = zero_audit_mismatch(art, disks);
  r.passed = r.value < r.threshold;
  return r;
}

CheckResult check_injectivity(const EmbeddingArtifact& art, const VerifyOptions& opt) {
  Rng rng(opt.seed + 11);
  ProbeGen gen(art, rng);
  // Threshold is a separation certificate: ~500 eps of relative margin.
  // Sheet pairs far from the pole set can honestly separate no better than
  // |y| / |a(x)|, which high-degree interpolants push toward 1e-10.
  CheckResult r{"injectivity", false, 0.0, 1e-13, opt.probes, opt.seed};

  double min_margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < opt.probes; ++i) {
    CurvePt p{}, q{};
    bool drawn = false;
    if (art.is_curve() && i % 2 == 1) {
      // Deliberate same-base pair on opposite sheets.
      for (int tries = 0; tries < 1000 && !drawn; ++tries) {
        Cx x = gen.draw_base();
        auto fib = art.curve()->fiber(x);
        if (fib.size() < 2) continue;
        if (!gen.point_ok(fib[0]) || !gen.point_ok(fib[1])) continue;
        p = fib[0];
        q = fib[1];
        drawn = true;
      }
    }
    if (!drawn) {
      p = gen.draw();
      do {
        q = gen.draw();
      } while (euclid(p, q) < 1e-3);
    }

    std::array<Cx, 2> ip = art.image(p), iq = art.image(q);
    double margin = 0.0;
    for (int k = 0; k < 2; ++k) {
      double d = std::abs(ip[k] - iq[k]);
      if (d > 0.0) margin = std::max(margin, d / (std::abs(ip[k]) + std::abs(iq[k])));
    }
    min_margin = std::min(min_margin, margin);
  }
  if (opt.probes == 0) min_margin = 1.0;
  r.value = min_margin;
  r.passed = min_margin > r.threshold;
  return r;
}

CheckResult check_immersion(const EmbeddingArtifact& art, const VerifyOptions& opt) {
  Rng rng(opt.seed + 22);
  ProbeGen gen(art, rng);

  std::vector<CurvePt> probes;
  probes.reserve(opt.probes + art.extension().size() * 10);
  for (std::size_t i = 0; i < opt.probes; ++i) probes.push_back(gen.draw());
  const AffineCurve* curve = art.curve();
  for (const ExtensionEntry& e : art.extension()) {
    for (int j = 0; j < 10; ++j) {
      Cx x = e.x + std::polar(1e-3, 2.0 * kPi * j / 10.0);
      probes.push_back(CurvePt{x, curve->sheet_near(x, e.y_kept)});
    }
  }

  CheckResult r{"immersion", false, 0.0, 1e-9, probes.size(), opt.seed};
  double min_norm = std::numeric_limits<double>::infinity();
  bool fd_ok = true;

  for (std::size_t i = 0; i < probes.size(); ++i) {
    const CurvePt& pt = probes[i];
    std::array<Cx, 2> d = art.chart_derivative(pt);
    min_norm = std::min(min_norm, norm2(d));

    if (i % 100 != 0) continue;
    // Finite-difference cross-check along the base chart; skip where the
    // chart switches (near branch points) and where the second component
    // has a pole within 1000 steps, since the difference quotient loses
    // accuracy long before the analytic derivative does.
    if (branch_distance(art, pt.x) < 2e-2) continue;
    double h = 1e-6 * (1.0 + std::abs(pt.x));
    bool near_pole = false;
    for (const Cx& p : art.pole_points())
      near_pole |= std::abs(pt.x - p) < 1000.0 * h;
    if (near_pole) continue;
    CurvePt pp{pt.x + h, curve ? curve->sheet_near(pt.x + h, pt.y) : Cx{0.0}};
    CurvePt pm{pt.x - h, curve ? curve->sheet_near(pt.x - h, pt.y) : Cx{0.0}};
    std::array<Cx, 2> ip = art.image(pp), im = art.image(pm);
    for (int k = 0; k < 2; ++k) {
      Cx fd = (ip[k] - im[k]) / (2.0 * h);
      if (std::abs(fd - d[k]) > 1e-4 * (1.0 + std::abs(d[k]))) fd_ok = false;
    }
  }
  if (probes.empty()) min_norm = 1.0;
  r.value = min_norm;
  r.passed = min_norm > r.threshold && fd_ok;
  return r;
}

// Shrinks the ray window at a puncture until the first-order drift of the
// quotient's numerator and of the denominator cofactor stays below half the
// limiting values, so the simple-pole term provably dominates every sample.
double ray_scale(const EmbeddingArtifact& art, const CurvePt& q) {
  const ShearMap* sh = art.shear();
  const AffineCurve* curve = art.curve();
  if (!sh || !curve) return 1.0;  // plane graphs: numerator is constant

  EntireFn::Jet aj = sh->a.jet(q.x);
  double n0 = std::abs(q.y - (aj.f + art.interp_offset));
  if (n0 <= 1e-12 * (1.0 + std::abs(aj.f))) return 1.0;  // dead pole, fails anyway

  double rho = 0.0;
  for (const Cx& p : sh->poles)
    if (std::abs(p - q.x) > 1e-9) rho += 1.0 / std::abs(p - q.x);

  EntireFn::Jet pj = curve->p().jet(q.x);
  double scale = 1.0;
  if (std::abs(q.y) > 1e-9) {
    Cx fp = pj.df / (2.0 * q.y);
    rho += std::abs(fp - aj.df) / n0;
  } else {
    // Ramified base: the sheet moves like sqrt(p'(x0) r).
    rho += std::abs(aj.df) / n0;
    if (std::abs(pj.df) > 0.0)
      scale = std::min(scale, 2.5 * n0 * n0 / std::abs(pj.df));
  }
  if (rho > 0.0) scale = std::min(scale, 5.0 / rho);
  return std::min(1.0, scale);
}

CheckResult check_properness(const EmbeddingArtifact& art, const VerifyOptions& opt) {
  constexpr double kRadii[4] = {1e-1, 1e-2, 1e-3, 1e-4};
  const AffineCurve* curve = art.curve();

  double min_ratio = std::numeric_limits<double>::infinity();
  bool mono_ok = true, slope_ok = true;

  for (const CurvePt& q : art.punctures) {
    const double scale = ray_scale(art, q);
    for (int k = 0; k < 3; ++k) {
      Cx u = std::polar(1.0, 2.0 * kPi * k / 3.0);
      std::array<double, 4> g{};
      bool positive = true;
      for (int ri = 0; ri < 4; ++ri) {
        Cx x = q.x + (kRadii[ri] * scale) * u;
        Cx y = curve ? curve->sheet_near(x, q.y) : Cx{0.0};
        g[ri] = std::abs(art.second_at(CurvePt{x, y}));
        positive = positive && g[ri] > 0.0;
      }
      if (!positive) {
        mono_ok = false;
        min_ratio = 0.0;
        continue;
      }
      for (int ri = 0; ri + 1 < 4; ++ri) mono_ok = mono_ok && g[ri] < g[ri + 1];
      // least-squares slope of log|g| against log r, expected near -1
      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      for (int ri = 0; ri < 4; ++ri) {
        double lx = std::log(kRadii[ri] * scale), ly = std::log(g[ri]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
      }
      double slope = (4.0 * sxy - sx * sy) / (4.0 * sxx - sx * sx);
      slope_ok = slope_ok && std::abs(slope + 1.0) <= 0.2;
      min_ratio = std::min(min_ratio, g[3] / (g[0] * kRadii[0] * scale));
    }
  }

  // Escape with the base coordinate: the image norm must keep pace.
  double min_base = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 8; ++k) {
    for (double s : {1e2, 1e3}) {
      Cx x = std::polar(s, 2.0 * kPi * k / 8.0);
      Cx y{0.0};
      if (curve) {
        auto fib = curve->fiber(x);
        y = fib.front().y;
      }
      min_base = std::min(min_base, norm2(art.image(CurvePt{x, y})) / s);
    }
  }

  CheckResult r{"properness", false, 0.0, 0.0,
                art.punctures.size() * 12 + 16, opt.seed};
  const bool base_ok = min_base >= 1.0 - 1e-12;
  if (art.punctures.empty()) {
    r.value = min_base;
    r.threshold = 1.0;
    r.passed = base_ok;
  } else {
    r.value = min_ratio;
    r.threshold = 1e3;
    r.passed = mono_ok && slope_ok && base_ok && min_ratio > r.threshold;
  }
  return r;
}

CheckResult check_curve_residual(const EmbeddingArtifact& art, const VerifyOptions& opt) {
  CheckResult r{"curve_residual", false, 0.0, 1e-9, 0, opt.seed};
  const AffineCurve* curve = art.curve();
  if (!curve) {
    r.passed = true;
    return r;
  }
  Rng rng(opt.seed + 33);
  ProbeGen gen(art, rng);
  std::vector<CurvePt> probes;
  probes.reserve(opt.probes);
  for (std::size_t i = 0; i < opt.probes; ++i) probes.push_back(gen.draw());
  r.probes = probes.size();
  r.value = curve_residual_max(*curve, probes);
  r.passed = r.value < r.threshold;
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Measurement layer
// ---------------------------------------------------------------------------

double interpolation_error(const EmbeddingArtifact& art) {
  const ShearMap* sh = art.shear();
  if (!sh || art.columns.empty()) return 0.0;
  double worst = 0.0;
  for (const FiberColumn& col : art.columns) {
    Cx a = sh->a.eval(col.x) + art.interp_offset;
    worst = std::max(worst, std::abs(a - col.y_target) / (1.0 + std::abs(col.y_target)));
  }
  return worst;
}

double curve_residual_max(const AffineCurve& curve, const std::vector<CurvePt>& probes) {
  double worst = 0.0;
  for (const CurvePt& pt : probes) {
    double denom = 1.0 + std::abs(curve.p().eval(pt.x));
    worst = std::max(worst, curve.residual(pt) / denom);
  }
  return worst;
}

double min_chart_derivative_norm(const std::function<std::array<Cx, 2>(Cx)>& chart_jet,
                                 const std::vector<Cx>& probes) {
  double worst = std::numeric_limits<double>::infinity();
  for (const Cx& x : probes) worst = std::min(worst, norm2(chart_jet(x)));
  return probes.empty() ? 1.0 : worst;
}

double zero_audit_mismatch(const EmbeddingArtifact& art, const std::vector<Disk>& disks) {
  const EntireFn& den = art.denominator();
  const std::vector<Cx> poles = art.pole_points();
  double worst = 0.0;
  for (const Disk& d : disks) {
    double rad = d.radius;
    bool done = false;
    for (int attempt = 0; attempt < 8 && !done; ++attempt) {
      int expected = 0;
      for (const Cx& p : poles)
        if (std::abs(p - d.center) < rad) ++expected;
      try {
        int got = count_zeros_in_disk(den, d.center, rad);
        worst = std::max(worst, std::abs(static_cast<double>(got - expected)));
        done = true;
      } catch (const ContourThroughZero&) {
        rad += 1e-3;
      } catch (const NonIntegerWinding&) {
        rad += 1e-3;
      }
    }
    if (!done) worst = std::max(worst, 1.0);
  }
  return worst;
}

std::vector<Disk> default_audit_disks(const EmbeddingArtifact& art) {
  const std::vector<Cx> poles = art.pole_points();
  double m = 0.0;
  for (const Cx& p : poles) m = std::max(m, std::abs(p));
  const double big = 1.2 * m + 2.0;

  std::vector<Disk> disks;
  disks.push_back(Disk{Cx{0.0}, big});
  for (std::size_t i = 0; i < poles.size(); ++i) {
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < poles.size(); ++j)
      if (j != i) gap = std::min(gap, std::abs(poles[i] - poles[j]));
    double rad = std::min(1.0, 0.4 * gap);
    if (rad > 1e-3) disks.push_back(Disk{poles[i], rad});
  }
  disks.push_back(Disk{Cx{2.0 * big + 5.0, 0.0}, 1.0});
  return disks;
}

// ---------------------------------------------------------------------------
// Report assembly
// ---------------------------------------------------------------------------

bool VerificationReport::all_passed() const {
  for (const CheckResult& c : checks)
    if (!c.passed) return false;
  return true;
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const CheckResult& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string VerificationReport::serialize() const {
  std::string s = "report family=" + family + " seed=" + std::to_string(seed) +
                  " truncation=" + std::to_string(truncation) +
                  " checks=" + std::to_string(checks.size()) + "\n";
  for (const CheckResult& c : checks) {
    s += "check name=" + c.name + " status=" + (c.passed ? "pass" : "fail") +
         " value=" + fmt_double(c.value) + " threshold=" + fmt_double(c.threshold) +
         " probes=" + std::to_string(c.probes) + " seed=" + std::to_string(c.seed) + "\n";
  }
  s += std::string("result status=") + (all_passed() ? "pass" : "fail") + "\n";
  return s;
}

VerificationReport verify_artifact(const EmbeddingArtifact& artifact,
                                   const VerifyOptions& opt) {
  for (const std::string& c : opt.checks) {
    bool known = false;
    for (const char* m : kCheckOrder) known |= (c == m);
    if (!known) throw ConfigError("unknown check name: " + c);
  }
  // Always run in canonical order regardless of how the subset was listed.
  std::vector<std::string> enabled;
  for (const char* n : kCheckOrder) {
    bool want = opt.checks.empty();
    for (const std::string& c : opt.checks) want |= (c == n);
    if (want) enabled.push_back(n);
  }

  VerificationReport report;
  report.family = artifact.family;
  report.seed = opt.seed;
  report.truncation = artifact.truncation;
  for (const std::string& name : enabled) {
    if (name == "interpolation")
      report.checks.push_back(check_interpolation(artifact, opt));
    else if (name == "zero_audit")
      report.checks.push_back(check_zero_audit(artifact, opt));
    else if (name == "injectivity")
      report.checks.push_back(check_injectivity(artifact, opt));
    else if (name == "immersion")
      report.checks.push_back(check_immersion(artifact, opt));
    else if (name == "properness")
      report.checks.push_back(check_properness(artifact, opt));
    else
      report.checks.push_back(check_curve_residual(artifact, opt));
  }
  return report;
}

}  // namespace holo
