#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "holo/contour.hpp"
#include "holo/embedder.hpp"

namespace holo {

struct VerifyOptions {
  std::uint64_t seed = 20240801;
  std::size_t probes = 2000;
  /// Subset of check names to run; empty runs all six in canonical order:
  /// interpolation, zero_audit, injectivity, immersion, properness,
  /// curve_residual.
  std::vector<std::string> checks;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  double value = 0.0;
  double threshold = 0.0;
  std::size_t probes = 0;
  std::uint64_t seed = 0;
};

struct VerificationReport {
  std::string family;
  std::uint64_t seed = 0;
  int truncation = 0;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  const CheckResult* find(const std::string& name) const;
  /// Deterministic single-line-per-check text form; identical inputs give
  /// byte-identical output.
  std::string serialize() const;
};

/// Runs the selected checks against an immutable artifact. Probe streams
/// are derived from opt.seed only, so reports are reproducible.
VerificationReport verify_artifact(const EmbeddingArtifact& artifact,
                                   const VerifyOptions& opt = {});

// ---------------------------------------------------------------------------
// Measurement layer (unit-testable pieces of the checks)
// ---------------------------------------------------------------------------

/// Max over columns of |a(x_i) - y_i| / (1 + |y_i|); 0 without columns.
double interpolation_error(const EmbeddingArtifact& artifact);

/// Max relative defect |y^2 - p(x)| / (1 + |p(x)|) over explicit probes.
double curve_residual_max(const AffineCurve& curve, const std::vector<CurvePt>& probes);

/// Min Euclidean norm of chart-derivative pairs over explicit base probes.
double min_chart_derivative_norm(const std::function<std::array<Cx, 2>(Cx)>& chart_jet,
                                 const std::vector<Cx>& probes);

/// Counts denominator zeros inside each disk (radius nudged by +1e-3 and
/// retried, at most 8 times, when the contour degenerates) and compares to
/// the number of pole points inside. Returns the worst absolute mismatch.
double zero_audit_mismatch(const EmbeddingArtifact& artifact, const std::vector<Disk>& disks);

/// Disks the default audit uses: one covering all poles, one per pole when
/// gaps allow, one deliberately empty.
std::vector<Disk> default_audit_disks(const EmbeddingArtifact& artifact);

}  // namespace holo
