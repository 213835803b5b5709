#pragma once

#include <optional>
#include <vector>

#include "holo/complex_util.hpp"
#include "holo/entire_fn.hpp"

namespace holo {

/// Point of an affine plane curve s^2 = p(t), stored as (base, sheet).
struct CurvePt {
  Cx x;
  Cx y;
};

/// Double cover of the plane branched over the simple zeros of p. The
/// polynomial stays in factored form; the expanded coefficient scale is
/// cached because the ramification test is relative to it.
class AffineCurve {
 public:
  explicit AffineCurve(EntireFn p);

  const EntireFn& p() const { return p_; }
  double coefficient_scale() const { return coeff_scale_; }

  double ramification_threshold() const { return 1e-12 * (1.0 + coeff_scale_); }
  bool is_ramified_at(Cx x) const;

  /// Fiber of the base projection: two points (x, +s), (x, -s), or the
  /// single point (x, 0) over a branch point.
  std::vector<CurvePt> fiber(Cx x) const;

  double residual(const CurvePt& q) const;
  bool on_curve(const CurvePt& q) const;

  /// Sheet value over x on the local branch through y_ref, i.e. the square
  /// root of p(x) whose sign matches y_ref. Valid while |y_ref| dominates
  /// the change of the root across the step.
  Cx sheet_near(Cx x, Cx y_ref) const;

 private:
  EntireFn p_;
  double coeff_scale_;
};

enum class FiberKind { Full, Half };

/// One puncture column: everything the construction needs to know about
/// the punctures sharing a base coordinate.
struct FiberColumn {
  Cx x;
  FiberKind kind;
  /// Interpolation target for this column. Half: the second coordinate of
  /// the kept point. Full: a real value 1 + max |fiber second coordinates|,
  /// guaranteed at distance >= 1 from every fiber value.
  Cx y_target;
  std::vector<CurvePt> removed;
  std::optional<CurvePt> kept;
};

/// Groups punctures into fiber columns (base coordinates merged at 1e-9)
/// and classifies each column:
///   Full  - every point of the fiber is punctured,
///   Half  - exactly one fiber point survives; it must stay clear of the
///           branch locus (|y| > 1e-9), otherwise HypothesisViolation.
/// Punctures failing the curve equation raise PunctureOffCurve; two
/// punctures landing on the same fiber point raise DuplicatePuncture.
std::vector<FiberColumn> classify_fibers(const AffineCurve& curve,
                                         const std::vector<CurvePt>& punctures);

}  // namespace holo
