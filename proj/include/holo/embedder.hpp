#pragma once

#include <array>
#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "holo/complex_util.hpp"
#include "holo/curve.hpp"
#include "holo/entire_fn.hpp"
#include "holo/surfaces.hpp"

namespace holo {

// ---------------------------------------------------------------------------
// Shear maps
// ---------------------------------------------------------------------------

/// The fiberwise-affine map (x, y) -> (x, (y - a(x)) / b(x)). Every listed
/// pole is a simple zero of b.
struct ShearMap {
  EntireFn a = EntireFn::constant(Cx{0.0});
  EntireFn b = EntireFn::constant(Cx{1.0});
  std::vector<Cx> poles;
};

/// Removable-singularity record at a pole x of b, valid on the local graph
/// through (x, y_kept): the limit of (f - a)/b and its first derivative.
struct ExtensionEntry {
  Cx x;
  Cx y_kept;
  Cx value;  // (f'(x) - a'(x)) / b'(x)
  Cx deriv;  // (c2 d1 - c1 d2) / d1^2 with c = f - a, d = b jets halved
};

/// Value and first two derivatives of a local graph function at a point.
struct GraphJet {
  Cx f, df, ddf;
};
using GraphFn = std::function<GraphJet(Cx)>;

/// Graph data produced by applying a shear to a local graph function.
struct GraphEmbedding {
  ShearMap shear;
  std::vector<ExtensionEntry> extension;
};

/// Applies the shear to the graph of f. At each pole x0 (restricted to
/// `poles_subset` when non-empty) requires a(x0) = f(x0) within 1e-9
/// relative, then installs the limit value and derivative of (f - a)/b.
/// Throws HypothesisFailure when the matching condition fails.
GraphEmbedding shear_apply(const GraphFn& f, ShearMap shear,
                           const std::vector<Cx>& poles_subset = {});

// ---------------------------------------------------------------------------
// Artifacts
// ---------------------------------------------------------------------------

/// Which model coordinate serves as the embedding base. Second is used by
/// the role-swapped family x^2 = f(y), where the model's y is the base.
enum class BaseCoord { First, Second };

/// Plane domain artifact: x -> (x, 1 / q(x)).
struct SphereGraph {
  EntireFn q = EntireFn::constant(Cx{1.0});
};

/// Curve domain artifact: (x, y) -> (x, (y - a(x)) / b(x)) with extension
/// entries at the removable singularities.
struct CurveGraph {
  AffineCurve curve;
  ShearMap shear;
  std::vector<ExtensionEntry> extension;
};

/// A constructed embedding: the model, the map in evaluable form, and the
/// classification data the construction was derived from. The tamper fields
/// are inert by default; jobs may set them to produce deliberately broken
/// maps for exercising the rejection paths.
struct EmbeddingArtifact {
  SurfaceModel model;
  std::string family;
  BaseCoord base = BaseCoord::First;
  int truncation = 0;

  std::variant<SphereGraph, CurveGraph> graph{SphereGraph{}};
  std::vector<FiberColumn> columns;
  /// Removed points in canonical coordinates; spheres store (pole, 0).
  std::vector<CurvePt> punctures;

  Cx interp_offset{0.0};      // added to a(x) everywhere when nonzero
  bool constant_second = false;  // replaces the second component by 0

  bool is_curve() const { return std::holds_alternative<CurveGraph>(graph); }
  const AffineCurve* curve() const;
  const ShearMap* shear() const;
  const std::vector<ExtensionEntry>& extension() const;

  /// Zeros of the denominator (pole locations of the second component).
  std::vector<Cx> pole_points() const;

  /// The denominator itself: q for plane graphs, b for curve graphs.
  const EntireFn& denominator() const;

  /// Second component at a domain point. Near an extension entry on the
  /// kept sheet (base within 1e-6) the stored first-order jet replaces the
  /// unstable quotient.
  Cx second_at(const CurvePt& pt) const;

  /// Full image (base, second).
  std::array<Cx, 2> image(const CurvePt& pt) const;

  /// Derivative of the image with respect to the natural local chart:
  /// the base coordinate away from ramification, the sheet coordinate
  /// within 1e-2 of a branch point of the curve.
  std::array<Cx, 2> chart_derivative(const CurvePt& pt) const;

  /// Radius of a disk about 0 containing all structure (poles, punctures,
  /// branch points) with margin.
  double region_radius() const;
};

// ---------------------------------------------------------------------------
// Pipelines
// ---------------------------------------------------------------------------

/// Sphere minus finitely many points; infinity must be among the removed
/// points (normalize first otherwise). The map is x -> (x, 1/q(x)) with q
/// vanishing on the finite removed points.
EmbeddingArtifact embed_sphere_finite(const SphereModel& m);

/// Sphere minus a sequence accumulating at infinity, truncated to the
/// first `truncation` terms (0 keeps the whole list).
EmbeddingArtifact embed_sphere_sequence(const SphereModel& m, int truncation);

/// Punctured plane carried onto s^2 = t^2 - 1 and embedded through the
/// curve pipeline.
EmbeddingArtifact embed_punctured_plane(const CStarModel& m);

EmbeddingArtifact embed_torus(const TorusModel& m);
EmbeddingArtifact embed_hyperelliptic(const HyperellipticModel& m);
EmbeddingArtifact embed_infinite_genus(const InfiniteGenusModel& m, int truncation);

/// Shared curve pipeline: classify fibers, build the denominator over the
/// column bases, interpolate the targets, and attach extension entries at
/// every half fiber column.
EmbeddingArtifact embed_curve_minus_P(SurfaceModel stored_model, AffineCurve curve,
                                      const std::vector<CurvePt>& canonical_punctures,
                                      BaseCoord base, std::string family, int truncation);

/// Dispatch on the model family. Sphere models are normalized first:
/// an accumulation point (or an arbitrary puncture) is sent to infinity,
/// two accumulation points are sent to {0, infinity} and the model is
/// carried onto the punctured plane.
EmbeddingArtifact embed_model(const SurfaceModel& m, int truncation);

// ---------------------------------------------------------------------------
// Construction-time audit
// ---------------------------------------------------------------------------

/// Sampled convergence record for one extension entry: antipodal-paired
/// circle means at shrinking radii, compared against the stored limit.
struct ExtensionLadder {
  Cx x;
  std::array<double, 3> deviation;  // radii 1e-2, 1e-3, 1e-4
  bool decreasing;
  bool converged;  // final deviation < 1e-5
};

struct ExtensionAudit {
  std::vector<ExtensionLadder> ladders;
  double max_final_deviation = 0.0;
  bool all_ok = true;
};

ExtensionAudit audit_extension_limits(const EmbeddingArtifact& artifact);

}  // namespace holo
