#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "holo/complex_util.hpp"
#include "holo/curve.hpp"

namespace holo {

// ---------------------------------------------------------------------------
// Extended plane
// ---------------------------------------------------------------------------

/// Point of the extended plane. `infinite` wins; `value` is ignored then.
struct ExtComplex {
  Cx value{0.0};
  bool infinite = false;

  static ExtComplex at(Cx v) { return ExtComplex{v, false}; }
  static ExtComplex inf() { return ExtComplex{Cx{0.0}, true}; }
};

bool ext_same(const ExtComplex& a, const ExtComplex& b, double tol = 1e-12);

/// z -> (az + b)/(cz + d), with the usual conventions at infinity.
struct MobiusMap {
  Cx a{1.0}, b{0.0}, c{0.0}, d{1.0};

  ExtComplex apply(const ExtComplex& z) const;
  /// Applies to a finite point expected to stay finite; throws ZeroInput if
  /// the image is the infinite point.
  Cx apply_finite(Cx z) const;
};

/// The Mobius transformation sending p to infinity and q to zero, with
/// derivative normalized to 1 where that is canonical:
///   both finite:  z -> (z - q)/(z - p)
///   p infinite:   z -> z - q
///   q infinite:   z -> 1/(z - p)
/// Throws CoincidentPoints when p and q agree.
MobiusMap mobius_two_points(const ExtComplex& p, const ExtComplex& q);

// ---------------------------------------------------------------------------
// Models
// ---------------------------------------------------------------------------

/// Riemann sphere minus a finite puncture set, with up to two designated
/// accumulation points for puncture sequences. Accumulation points are
/// removed implicitly and need not be listed among the punctures.
struct SphereModel {
  std::vector<ExtComplex> punctures;
  std::vector<ExtComplex> accumulation;
};

/// Plane minus zero, minus finitely many further points.
struct CStarModel {
  std::vector<Cx> removed;
};

/// Elliptic curve y^2 = x(x-1)(x-A) with the point at infinity removed,
/// minus finitely many further affine points.
struct TorusModel {
  Cx modulus{2.0};
  std::vector<CurvePt> punctures;
};

/// y^2 = lead * prod (x - e_j) over at least four distinct branch points,
/// with the fiber over infinity removed, minus finitely many affine points.
struct HyperellipticModel {
  std::vector<Cx> branch;
  Cx lead{1.0};
  std::vector<CurvePt> punctures;
};

/// Truncated model x^2 = f(y), f monic with the given roots; the roles of
/// base and sheet are swapped relative to the other curve models, so points
/// are stored as (x, y) with x the sheet coordinate.
struct InfiniteGenusModel {
  std::vector<Cx> f_roots;
  std::vector<CurvePt> punctures;
};

using SurfaceModel = std::variant<SphereModel, CStarModel, TorusModel,
                                  HyperellipticModel, InfiniteGenusModel>;

/// Structural checks: puncture distinctness and membership, branch point
/// distinctness, parameter constraints. Throws ConfigError and friends.
void validate(const SurfaceModel& model);

/// Underlying double covers in canonical (t, s) coordinates, s^2 = p(t).
AffineCurve curve_of(const CStarModel& m);  // s^2 = t^2 - 1
AffineCurve curve_of(const TorusModel& m);
AffineCurve curve_of(const HyperellipticModel& m);
AffineCurve curve_of(const InfiniteGenusModel& m);

/// Degree-2 covering map used to carry the punctured plane onto the curve
/// s^2 = t^2 - 1: t -> ((t + 1/t)/2, (t - 1/t)/2). Throws ZeroInput at 0.
CurvePt cstar_on_curve(Cx t);

int hyperelliptic_genus(std::size_t branch_count);
int weierstrass_point_count(std::size_t branch_count);

// ---------------------------------------------------------------------------
// Elliptic structure on y^2 = x(x-1)(x-A)
// ---------------------------------------------------------------------------

/// Group law with the point at infinity as identity, represented by
/// std::nullopt. Inputs must satisfy the curve equation.
std::optional<CurvePt> elliptic_add(Cx A, const std::optional<CurvePt>& P,
                                    const std::optional<CurvePt>& Q);
std::optional<CurvePt> elliptic_negate(const std::optional<CurvePt>& P);

/// Translation q -> q - p0 on the curve.
struct EllipticTranslation {
  Cx A;
  CurvePt p0;
  std::optional<CurvePt> apply(const std::optional<CurvePt>& q) const;
};

/// Moves the removed point at infinity to the affine point -p0 by the group
/// translation by -p0. The puncture that equals p0 (if any) lands at
/// infinity and is absorbed by the always-removed fiber there; -p0 joins the
/// puncture list as the image of infinity.
std::pair<TorusModel, EllipticTranslation> elliptic_translate(const TorusModel& m,
                                                              const CurvePt& p0);

// ---------------------------------------------------------------------------
// Branch point moves
// ---------------------------------------------------------------------------

/// Result of sending the branch point e to infinity by u = 1/(x - e),
/// v = y u^m with m = ceil(n/2). For even n the new curve has n - 1 branch
/// points; for odd n the count stays n because u = 0 becomes a branch point.
struct BranchMove {
  HyperellipticModel model;
  Cx moved;
  std::size_t half_power;

  /// Coordinate transport of an affine point with x != e.
  CurvePt transport(const CurvePt& q) const;
};

BranchMove move_branch_point_to_infinity(const HyperellipticModel& m, Cx e);

}  // namespace holo
