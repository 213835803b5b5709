#include "holo/embedder.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "holo/errors.hpp"

namespace holo {

namespace {

ExtensionEntry make_entry(Cx x, const GraphJet& fj, const EntireFn::Jet& aj,
                          const EntireFn::Jet& bj) {
  if (std::abs(fj.f - aj.f) > 1e-9 * (1.0 + std::abs(fj.f)))
    throw HypothesisFailure("interpolant misses the graph value at " + fmt_complex(x) +
                            ": a = " + fmt_complex(aj.f) + ", f = " + fmt_complex(fj.f));
  if (std::abs(bj.df) < 1e-12)
    throw ZeroDerivative("denominator zero at " + fmt_complex(x) + " is not simple");
  Cx c1 = fj.df - aj.df;
  Cx c2 = (fj.ddf - aj.ddf) * 0.5;
  Cx d1 = bj.df;
  Cx d2 = bj.ddf * 0.5;
  return ExtensionEntry{x, fj.f, c1 / d1, (c2 * d1 - c1 * d2) / (d1 * d1)};
}

void reject_duplicates(const std::vector<Cx>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (std::abs(pts[i] - pts[j]) <= 1e-9)
        throw DuplicatePuncture("removed points " + fmt_complex(pts[i]) + " and " +
                                fmt_complex(pts[j]) + " coincide");
}

}  // namespace

GraphEmbedding shear_apply(const GraphFn& f, ShearMap shear,
                           const std::vector<Cx>& poles_subset) {
  const std::vector<Cx>& at = poles_subset.empty() ? shear.poles : poles_subset;
  GraphEmbedding out;
  out.extension.reserve(at.size());
  for (const Cx& x0 : at) {
    GraphJet fj = f(x0);
    out.extension.push_back(make_entry(x0, fj, shear.a.jet(x0), shear.b.jet(x0)));
  }
  out.shear = std::move(shear);
  return out;
}

// ---------------------------------------------------------------------------
// Artifact evaluation
// ---------------------------------------------------------------------------

const AffineCurve* EmbeddingArtifact::curve() const {
  const CurveGraph* cg = std::get_if<CurveGraph>(&graph);
  return cg ? &cg->curve : nullptr;
}

const ShearMap* EmbeddingArtifact::shear() const {
  const CurveGraph* cg = std::get_if<CurveGraph>(&graph);
  return cg ? &cg->shear : nullptr;
}

const std::vector<ExtensionEntry>& EmbeddingArtifact::extension() const {
  static const std::vector<ExtensionEntry> kNone;
  const CurveGraph* cg = std::get_if<CurveGraph>(&graph);
  return cg ? cg->extension : kNone;
}

std::vector<Cx> EmbeddingArtifact::pole_points() const {
  if (const SphereGraph* sg = std::get_if<SphereGraph>(&graph)) return sg->q.roots();
  return std::get<CurveGraph>(graph).shear.poles;
}

const EntireFn& EmbeddingArtifact::denominator() const {
  if (const SphereGraph* sg = std::get_if<SphereGraph>(&graph)) return sg->q;
  return std::get<CurveGraph>(graph).shear.b;
}

Cx EmbeddingArtifact::second_at(const CurvePt& pt) const {
  if (constant_second) return Cx{0.0};
  if (const SphereGraph* sg = std::get_if<SphereGraph>(&graph))
    return Cx{1.0} / sg->q.eval(pt.x);

  const CurveGraph& cg = std::get<CurveGraph>(graph);
  // The stored jet is valid for the untampered interpolant only.
  if (std::abs(interp_offset) == 0.0) {
    for (const ExtensionEntry& e : cg.extension) {
      if (std::abs(pt.x - e.x) <= 1e-6 &&
          std::abs(pt.y - e.y_kept) <= std::abs(pt.y + e.y_kept))
        return e.value + e.deriv * (pt.x - e.x);
    }
  }
  Cx num = pt.y - (cg.shear.a.eval(pt.x) + interp_offset);
  return num / cg.shear.b.eval(pt.x);
}

std::array<Cx, 2> EmbeddingArtifact::image(const CurvePt& pt) const {
  return {pt.x, second_at(pt)};
}

std::array<Cx, 2> EmbeddingArtifact::chart_derivative(const CurvePt& pt) const {
  if (const SphereGraph* sg = std::get_if<SphereGraph>(&graph)) {
    if (constant_second) return {Cx{1.0}, Cx{0.0}};
    EntireFn::Jet qj = sg->q.jet(pt.x);
    return {Cx{1.0}, -qj.df / (qj.f * qj.f)};
  }

  const CurveGraph& cg = std::get<CurveGraph>(graph);
  double branch_dist = std::numeric_limits<double>::infinity();
  for (const Cx& r : cg.curve.p().roots())
    branch_dist = std::min(branch_dist, std::abs(pt.x - r));
  const bool y_chart = branch_dist < 1e-2;

  EntireFn::Jet pj = cg.curve.p().jet(pt.x);
  if (constant_second) {
    if (y_chart) return {Cx{2.0} * pt.y / pj.df, Cx{0.0}};
    return {Cx{1.0}, Cx{0.0}};
  }
  EntireFn::Jet aj = cg.shear.a.jet(pt.x);
  EntireFn::Jet bj = cg.shear.b.jet(pt.x);

  if (!y_chart) {
    if (std::abs(interp_offset) == 0.0) {
      for (const ExtensionEntry& e : cg.extension) {
        if (std::abs(pt.x - e.x) <= 1e-6 &&
            std::abs(pt.y - e.y_kept) <= std::abs(pt.y + e.y_kept))
          return {Cx{1.0}, e.deriv};
      }
    }
    Cx fp = pj.df / (Cx{2.0} * pt.y);
    Cx g = (pt.y - aj.f - interp_offset) / bj.f;
    Cx gp = ((fp - aj.df) - g * bj.df) / bj.f;
    return {Cx{1.0}, gp};
  }

  // Sheet coordinate chart: x'(y) = 2y / p'(x).
  Cx dxdy = Cx{2.0} * pt.y / pj.df;
  Cx g = (pt.y - aj.f - interp_offset) / bj.f;
  Cx dgdx = (-aj.df - g * bj.df) / bj.f;  // partial in x at fixed y
  Cx dgdy = dgdx * dxdy + Cx{1.0} / bj.f;
  return {dxdy, dgdy};
}

double EmbeddingArtifact::region_radius() const {
  double m = 0.0;
  for (const Cx& p : pole_points()) m = std::max(m, std::abs(p));
  for (const CurvePt& q : punctures) m = std::max(m, std::abs(q.x));
  if (const AffineCurve* c = curve())
    for (const Cx& r : c->p().roots()) m = std::max(m, std::abs(r));
  return 1.2 * m + 2.0;
}

// ---------------------------------------------------------------------------
// Pipelines
// ---------------------------------------------------------------------------

EmbeddingArtifact embed_sphere_finite(const SphereModel& m) {
  bool has_inf = false;
  std::vector<Cx> finite;
  for (const ExtComplex& p : m.punctures) {
    if (p.infinite)
      has_inf = true;
    else
      finite.push_back(p.value);
  }
  if (!has_inf)
    throw ConfigError("normalize first: infinity must be among the removed points");
  reject_duplicates(finite);

  EmbeddingArtifact art;
  art.model = m;
  art.family = "sphere-finite";
  art.graph = SphereGraph{build_weierstrass(finite)};
  for (const Cx& c : finite) art.punctures.push_back(CurvePt{c, Cx{0.0}});
  return art;
}

EmbeddingArtifact embed_sphere_sequence(const SphereModel& m, int truncation) {
  std::vector<Cx> finite;
  for (const ExtComplex& p : m.punctures)
    if (!p.infinite) finite.push_back(p.value);
  if (truncation > 0 && static_cast<std::size_t>(truncation) < finite.size())
    finite.resize(static_cast<std::size_t>(truncation));
  reject_duplicates(finite);

  EmbeddingArtifact art;
  art.model = m;
  art.family = "sphere-sequence";
  art.truncation = static_cast<int>(finite.size());
  art.graph = SphereGraph{build_weierstrass(finite)};
  for (const Cx& c : finite) art.punctures.push_back(CurvePt{c, Cx{0.0}});
  return art;
}

EmbeddingArtifact embed_curve_minus_P(SurfaceModel stored_model, AffineCurve curve,
                                      const std::vector<CurvePt>& canonical_punctures,
                                      BaseCoord base, std::string family, int truncation) {
  std::vector<FiberColumn> columns = classify_fibers(curve, canonical_punctures);

  std::vector<Cx> xs;
  std::vector<std::pair<Cx, Cx>> nodes;
  xs.reserve(columns.size());
  for (const FiberColumn& col : columns) {
    xs.push_back(col.x);
    nodes.emplace_back(col.x, col.y_target);
  }

  EntireFn b = xs.empty() ? EntireFn::product(Cx{1.0}, {}) : build_weierstrass(xs);
  EntireFn a = xs.empty() ? EntireFn::constant(Cx{0.0}) : build_interpolant(nodes, b);

  std::vector<ExtensionEntry> extension;
  for (const FiberColumn& col : columns) {
    if (col.kind != FiberKind::Half) continue;
    EntireFn::Jet pj = curve.p().jet(col.x);
    Cx f = col.kept->y;
    Cx fp = pj.df / (Cx{2.0} * f);
    Cx fpp = (pj.ddf - Cx{2.0} * fp * fp) / (Cx{2.0} * f);
    extension.push_back(make_entry(col.x, GraphJet{f, fp, fpp}, a.jet(col.x), b.jet(col.x)));
  }

  EmbeddingArtifact art;
  art.model = std::move(stored_model);
  art.family = std::move(family);
  art.base = base;
  art.truncation = truncation;
  art.graph = CurveGraph{std::move(curve), ShearMap{std::move(a), std::move(b), xs},
                         std::move(extension)};
  art.columns = std::move(columns);
  art.punctures = canonical_punctures;
  return art;
}

EmbeddingArtifact embed_punctured_plane(const CStarModel& m) {
  validate(SurfaceModel{m});
  std::vector<CurvePt> punctures;
  punctures.reserve(m.removed.size());
  for (const Cx& t : m.removed) punctures.push_back(cstar_on_curve(t));
  return embed_curve_minus_P(SurfaceModel{m}, curve_of(m), punctures, BaseCoord::First,
                             "cstar", 0);
}

EmbeddingArtifact embed_torus(const TorusModel& m) {
  validate(SurfaceModel{m});
  return embed_curve_minus_P(SurfaceModel{m}, curve_of(m), m.punctures, BaseCoord::First,
                             "torus", 0);
}

EmbeddingArtifact embed_hyperelliptic(const HyperellipticModel& m) {
  validate(SurfaceModel{m});
  return embed_curve_minus_P(SurfaceModel{m}, curve_of(m), m.punctures, BaseCoord::First,
                             "hyperelliptic", 0);
}

EmbeddingArtifact embed_infinite_genus(const InfiniteGenusModel& m, int /*truncation*/) {
  validate(SurfaceModel{m});
  // Model stores (x, y) with x^2 = f(y); the base is the model's y.
  std::vector<CurvePt> canonical;
  canonical.reserve(m.punctures.size());
  for (const CurvePt& q : m.punctures) canonical.push_back(CurvePt{q.y, q.x});
  // The root list itself is the truncation; record its length.
  return embed_curve_minus_P(SurfaceModel{m}, curve_of(m), canonical, BaseCoord::Second,
                             "infinite-genus", static_cast<int>(m.f_roots.size()));
}

namespace {

SphereModel apply_mobius(const SphereModel& m, const MobiusMap& mu) {
  SphereModel out;
  for (const ExtComplex& p : m.punctures) {
    ExtComplex w = mu.apply(p);
    out.punctures.push_back(w);
  }
  for (const ExtComplex& p : m.accumulation) out.accumulation.push_back(mu.apply(p));
  return out;
}

EmbeddingArtifact embed_sphere(const SphereModel& m, int truncation) {
  if (m.accumulation.empty()) {
    bool has_inf = false;
    for (const ExtComplex& p : m.punctures) has_inf |= p.infinite;
    if (has_inf) return embed_sphere_finite(m);
    ExtComplex to_inf = m.punctures.front();
    ExtComplex to_zero = m.punctures.size() > 1
                             ? m.punctures[1]
                             : ExtComplex::at(to_inf.value + Cx{1.0});
    return embed_sphere_finite(apply_mobius(m, mobius_two_points(to_inf, to_zero)));
  }

  if (m.accumulation.size() == 1) {
    SphereModel normalized = m;
    if (!m.accumulation[0].infinite) {
      ExtComplex to_zero = !m.punctures.empty()
                               ? m.punctures.front()
                               : ExtComplex::at(m.accumulation[0].value + Cx{1.0});
      normalized = apply_mobius(m, mobius_two_points(m.accumulation[0], to_zero));
    }
    // Entries that landed at infinity coincide with the accumulation point
    // and are removed implicitly.
    SphereModel finite_only;
    finite_only.accumulation = normalized.accumulation;
    for (const ExtComplex& p : normalized.punctures)
      if (!p.infinite) finite_only.punctures.push_back(p);
    return embed_sphere_sequence(finite_only, truncation);
  }

  // Two designated accumulation points: send them to 0 and infinity and
  // work on the punctured plane.
  MobiusMap mu = mobius_two_points(m.accumulation[1], m.accumulation[0]);
  CStarModel star;
  for (const ExtComplex& p : m.punctures) {
    ExtComplex w = mu.apply(p);
    if (w.infinite || std::abs(w.value) <= 1e-12) continue;  // at an accumulation point
    star.removed.push_back(w.value);
  }
  return embed_punctured_plane(star);
}

}  // namespace

EmbeddingArtifact embed_model(const SurfaceModel& m, int truncation) {
  validate(m);
  if (const SphereModel* s = std::get_if<SphereModel>(&m)) return embed_sphere(*s, truncation);
  if (const CStarModel* c = std::get_if<CStarModel>(&m)) return embed_punctured_plane(*c);
  if (const TorusModel* t = std::get_if<TorusModel>(&m)) return embed_torus(*t);
  if (const HyperellipticModel* h = std::get_if<HyperellipticModel>(&m))
    return embed_hyperelliptic(*h);
  return embed_infinite_genus(std::get<InfiniteGenusModel>(m), truncation);
}

// ---------------------------------------------------------------------------
// Extension audit
// ---------------------------------------------------------------------------

ExtensionAudit audit_extension_limits(const EmbeddingArtifact& artifact) {
  ExtensionAudit out;
  const AffineCurve* curve = artifact.curve();
  if (!curve) return out;

  constexpr double kRadii[3] = {1e-2, 1e-3, 1e-4};
  constexpr double kFloor = 5e-12;  // below this, rounding owns the deviation

  for (const ExtensionEntry& e : artifact.extension()) {
    ExtensionLadder lad;
    lad.x = e.x;
    for (int ri = 0; ri < 3; ++ri) {
      double r = kRadii[ri];
      double worst = 0.0;
      for (int k = 0; k < 8; ++k) {
        Cx v = std::polar(r, kPi * k / 8.0);
        CurvePt plus{e.x + v, curve->sheet_near(e.x + v, e.y_kept)};
        CurvePt minus{e.x - v, curve->sheet_near(e.x - v, e.y_kept)};
        Cx mean = (artifact.second_at(plus) + artifact.second_at(minus)) * 0.5;
        worst = std::max(worst, std::abs(mean - e.value));
      }
      lad.deviation[ri] = worst;
    }
    lad.decreasing = (lad.deviation[0] > lad.deviation[1] || lad.deviation[1] <= kFloor) &&
                     (lad.deviation[1] > lad.deviation[2] || lad.deviation[2] <= kFloor);
    lad.converged = lad.deviation[2] < 1e-5;
    out.max_final_deviation = std::max(out.max_final_deviation, lad.deviation[2]);
    out.all_ok = out.all_ok && lad.decreasing && lad.converged;
    out.ladders.push_back(lad);
  }
  return out;
}

}  // namespace holo
