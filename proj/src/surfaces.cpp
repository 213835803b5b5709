#include "holo/surfaces.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "holo/errors.hpp"

namespace holo {

// ---------------------------------------------------------------------------
// Extended plane
// ---------------------------------------------------------------------------

bool ext_same(const ExtComplex& a, const ExtComplex& b, double tol) {
  if (a.infinite || b.infinite) return a.infinite && b.infinite;
  return std::abs(a.value - b.value) <= tol;
}

ExtComplex MobiusMap::apply(const ExtComplex& z) const {
  if (z.infinite) {
    if (std::abs(c) == 0.0) return ExtComplex::inf();
    return ExtComplex::at(a / c);
  }
  Cx den = c * z.value + d;
  if (std::abs(den) == 0.0) return ExtComplex::inf();
  return ExtComplex::at((a * z.value + b) / den);
}

Cx MobiusMap::apply_finite(Cx z) const {
  ExtComplex w = apply(ExtComplex::at(z));
  if (w.infinite) throw ZeroInput("Mobius image of " + fmt_complex(z) + " is infinite");
  return w.value;
}

MobiusMap mobius_two_points(const ExtComplex& p, const ExtComplex& q) {
  if (ext_same(p, q)) throw CoincidentPoints("Mobius normalization needs two distinct points");
  if (p.infinite) return MobiusMap{Cx{1.0}, -q.value, Cx{0.0}, Cx{1.0}};
  if (q.infinite) return MobiusMap{Cx{0.0}, Cx{1.0}, Cx{1.0}, -p.value};
  return MobiusMap{Cx{1.0}, -q.value, Cx{1.0}, -p.value};
}

// ---------------------------------------------------------------------------
// Model validation
// ---------------------------------------------------------------------------

namespace {

void check_distinct_points(const std::vector<CurvePt>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (std::abs(pts[i].x - pts[j].x) <= 1e-9 && std::abs(pts[i].y - pts[j].y) <= 1e-9)
        throw DuplicatePuncture("punctures " + fmt_complex(pts[i].x) + " and " +
                                fmt_complex(pts[j].x) + " coincide");
}

void check_punctures_on(const AffineCurve& curve, const std::vector<CurvePt>& pts) {
  for (const CurvePt& q : pts)
    if (!curve.on_curve(q))
      throw PunctureOffCurve("puncture (" + fmt_complex(q.x) + ", " + fmt_complex(q.y) +
                             ") does not satisfy the curve equation");
}

struct Validator {
  void operator()(const SphereModel& m) const {
    if (m.punctures.empty() && m.accumulation.empty())
      throw ConfigError("sphere model needs at least one puncture or accumulation point");
    if (m.accumulation.size() > 2)
      throw ConfigError("at most two accumulation points may be designated");
    for (std::size_t i = 0; i < m.punctures.size(); ++i)
      for (std::size_t j = i + 1; j < m.punctures.size(); ++j)
        if (ext_same(m.punctures[i], m.punctures[j], 1e-9))
          throw DuplicatePuncture("sphere punctures must be pairwise distinct");
    if (m.accumulation.size() == 2 && ext_same(m.accumulation[0], m.accumulation[1], 1e-9))
      throw ConfigError("accumulation points must be distinct");
  }

  void operator()(const CStarModel& m) const {
    for (const Cx& t : m.removed) {
      if (std::abs(t) <= 1e-12)
        throw ZeroInput("removed point at the origin is implicit in the punctured plane");
      if (!is_finite(t)) throw ConfigError("removed point is not finite");
    }
    for (std::size_t i = 0; i < m.removed.size(); ++i)
      for (std::size_t j = i + 1; j < m.removed.size(); ++j)
        if (std::abs(m.removed[i] - m.removed[j]) <= 1e-9)
          throw DuplicatePuncture("removed points must be pairwise distinct");
  }

  void operator()(const TorusModel& m) const {
    if (std::abs(m.modulus) <= 1e-9 || std::abs(m.modulus - Cx{1.0}) <= 1e-9)
      throw ConfigError("A must differ from 0 and 1");
    AffineCurve curve = curve_of(m);
    check_punctures_on(curve, m.punctures);
    check_distinct_points(m.punctures);
  }

  void operator()(const HyperellipticModel& m) const {
    if (m.branch.size() < 4)
      throw ConfigError("hyperelliptic model needs at least four branch points");
    if (std::abs(m.lead) <= 1e-12)
      throw ConfigError("leading coefficient must be nonzero");
    for (std::size_t i = 0; i < m.branch.size(); ++i)
      for (std::size_t j = i + 1; j < m.branch.size(); ++j)
        if (std::abs(m.branch[i] - m.branch[j]) <= 1e-9)
          throw DuplicateZero("branch points must be pairwise distinct");
    AffineCurve curve = curve_of(m);
    check_punctures_on(curve, m.punctures);
    check_distinct_points(m.punctures);
  }

  void operator()(const InfiniteGenusModel& m) const {
    if (m.f_roots.empty()) throw ConfigError("truncated root list must be non-empty");
    for (std::size_t i = 0; i < m.f_roots.size(); ++i)
      for (std::size_t j = i + 1; j < m.f_roots.size(); ++j)
        if (std::abs(m.f_roots[i] - m.f_roots[j]) <= 1e-9)
          throw DuplicateZero("truncated roots must be pairwise distinct");
    AffineCurve curve = curve_of(m);
    // Model points are (x, y) with x^2 = f(y); canonical curve points swap roles.
    std::vector<CurvePt> canonical;
    canonical.reserve(m.punctures.size());
    for (const CurvePt& q : m.punctures) canonical.push_back(CurvePt{q.y, q.x});
    check_punctures_on(curve, canonical);
    check_distinct_points(canonical);
  }
};

}  // namespace

void validate(const SurfaceModel& model) { std::visit(Validator{}, model); }

AffineCurve curve_of(const CStarModel&) {
  return AffineCurve(EntireFn::product(Cx{1.0}, {Cx{1.0}, Cx{-1.0}}));
}

AffineCurve curve_of(const TorusModel& m) {
  return AffineCurve(EntireFn::product(Cx{1.0}, {Cx{0.0}, Cx{1.0}, m.modulus}));
}

AffineCurve curve_of(const HyperellipticModel& m) {
  return AffineCurve(EntireFn::product(m.lead, m.branch));
}

AffineCurve curve_of(const InfiniteGenusModel& m) {
  return AffineCurve(EntireFn::product(Cx{1.0}, m.f_roots));
}

CurvePt cstar_on_curve(Cx t) {
  if (std::abs(t) == 0.0) throw ZeroInput("the origin is not a point of the punctured plane");
  Cx inv = Cx{1.0} / t;
  return CurvePt{(t + inv) * 0.5, (t - inv) * 0.5};
}

int hyperelliptic_genus(std::size_t branch_count) {
  return static_cast<int>((branch_count - 2 + 1) / 2);
}

int weierstrass_point_count(std::size_t branch_count) {
  return branch_count % 2 == 0 ? static_cast<int>(branch_count)
                               : static_cast<int>(branch_count) + 1;
}

// ---------------------------------------------------------------------------
// Elliptic group law on y^2 = x^3 - (1+A) x^2 + A x
// ---------------------------------------------------------------------------

namespace {

void require_on_cubic(Cx A, const CurvePt& P) {
  Cx p = P.x * (P.x - Cx{1.0}) * (P.x - A);
  if (std::abs(P.y * P.y - p) > 1e-9 * (1.0 + std::abs(p)))
    throw PointOffCurve("point (" + fmt_complex(P.x) + ", " + fmt_complex(P.y) +
                        ") is not on the cubic");
}

}  // namespace

std::optional<CurvePt> elliptic_add(Cx A, const std::optional<CurvePt>& P,
                                    const std::optional<CurvePt>& Q) {
  if (!P) return Q;
  if (!Q) return P;
  require_on_cubic(A, *P);
  require_on_cubic(A, *Q);

  const Cx a2 = -(Cx{1.0} + A);
  const Cx a4 = A;
  Cx lambda;
  if (std::abs(P->x - Q->x) <= 1e-12 * (1.0 + std::abs(P->x) + std::abs(Q->x))) {
    // Same fiber: inverse pair sums to the identity, otherwise tangent line.
    if (std::abs(P->y + Q->y) <= 1e-12 * (1.0 + std::abs(P->y) + std::abs(Q->y)))
      return std::nullopt;
    lambda = (Cx{3.0} * P->x * P->x + Cx{2.0} * a2 * P->x + a4) / (Cx{2.0} * P->y);
  } else {
    lambda = (Q->y - P->y) / (Q->x - P->x);
  }
  Cx x3 = lambda * lambda - a2 - P->x - Q->x;
  Cx y3 = lambda * (P->x - x3) - P->y;
  return CurvePt{x3, y3};
}

std::optional<CurvePt> elliptic_negate(const std::optional<CurvePt>& P) {
  if (!P) return std::nullopt;
  return CurvePt{P->x, -P->y};
}

std::optional<CurvePt> EllipticTranslation::apply(const std::optional<CurvePt>& q) const {
  return elliptic_add(A, q, elliptic_negate(std::optional<CurvePt>{p0}));
}

std::pair<TorusModel, EllipticTranslation> elliptic_translate(const TorusModel& m,
                                                              const CurvePt& p0) {
  require_on_cubic(m.modulus, p0);
  EllipticTranslation tau{m.modulus, p0};

  TorusModel out;
  out.modulus = m.modulus;
  for (const CurvePt& q : m.punctures) {
    std::optional<CurvePt> r = tau.apply(std::optional<CurvePt>{q});
    // q = p0 maps to the identity, which the model removes structurally.
    if (r) out.punctures.push_back(*r);
  }
  // The previously removed identity lands at -p0 and stays removed.
  out.punctures.push_back(CurvePt{p0.x, -p0.y});
  return {std::move(out), tau};
}

// ---------------------------------------------------------------------------
// Branch point moves
// ---------------------------------------------------------------------------

CurvePt BranchMove::transport(const CurvePt& q) const {
  Cx dx = q.x - moved;
  if (std::abs(dx) <= 1e-12)
    throw ZeroInput("point sits over the moved branch point; its image is the fiber at infinity");
  Cx u = Cx{1.0} / dx;
  Cx um = Cx{1.0};
  for (std::size_t i = 0; i < half_power; ++i) um *= u;
  return CurvePt{u, q.y * um};
}

BranchMove move_branch_point_to_infinity(const HyperellipticModel& m, Cx e) {
  std::size_t k = m.branch.size();
  for (std::size_t i = 0; i < m.branch.size(); ++i) {
    if (std::abs(m.branch[i] - e) <= 1e-9) {
      k = i;
      break;
    }
  }
  if (k == m.branch.size())
    throw NotABranchPoint(fmt_complex(e) + " is not a branch point of the model");
  const Cx ek = m.branch[k];

  const std::size_t n = m.branch.size();
  const std::size_t half = (n + 1) / 2;

  // Substituting u = 1/(x - e_k), v = y u^half turns y^2 = lead prod (x - e_j)
  // into v^2 = lead prod_{j != k} (e_k - e_j) * u^(2 half - n) prod (u - 1/(e_j - e_k)).
  BranchMove out;
  out.moved = ek;
  out.half_power = half;
  out.model.lead = m.lead;
  if (2 * half > n) out.model.branch.push_back(Cx{0.0});
  for (std::size_t j = 0; j < n; ++j) {
    if (j == k) continue;
    out.model.lead *= (ek - m.branch[j]);
    out.model.branch.push_back(Cx{1.0} / (m.branch[j] - ek));
  }
  for (const CurvePt& q : m.punctures) {
    if (std::abs(q.x - ek) <= 1e-9) continue;  // absorbed by the fiber at infinity
    out.model.punctures.push_back(out.transport(q));
  }
  return out;
}

}  // namespace holo
