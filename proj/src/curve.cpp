#include "holo/curve.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "holo/errors.hpp"

namespace holo {

AffineCurve::AffineCurve(EntireFn p)
    : p_(std::move(p)), coeff_scale_(p_.coefficient_scale()) {}

bool AffineCurve::is_ramified_at(Cx x) const {
  return std::abs(p_.eval(x)) <= ramification_threshold();
}

std::vector<CurvePt> AffineCurve::fiber(Cx x) const {
  Cx v = p_.eval(x);
  if (std::abs(v) <= ramification_threshold()) return {CurvePt{x, Cx{0.0}}};
  Cx s = std::sqrt(v);
  return {CurvePt{x, s}, CurvePt{x, -s}};
}

double AffineCurve::residual(const CurvePt& q) const {
  return std::abs(q.y * q.y - p_.eval(q.x));
}

bool AffineCurve::on_curve(const CurvePt& q) const {
  return residual(q) <= 1e-9 * (1.0 + std::abs(p_.eval(q.x)));
}

Cx AffineCurve::sheet_near(Cx x, Cx y_ref) const {
  Cx s = std::sqrt(p_.eval(x));
  return std::abs(s - y_ref) <= std::abs(-s - y_ref) ? s : -s;
}

std::vector<FiberColumn> classify_fibers(const AffineCurve& curve,
                                         const std::vector<CurvePt>& punctures) {
  for (const CurvePt& q : punctures) {
    if (!curve.on_curve(q))
      throw PunctureOffCurve("puncture (" + fmt_complex(q.x) + ", " +
                             fmt_complex(q.y) + ") does not satisfy the curve equation");
  }

  // Group punctures by base coordinate, preserving first-appearance order.
  std::vector<FiberColumn> columns;
  std::vector<std::vector<CurvePt>> groups;
  for (const CurvePt& q : punctures) {
    std::size_t gi = groups.size();
    for (std::size_t i = 0; i < groups.size(); ++i) {
      if (std::abs(columns[i].x - q.x) <= 1e-9) {
        gi = i;
        break;
      }
    }
    if (gi == groups.size()) {
      columns.push_back(FiberColumn{q.x, FiberKind::Full, Cx{0.0}, {}, std::nullopt});
      groups.emplace_back();
    }
    groups[gi].push_back(q);
  }

  for (std::size_t i = 0; i < columns.size(); ++i) {
    FiberColumn& col = columns[i];
    std::vector<CurvePt> fib = curve.fiber(col.x);
    std::vector<bool> matched(fib.size(), false);

    for (const CurvePt& q : groups[i]) {
      std::size_t best = 0;
      double best_d = std::abs(q.y - fib[0].y);
      for (std::size_t k = 1; k < fib.size(); ++k) {
        double d = std::abs(q.y - fib[k].y);
        if (d < best_d) {
          best_d = d;
          best = k;
        }
      }
      if (matched[best])
        throw DuplicatePuncture("two punctures land on the same fiber point over " +
                                fmt_complex(col.x));
      matched[best] = true;
      col.removed.push_back(fib[best]);
    }

    std::size_t unmatched = 0;
    for (std::size_t k = 0; k < fib.size(); ++k) {
      if (!matched[k]) {
        ++unmatched;
        col.kept = fib[k];
      }
    }

    if (unmatched == 0) {
      col.kind = FiberKind::Full;
      col.kept.reset();
      double m = 0.0;
      for (const CurvePt& f : fib) m = std::max(m, std::abs(f.y));
      col.y_target = Cx{1.0 + m};
    } else {
      // unmatched == 1: the group is non-empty, so a 2-point fiber has
      // exactly one survivor and a 1-point fiber none.
      col.kind = FiberKind::Half;
      if (std::abs(col.kept->y) <= 1e-9)
        throw HypothesisViolation(
            "kept fiber point over " + fmt_complex(col.x) +
            " sits on the branch locus; the construction needs it off the ramification set");
      col.y_target = col.kept->y;
    }
  }
  return columns;
}

}  // namespace holo
