#include "holo/entire_fn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "holo/errors.hpp"
#include "holo/kernels.hpp"

namespace holo {

namespace {

void require_finite(const std::vector<Cx>& zs, const char* what) {
  for (const Cx& z : zs) {
    if (!is_finite(z)) throw std::invalid_argument(std::string(what) + " must be finite");
  }
}

// jet of prod (x - r_k) over the given split arrays, single point
EntireFn::Jet product_jet_one(Cx x, const std::vector<double>& rr,
                              const std::vector<double>& ri) {
  double pr, pi, d1r, d1i, d2r, d2i;
  double xr = x.real(), xi = x.imag();
  kernels::product_jet(&xr, &xi, 1, rr.data(), ri.data(), rr.size(),
                       &pr, &pi, &d1r, &d1i, &d2r, &d2i);
  return {Cx(pr, pi), Cx(d1r, d1i), Cx(d2r, d2i)};
}

}  // namespace

EntireFn EntireFn::constant(Cx c) {
  EntireFn f;
  f.leading_ = c;
  return f;
}

EntireFn EntireFn::product(Cx leading, std::vector<Cx> roots) {
  require_finite(roots, "product roots");
  if (!is_finite(leading)) throw std::invalid_argument("leading must be finite");
  EntireFn f;
  f.leading_ = leading;
  f.roots_ = std::move(roots);
  f.rebuild_split_cache();
  return f;
}

EntireFn EntireFn::with_terms(Cx leading, std::vector<Cx> roots,
                              std::vector<InterpTerm> terms) {
  require_finite(roots, "product roots");
  if (!is_finite(leading)) throw std::invalid_argument("leading must be finite");
  for (const InterpTerm& t : terms) {
    if (!is_finite(t.node) || !is_finite(t.weight))
      throw std::invalid_argument("interpolation terms must be finite");
    if (t.skip_index >= roots.size())
      throw std::invalid_argument("interpolation term skips a missing factor");
  }
  EntireFn f;
  f.leading_ = leading;
  f.roots_ = std::move(roots);
  f.terms_ = std::move(terms);
  f.rebuild_split_cache();
  return f;
}

void EntireFn::rebuild_split_cache() {
  roots_re_.resize(roots_.size());
  roots_im_.resize(roots_.size());
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    roots_re_[i] = roots_[i].real();
    roots_im_[i] = roots_[i].imag();
  }
  term_re_.assign(terms_.size(), {});
  term_im_.assign(terms_.size(), {});
  for (std::size_t j = 0; j < terms_.size(); ++j) {
    term_re_[j].reserve(roots_.size() - 1);
    term_im_[j].reserve(roots_.size() - 1);
    for (std::size_t k = 0; k < roots_.size(); ++k) {
      if (k == terms_[j].skip_index) continue;
      term_re_[j].push_back(roots_[k].real());
      term_im_[j].push_back(roots_[k].imag());
    }
  }
}

std::size_t EntireFn::degree() const {
  std::size_t d = (leading_ != Cx(0.0)) ? roots_.size() : 0;
  if (!terms_.empty() && !roots_.empty()) d = std::max(d, roots_.size() - 1);
  return d;
}

Cx EntireFn::eval(Cx x) const { return jet(x).f; }

Cx EntireFn::deriv(Cx x) const { return jet(x).df; }

EntireFn::Jet EntireFn::jet(Cx x) const {
  Jet full = product_jet_one(x, roots_re_, roots_im_);
  Jet out{leading_ * full.f, leading_ * full.df, leading_ * full.ddf};
  for (std::size_t j = 0; j < terms_.size(); ++j) {
    Jet t = product_jet_one(x, term_re_[j], term_im_[j]);
    out.f += terms_[j].weight * t.f;
    out.df += terms_[j].weight * t.df;
    out.ddf += terms_[j].weight * t.ddf;
  }
  return out;
}

void EntireFn::eval_many(const Cx* xs, std::size_t n, Cx* f, Cx* df) const {
  if (n == 0) return;
  std::vector<double> xr(n), xi(n);
  for (std::size_t j = 0; j < n; ++j) {
    xr[j] = xs[j].real();
    xi[j] = xs[j].imag();
  }
  std::vector<double> pr(n), pi(n), d1r(n), d1i(n);
  const bool want_df = df != nullptr;
  kernels::product_jet(xr.data(), xi.data(), n, roots_re_.data(), roots_im_.data(),
                       roots_re_.size(), pr.data(), pi.data(),
                       want_df ? d1r.data() : nullptr, want_df ? d1i.data() : nullptr,
                       nullptr, nullptr);
  for (std::size_t j = 0; j < n; ++j) {
    f[j] = leading_ * Cx(pr[j], pi[j]);
    if (want_df) df[j] = leading_ * Cx(d1r[j], d1i[j]);
  }
  for (std::size_t t = 0; t < terms_.size(); ++t) {
    kernels::product_jet(xr.data(), xi.data(), n, term_re_[t].data(), term_im_[t].data(),
                         term_re_[t].size(), pr.data(), pi.data(),
                         want_df ? d1r.data() : nullptr, want_df ? d1i.data() : nullptr,
                         nullptr, nullptr);
    const Cx w = terms_[t].weight;
    for (std::size_t j = 0; j < n; ++j) {
      f[j] += w * Cx(pr[j], pi[j]);
      if (want_df) df[j] += w * Cx(d1r[j], d1i[j]);
    }
  }
}

namespace {

// coefficients of leading * prod (x - r), ascending powers
std::vector<Cx> expand_product(Cx leading, const std::vector<Cx>& roots,
                               std::size_t skip = std::numeric_limits<std::size_t>::max()) {
  std::vector<Cx> c{leading};
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (i == skip) continue;
    c.push_back(Cx(0.0));
    for (std::size_t k = c.size() - 1; k > 0; --k) {
      c[k] = c[k - 1] - roots[i] * c[k];
    }
    c[0] = -roots[i] * c[0];
  }
  return c;
}

}  // namespace

std::vector<Cx> EntireFn::coefficients() const {
  std::vector<Cx> total = expand_product(leading_, roots_);
  for (const InterpTerm& t : terms_) {
    std::vector<Cx> part = expand_product(t.weight, roots_, t.skip_index);
    if (part.size() > total.size()) total.resize(part.size(), Cx(0.0));
    for (std::size_t k = 0; k < part.size(); ++k) total[k] += part[k];
  }
  return total;
}

double EntireFn::coefficient_scale() const {
  double s = 0.0;
  for (const Cx& c : coefficients()) s = std::max(s, std::abs(c));
  return s;
}

EntireFn build_weierstrass(const std::vector<Cx>& zeros) {
  require_finite(zeros, "zeros");
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    for (std::size_t j = i + 1; j < zeros.size(); ++j) {
      if (std::abs(zeros[i] - zeros[j]) <= 1e-12) {
        throw DuplicateZero("zeros " + fmt_complex(zeros[i]) + " and " +
                            fmt_complex(zeros[j]) + " are closer than 1e-12");
      }
    }
  }
  return EntireFn::product(Cx(1.0), zeros);
}

EntireFn build_interpolant(const std::vector<std::pair<Cx, Cx>>& nodes,
                           const EntireFn& b) {
  if (!b.is_product()) {
    throw std::invalid_argument("interpolant base must be a factored product");
  }
  if (nodes.empty()) return EntireFn::constant(Cx(0.0));
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!is_finite(nodes[i].first) || !is_finite(nodes[i].second))
      throw std::invalid_argument("interpolation nodes must be finite");
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (std::abs(nodes[i].first - nodes[j].first) <= 1e-12) {
        throw CoincidentPoints("interpolation nodes " + fmt_complex(nodes[i].first) +
                               " and " + fmt_complex(nodes[j].first) + " coincide");
      }
    }
  }

  std::vector<InterpTerm> terms;
  terms.reserve(nodes.size());
  for (const auto& [xi, yi] : nodes) {
    EntireFn::Jet bj = b.jet(xi);
    if (std::abs(bj.f) > 1e-9 * (1.0 + std::abs(bj.df))) {
      throw NodeNotZeroOfB("node " + fmt_complex(xi) + " is not a zero of b, |b| = " +
                           fmt_double(std::abs(bj.f)));
    }
    if (std::abs(bj.df) < 1e-12) {
      throw ZeroDerivative("b' vanishes at node " + fmt_complex(xi) +
                           ", zero is not simple");
    }
    std::size_t nearest = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < b.roots().size(); ++k) {
      double d = std::abs(b.roots()[k] - xi);
      if (d < best) {
        best = d;
        nearest = k;
      }
    }
    terms.push_back(InterpTerm{xi, yi * b.leading() / bj.df, nearest});
  }

  EntireFn a = EntireFn::with_terms(Cx(0.0), b.roots(), std::move(terms));
  for (const auto& [xi, yi] : nodes) {
    Cx got = a.eval(xi);
    if (std::abs(got - yi) > 1e-9 * (1.0 + std::abs(yi))) {
      throw Error("interpolant failed to reproduce its node at " + fmt_complex(xi));
    }
  }
  return a;
}

}  // namespace holo
