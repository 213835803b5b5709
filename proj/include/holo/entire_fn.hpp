#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "holo/complex_util.hpp"

namespace holo {

/// One interpolation term w * prod_{k != skip}(x - r_k) anchored at a zero
/// of the underlying product. The reduced factor arrays are precomputed in
/// split form so batch evaluation can reuse the product kernels.
struct InterpTerm {
  Cx node;
  Cx weight;
  std::size_t skip_index;
};

/// Finite closed form for the entire functions this library constructs:
///
///   f(x) = leading * prod_i (x - r_i) + sum_j w_j * prod_{k != skip_j} (x - r_k)
///
/// Every stored piece is a polynomial, so evaluation is finite at every
/// finite point. Products are kept in factored form; expansion to monomial
/// coefficients exists only as a reporting helper.
class EntireFn {
 public:
  EntireFn() : leading_(0.0) {}

  static EntireFn constant(Cx c);
  static EntireFn product(Cx leading, std::vector<Cx> roots);
  static EntireFn with_terms(Cx leading, std::vector<Cx> roots,
                             std::vector<InterpTerm> terms);

  Cx leading() const { return leading_; }
  const std::vector<Cx>& roots() const { return roots_; }
  const std::vector<InterpTerm>& terms() const { return terms_; }
  bool is_product() const { return terms_.empty(); }
  std::size_t degree() const;

  Cx eval(Cx x) const;
  Cx deriv(Cx x) const;

  struct Jet {
    Cx f;
    Cx df;
    Cx ddf;
  };
  Jet jet(Cx x) const;

  /// Batch value and derivative. f must hold n slots; df may be null.
  void eval_many(const Cx* xs, std::size_t n, Cx* f, Cx* df) const;

  /// Monomial coefficients, ascending powers.
  std::vector<Cx> coefficients() const;
  /// Largest coefficient magnitude of the expanded form.
  double coefficient_scale() const;

 private:
  Cx leading_;
  std::vector<Cx> roots_;
  std::vector<InterpTerm> terms_;

  // split-form factor arrays, cached for the kernels
  std::vector<double> roots_re_, roots_im_;
  std::vector<std::vector<double>> term_re_, term_im_;

  void rebuild_split_cache();
};

/// Monic product with simple zeros exactly at the given points and no
/// others. Zeros closer than 1e-12 to each other are rejected.
EntireFn build_weierstrass(const std::vector<Cx>& zeros);

/// Interpolant a with a(x_i) = y_i built on the zero set of b:
///   a(x) = sum_i y_i * b(x) / (b'(x_i) (x - x_i))
/// Each node must be a simple zero of b, which makes every summand a
/// polynomial and a entire by construction.
EntireFn build_interpolant(const std::vector<std::pair<Cx, Cx>>& nodes,
                           const EntireFn& b);

}  // namespace holo
