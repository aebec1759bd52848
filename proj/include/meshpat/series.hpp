#pragma once

// Truncated exponential generating functions with polynomial coefficients.
//
// An EgfSeries of order N holds P_0..P_N and denotes sum_{n<=N} P_n t^n/n!.
// Terms are the n!-scaled coefficients, so every operation below stays in
// integer arithmetic.

#include "meshpat/poly.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace meshpat {

class EgfSeries {
 public:
  /// terms must be nonempty; order() == terms.size() - 1.
  explicit EgfSeries(std::vector<IntPoly> terms, bool order_reduced = false);

  static EgfSeries constant(const IntPoly& c, std::size_t order);
  static EgfSeries generate(std::size_t order, const std::function<IntPoly(std::size_t)>& term);

  std::size_t order() const { return terms_.size() - 1; }
  const IntPoly& term(std::size_t n) const { return terms_.at(n); }
  const std::vector<IntPoly>& terms() const { return terms_; }
  /// Set when an operation combined operands of different orders and the
  /// result was truncated to the smaller one.
  bool order_reduced() const { return order_reduced_; }

  EgfSeries truncated(std::size_t order) const;

  friend bool operator==(const EgfSeries& a, const EgfSeries& b) { return a.terms_ == b.terms_; }

 private:
  std::vector<IntPoly> terms_;
  bool order_reduced_ = false;
};

EgfSeries egf_add(const EgfSeries& a, const EgfSeries& b);
EgfSeries egf_sub(const EgfSeries& a, const EgfSeries& b);
/// Termwise multiplication by a polynomial in x.
EgfSeries egf_scale(const EgfSeries& a, const IntPoly& factor);
/// Product of EGFs: Q_n = sum_m C(n,m) A_m B_{n-m}.
EgfSeries egf_mul(const EgfSeries& a, const EgfSeries& b);
/// Multiply by 1/(1-t): Q_n = sum_{m<=n} (n!/m!) A_m.
EgfSeries egf_geom_mul(const EgfSeries& a);
/// c0 + integral_0^t A: Q_0 = c0, Q_{n+1} = A_n. Raises the order by one.
EgfSeries egf_integrate(const EgfSeries& a, const IntPoly& c0 = {});
/// d/dt: Q_n = A_{n+1}. Lowers the order by one; requires order >= 1.
EgfSeries egf_derivative(const EgfSeries& a);
/// Reindex sum_n R_{n} t^{n-k}/(n-k)! (A_m = R_{k+m}) into sum_n R_n t^n/n!,
/// filling R_0..R_{k-1} from prefix. Throws InvalidInput if prefix.size() != k.
EgfSeries egf_shift_embed(const EgfSeries& a, std::size_t k, const std::vector<IntPoly>& prefix);
/// Termwise exact division by a monic polynomial in x.
EgfSeries egf_div_terms(const EgfSeries& a, const IntPoly& monic_divisor);

/// Coefficient sequence of (1 - t*step)^(-c0/step): P_m = prod_{i<m} (c0 + i*step).
/// With step = x this is (1-tx)^{-c0/x}; with step = 1 it is (1-t)^{-c0}.
EgfSeries egf_power_series(const IntPoly& c0, const IntPoly& step, std::size_t order);

}  // namespace meshpat
