#include "meshpat/series.hpp"

#include "meshpat/combinatorics.hpp"
#include "meshpat/errors.hpp"

#include <algorithm>
#include <utility>

namespace meshpat {

EgfSeries::EgfSeries(std::vector<IntPoly> terms, bool order_reduced)
    : terms_(std::move(terms)), order_reduced_(order_reduced) {
  if (terms_.empty()) throw InvalidInput("EgfSeries needs at least the constant term");
}

EgfSeries EgfSeries::constant(const IntPoly& c, std::size_t order) {
  std::vector<IntPoly> t(order + 1);
  t[0] = c;
  return EgfSeries(std::move(t));
}

EgfSeries EgfSeries::generate(std::size_t order, const std::function<IntPoly(std::size_t)>& term) {
  std::vector<IntPoly> t;
  t.reserve(order + 1);
  for (std::size_t n = 0; n <= order; ++n) t.push_back(term(n));
  return EgfSeries(std::move(t));
}

EgfSeries EgfSeries::truncated(std::size_t order) const {
  const std::size_t keep = std::min(order, this->order());
  return EgfSeries(std::vector<IntPoly>(terms_.begin(), terms_.begin() + static_cast<std::ptrdiff_t>(keep + 1)),
                   order_reduced_);
}

namespace {

std::size_t common_order(const EgfSeries& a, const EgfSeries& b, bool& reduced) {
  reduced = a.order_reduced() || b.order_reduced() || a.order() != b.order();
  return std::min(a.order(), b.order());
}

}  // namespace

EgfSeries egf_add(const EgfSeries& a, const EgfSeries& b) {
  bool reduced = false;
  const std::size_t n = common_order(a, b, reduced);
  std::vector<IntPoly> t(n + 1);
  for (std::size_t i = 0; i <= n; ++i) t[i] = a.term(i) + b.term(i);
  return EgfSeries(std::move(t), reduced);
}

EgfSeries egf_sub(const EgfSeries& a, const EgfSeries& b) {
  bool reduced = false;
  const std::size_t n = common_order(a, b, reduced);
  std::vector<IntPoly> t(n + 1);
  for (std::size_t i = 0; i <= n; ++i) t[i] = a.term(i) - b.term(i);
  return EgfSeries(std::move(t), reduced);
}

EgfSeries egf_scale(const EgfSeries& a, const IntPoly& factor) {
  std::vector<IntPoly> t;
  t.reserve(a.order() + 1);
  for (const auto& p : a.terms()) t.push_back(p * factor);
  return EgfSeries(std::move(t), a.order_reduced());
}

EgfSeries egf_mul(const EgfSeries& a, const EgfSeries& b) {
  bool reduced = false;
  const std::size_t n = common_order(a, b, reduced);
  std::vector<IntPoly> t(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    for (std::size_t m = 0; m <= k; ++m) t[k] += (a.term(m) * b.term(k - m)) * binomial(k, m);
  }
  return EgfSeries(std::move(t), reduced);
}

EgfSeries egf_geom_mul(const EgfSeries& a) {
  std::vector<IntPoly> t(a.order() + 1);
  for (std::size_t k = 0; k <= a.order(); ++k) {
    for (std::size_t m = 0; m <= k; ++m) t[k] += a.term(m) * falling_ratio(k, m);
  }
  return EgfSeries(std::move(t), a.order_reduced());
}

EgfSeries egf_integrate(const EgfSeries& a, const IntPoly& c0) {
  std::vector<IntPoly> t;
  t.reserve(a.order() + 2);
  t.push_back(c0);
  for (const auto& p : a.terms()) t.push_back(p);
  return EgfSeries(std::move(t), a.order_reduced());
}

EgfSeries egf_derivative(const EgfSeries& a) {
  if (a.order() == 0) throw InvalidInput("egf_derivative: series of order 0");
  return EgfSeries(std::vector<IntPoly>(a.terms().begin() + 1, a.terms().end()), a.order_reduced());
}

EgfSeries egf_shift_embed(const EgfSeries& a, std::size_t k, const std::vector<IntPoly>& prefix) {
  if (prefix.size() != k) throw InvalidInput("egf_shift_embed: prefix length must equal the offset");
  std::vector<IntPoly> t = prefix;
  t.insert(t.end(), a.terms().begin(), a.terms().end());
  return EgfSeries(std::move(t), a.order_reduced());
}

EgfSeries egf_div_terms(const EgfSeries& a, const IntPoly& monic_divisor) {
  std::vector<IntPoly> t;
  t.reserve(a.order() + 1);
  for (const auto& p : a.terms()) t.push_back(p.div_exact(monic_divisor));
  return EgfSeries(std::move(t), a.order_reduced());
}

EgfSeries egf_power_series(const IntPoly& c0, const IntPoly& step, std::size_t order) {
  std::vector<IntPoly> t;
  t.reserve(order + 1);
  IntPoly acc = IntPoly::one();
  for (std::size_t m = 0; m <= order; ++m) {
    t.push_back(acc);
    acc *= c0 + step * BigInt(m);
  }
  return EgfSeries(std::move(t));
}

}  // namespace meshpat
