#include "meshpat/egf_catalog.hpp"

#include "meshpat/combinatorics.hpp"
#include "meshpat/errors.hpp"

#include <algorithm>

namespace meshpat {

const std::vector<SeriesInfo>& series_catalog() {
  static const std::vector<SeriesInfo> catalog = {
      {"P_k000", "k! (1-tx)^-(k/x+1): R_n^(k,0,0,0) shifted by k", true, 1},
      {"R_k000", "R^(k,0,0,0)(t,x) from the shifted product series", true, 1},
      {"P_eqk000", "k! (1-t)^-(x+k): R_n^(=k,0,0,0) shifted by k", true, 0},
      {"R_eqk000", "R^(=k,0,0,0)(t,x) from the shifted product series", true, 0},
      {"R_empty000", "(1-t)^-x: right-to-left maxima", false, 0},
      {"R_1empty", "1 + ((1-t)^-x - 1)/x", false, 0},
      {"R_kempty", "R^(k,empty,0,0)(t,x) by rescaling R^(1,empty,0,0)", true, 1},
      {"R_kmax", "1 + int_0^t R^(k-1,empty,0,0)(z,x)/(1-z) dz", true, 1},
      {"B_1010", "(1-tx)^(-1-2/x): B_n^(1,0,1,0) shifted by 2", false, 0},
      {"B_1010_product", "R^(0,0,1,0) R^(1,0,0,0) / (1-tx): B_n^(1,0,1,0) shifted by 2", false, 0},
      {"B_1011", "(1-tx)^(-3/x): B_n^(1,0,1,1) shifted by 2", false, 0},
      {"block_n1_1010", "(1-tx)^(-2/x): (1,0,1,0) over permutations containing n1, shifted by 2", false, 0},
      {"block_n1_1011", "R^(0,0,1,0) R^(1,0,0,1): (1,0,1,1) over permutations containing n1, shifted by 2", false, 0},
  };
  return catalog;
}

namespace {

const SeriesInfo& lookup(const std::string& id) {
  const auto& cat = series_catalog();
  auto it = std::find_if(cat.begin(), cat.end(), [&](const SeriesInfo& s) { return s.id == id; });
  if (it == cat.end()) throw InvalidInput("unknown series id '" + id + "'");
  return *it;
}

IntPoly lin(long long a, long long b) { return IntPoly{a, b}; }

IntPoly fact(int n) { return IntPoly::constant(factorial(static_cast<std::size_t>(n))); }

EgfSeries embed_with_factorials(const EgfSeries& p, int k, std::size_t order) {
  std::vector<IntPoly> prefix;
  for (int n = 0; n < k; ++n) prefix.push_back(fact(n));
  EgfSeries r = egf_shift_embed(p, static_cast<std::size_t>(k), prefix);
  return r.order() > order ? r.truncated(order) : r;
}

EgfSeries r_1empty(std::size_t order) {
  std::vector<IntPoly> terms = egf_power_series(IntPoly::x(), IntPoly::one(), order).terms();
  terms[0] = IntPoly();
  EgfSeries r = egf_div_terms(EgfSeries(std::move(terms)), IntPoly::x());
  std::vector<IntPoly> out = r.terms();
  out[0] = IntPoly::one();
  return EgfSeries(std::move(out));
}

EgfSeries r_kempty(int k, std::size_t order) {
  EgfSeries base = r_1empty(order);
  if (k == 1) return base;
  // subtract 1 + t + sum_{j=2}^k t^j/j! (x+1)...(x+j-1), i.e. the terms 0..k of base
  std::vector<IntPoly> low(order + 1);
  for (std::size_t j = 0; j <= std::min<std::size_t>(order, static_cast<std::size_t>(k)); ++j) low[j] = base.term(j);
  const EgfSeries tail = egf_sub(base, EgfSeries(low));
  const IntPoly divisor = rising_product(lin(1, 1), IntPoly::one(), static_cast<std::size_t>(k - 1));
  const EgfSeries scaled = egf_div_terms(egf_scale(tail, fact(k)), divisor);
  std::vector<IntPoly> head(order + 1);
  for (std::size_t j = 0; j <= std::min<std::size_t>(order, static_cast<std::size_t>(k)); ++j) {
    head[j] = fact(static_cast<int>(j));  // t^j = j! t^j/j!
  }
  return egf_add(EgfSeries(head), scaled);
}

}  // namespace

int series_offset(const std::string& id, int k) {
  lookup(id);
  if (id == "P_k000" || id == "P_eqk000") return k;
  if (id.starts_with("B_") || id.starts_with("block_")) return 2;
  return 0;
}

EgfSeries build_series(const std::string& id, std::size_t order, int k) {
  const SeriesInfo& info = lookup(id);
  if (info.uses_k && k < info.min_k) {
    throw InvalidInput("series " + id + " needs k >= " + std::to_string(info.min_k));
  }
  if (order > 200) throw ResourceLimit("series order is limited to 200");

  if (id == "P_k000") {
    return egf_scale(egf_power_series(lin(k, 1), IntPoly::x(), order), fact(k));
  }
  if (id == "R_k000") return embed_with_factorials(build_series("P_k000", order, k), k, order);
  if (id == "P_eqk000") {
    return egf_scale(egf_power_series(lin(k, 1), IntPoly::one(), order), fact(k));
  }
  if (id == "R_eqk000") return embed_with_factorials(build_series("P_eqk000", order, k), k, order);
  if (id == "R_empty000") return egf_power_series(IntPoly::x(), IntPoly::one(), order);
  if (id == "R_1empty") return r_1empty(order);
  if (id == "R_kempty") return r_kempty(k, order);
  if (id == "R_kmax") {
    if (k == 1) return r_1empty(order);
    if (order == 0) return EgfSeries({IntPoly::one()});
    return egf_integrate(egf_geom_mul(r_kempty(k - 1, order - 1)), IntPoly::one());
  }
  if (id == "B_1010") return egf_power_series(lin(2, 1), IntPoly::x(), order);
  if (id == "B_1010_product") {
    const EgfSeries r1 = build_series("R_k000", order, 1);
    return egf_mul(egf_power_series(IntPoly::x(), IntPoly::x(), order), egf_mul(r1, r1));
  }
  if (id == "B_1011") return egf_power_series(IntPoly::constant(3), IntPoly::x(), order);
  if (id == "block_n1_1010") return egf_power_series(IntPoly::constant(2), IntPoly::x(), order);
  // block_n1_1011
  return egf_mul(build_series("R_k000", order, 1), build_series("R_k000", order, 2));
}

}  // namespace meshpat
