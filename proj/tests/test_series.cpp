#include "doctest.h"
#include "helpers.hpp"

#include "meshpat/combinatorics.hpp"
#include "meshpat/egf_catalog.hpp"
#include "meshpat/errors.hpp"
#include "meshpat/oracle.hpp"
#include "meshpat/recursions.hpp"
#include "meshpat/series.hpp"

using namespace meshpat;
using meshpat::test::P;

TEST_CASE("series calculus") {
  const auto ones = EgfSeries::constant(P({1}), 0);
  CHECK(ones.order() == 0);
  // e^t * e^t = e^{2t}
  const auto et = EgfSeries::generate(6, [](std::size_t) { return P({1}); });
  const auto e2t = egf_mul(et, et);
  for (std::size_t n = 0; n <= 6; ++n) CHECK(e2t.term(n) == IntPoly::constant(pow_int(2, n)));
  CHECK(egf_derivative(egf_integrate(et)).truncated(5) == et.truncated(5));
  CHECK(egf_sub(e2t, e2t).term(3).is_zero());
  // (1-t)^{-1}: n!
  const auto geo = egf_geom_mul(EgfSeries::generate(5, [](std::size_t n) { return n == 0 ? P({1}) : P({}); }));
  CHECK(geo.term(5) == IntPoly::constant(120));
}

TEST_CASE("named series") {
  const auto p = build_series("P_k000", 4, 1);
  CHECK(p.term(2) == P({1, 3, 2}));
  CHECK(p.term(4) == r_k000_closed(1, 5));
  const auto b = build_series("B_1011", 4);
  CHECK(b.term(0) == P({1}));
  CHECK(b.term(1) == P({3}));
  CHECK(b.term(2) == P({9, 3}));
  CHECK(build_series("R_kmax", 4, 2).term(4) == P({17, 6, 1}));
  CHECK(build_series("R_empty000", 4).term(4) == P({0, 6, 11, 6, 1}));
  CHECK(series_offset("B_1010") == 2);
  CHECK(series_offset("P_k000", 3) == 3);
  CHECK_THROWS_AS(build_series("nope", 3), InvalidInput);
  CHECK_THROWS_AS(build_series("R_kmax", 3, 0), InvalidInput);
}

TEST_CASE("every catalog entry builds") {
  for (const auto& info : series_catalog()) {
    const int k = info.uses_k ? std::max(1, info.min_k) : 0;
    const auto s = build_series(info.id, 6, k);
    CHECK(s.order() == 6);
  }
}
