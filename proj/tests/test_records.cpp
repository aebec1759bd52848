#include "doctest.h"
#include "helpers.hpp"

#include "meshpat/errors.hpp"
#include "meshpat/records.hpp"

#include <random>

using namespace meshpat;
using meshpat::test::P;

TEST_CASE("records render to the documented schema") {
  const auto r = make_record(5, "1,0,1,0", "all", P({42, 46, 26, 6}), "oracle");
  CHECK(render_json(r) ==
        R"({"class":"all","coeffs":["42","46","26","6"],"n":5,"provenance":"oracle","spec":"1,0,1,0"})");
}

TEST_CASE("JSON round trip") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<BigInt> c;
    const std::size_t len = rng() % 12;
    for (std::size_t i = 0; i < len; ++i) c.emplace_back(BigInt(rng()) * BigInt(rng()));
    if (!c.empty() && c.back() == 0) c.back() = 1;
    const auto r = make_record(static_cast<int>(rng() % 13), "eq:1,empty,2,0", "block:n,1", IntPoly(c),
                               "recursion:r_k000(k=1)[1,0,0,0]");
    CHECK(parse_record(render_json(r)) == r);
  }
  const BiPoly q({{1, 2}, {0, 0, 3}});
  const auto rq = make_record(3, "1,0,0,0", "all", q, "oracle");
  CHECK(rq.bivariate);
  CHECK(parse_record(render_json(rq)) == rq);
}

TEST_CASE("malformed records are rejected") {
  CHECK_THROWS_AS(parse_record("{"), InvalidInput);
  CHECK_THROWS_AS(parse_record(R"({"n":1})"), InvalidInput);
  CHECK_THROWS_AS(parse_record(R"({"n":"x","spec":"","class":"all","coeffs":[],"provenance":""})"), InvalidInput);
}
