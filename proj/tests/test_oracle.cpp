#include "doctest.h"
#include "helpers.hpp"

#include "meshpat/combinatorics.hpp"
#include "meshpat/errors.hpp"
#include "meshpat/oracle.hpp"

using namespace meshpat;
using meshpat::test::P;

namespace {
IntPoly R(int n, const char* spec, const PermClass& cls = PermClass::all()) {
  return distribution(n, QuadSpec::parse(spec), cls);
}
}  // namespace

TEST_CASE("frozen distributions over S_n") {
  CHECK(R(5, "1,0,1,0") == P({42, 46, 26, 6}));
  CHECK(R(4, "empty,0,0,0") == P({0, 6, 11, 6, 1}));
  CHECK(R(3, "0,0,0,0") == P({0, 0, 0, 6}));
  CHECK(R(3, "1,0,0,0") == P({1, 3, 2}));
  CHECK(R(6, "1,0,2,0") == P({394, 232, 82, 12}));
  CHECK(R(6, "2,0,2,0") == P({632, 80, 8}));
  CHECK(R(6, "1,1,1,1") == P({464, 224, 32}));
  CHECK(R(6, "1,0,1,1") == P({252, 300, 144, 24}));
  CHECK(R(6, "empty,1,0,0") == P({120, 274, 225, 85, 15, 1}));
  CHECK(R(6, "eq:1,0,eq:1,0") == P({461, 194, 54, 10, 1}));
  CHECK(R(6, "2,empty,1,0") == P({548, 142, 28, 2}));
  CHECK(kmax_distribution(7, 2) == P({2484, 1624, 735, 175, 21, 1}));
  CHECK(R(0, "1,0,1,0") == P({1}));
  CHECK(R(1, "0,0,0,0") == P({0, 1}));
}

TEST_CASE("frozen distributions over restricted classes") {
  CHECK(R(6, "1,0,1,1", PermClass::one_before_n()) == P({81, 162, 99, 18}));
  CHECK(R(6, "1,0,1,1", PermClass::parse("block:n1")) == P({41, 50, 23, 6}));
  CHECK(class_size(6, PermClass::one_before_n()) == 360);
  CHECK(class_size(6, PermClass::parse("block:n1")) == 120);
  CHECK(class_size(6, PermClass::block(BlockPattern::gamma(2, 1))) == 24);
}

TEST_CASE("frozen joint distribution with coinversions") {
  const BiPoly r = q_distribution(4, QuadSpec::at_least(1, 1, 0, 0));
  CHECK(r.eval_q(1) == R(4, "1,1,0,0"));
  CHECK(r.coefficient(0, 3) == 2);
  CHECK(r.coefficient(2, 4) == 1);
  CHECK(r.eval_x(1) == q_factorial(4));
}

TEST_CASE("class parsing") {
  CHECK(PermClass::parse("all") == PermClass::all());
  CHECK(PermClass::parse("one-before-n") == PermClass::one_before_n());
  CHECK(PermClass::parse("block:n1") == PermClass::block(BlockPattern::gamma(1, 1)));
  CHECK(BlockPattern::gamma(2, 1).resolve(5) == std::vector<int>{5, 4, 1});
  CHECK_THROWS_AS(PermClass::parse("some"), InvalidInput);
  CHECK_THROWS_AS(PermClass::parse("block:"), InvalidInput);
}

TEST_CASE("mass: x = 1 gives the class size") {
  const std::vector<Pattern> pats = {QuadSpec::at_least(1, 0, 1, 0), QuadSpec::parse("empty,2,eq:1,0"), KMax{2}};
  for (int n = 0; n <= 7; ++n) {
    for (const auto& p : pats) {
      CHECK(distribution(n, p).eval(1) == factorial(static_cast<std::size_t>(n)));
    }
    if (n >= 2) {
      CHECK(distribution(n, pats[0], PermClass::one_before_n()).eval(1) == factorial(static_cast<std::size_t>(n)) / 2);
      CHECK(distribution(n, pats[0], PermClass::parse("block:n1")).eval(1) ==
            factorial(static_cast<std::size_t>(n - 1)));
    }
  }
}

TEST_CASE("determinism under thread counts and partitions") {
  const Pattern p = QuadSpec::at_least(1, 0, 1, 1);
  OracleOptions serial;
  serial.threads = 1;
  serial.partitions = 1;
  const IntPoly ref = distribution(8, p, PermClass::all(), serial);
  for (unsigned t : {2u, 3u, 4u}) {
    for (unsigned parts : {2u, 5u, 8u, 17u}) {
      OracleOptions o;
      o.threads = t;
      o.partitions = parts;
      CHECK(distribution(8, p, PermClass::all(), o) == ref);
      CHECK(distribution(7, p, PermClass::one_before_n(), o) == distribution(7, p, PermClass::one_before_n(), serial));
      CHECK(q_distribution(6, QuadSpec::at_least(1, 0, 0, 0), o) ==
            q_distribution(6, QuadSpec::at_least(1, 0, 0, 0), serial));
    }
  }
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(R(11, "1,0,0,0"), ResourceLimit);
  CHECK_NOTHROW(R(0, "1,0,0,0"));
  OracleOptions o;
  o.cap = 5;
  CHECK_THROWS_AS(distribution(6, QuadSpec::at_least(1, 0, 0, 0), PermClass::all(), o), ResourceLimit);
  CHECK_NOTHROW(distribution(5, QuadSpec::at_least(1, 0, 0, 0), PermClass::all(), o));
  CHECK_THROWS_AS(R(-1, "1,0,0,0"), InvalidInput);
}
