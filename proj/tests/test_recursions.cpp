#include "doctest.h"
#include "helpers.hpp"

#include "meshpat/combinatorics.hpp"
#include "meshpat/oracle.hpp"
#include "meshpat/recursions.hpp"

#include <random>

using namespace meshpat;
using meshpat::test::P;

namespace {

Permutation random_perm(std::mt19937& rng, int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(w.begin(), w.end(), rng);
  return Permutation(std::move(w));
}

}  // namespace

TEST_CASE("inserting a new minimum: the (k,0,0,0) statistic") {
  std::mt19937 rng(20240601);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(n + 1));
    const int k = 1 + static_cast<int>(rng() % 5);
    const Permutation s = random_perm(rng, n);
    const QuadSpec spec = QuadSpec::at_least(k, 0, 0, 0);
    const int before = mmp_count(s, spec);
    const int after = mmp_count(insert_bottom(s, i), spec);
    CAPTURE(s.to_string());
    CAPTURE(i);
    CAPTURE(k);
    CHECK(after == before + (i <= n + 1 - k ? 1 : 0));
  }
}

TEST_CASE("inserting a new minimum: the (a,b,0,0) statistic") {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(n + 1));
    const int a = 1 + static_cast<int>(rng() % 3);
    const int b = 1 + static_cast<int>(rng() % 3);
    const Permutation s = random_perm(rng, n);
    const QuadSpec spec = QuadSpec::at_least(a, b, 0, 0);
    const int before = mmp_count(s, spec);
    const int after = mmp_count(insert_bottom(s, i), spec);
    CAPTURE(s.to_string());
    CAPTURE(i);
    CHECK(after == before + (b + 1 <= i && i <= n + 1 - a ? 1 : 0));
  }
}

TEST_CASE("recursions agree with product formulas") {
  for (int n = 0; n <= 14; ++n) {
    for (int k = 1; k <= 4; ++k) {
      CHECK(r_k000(k, n) == r_k000_closed(k, n));
      CHECK(r_kempty00(k, n) == r_kempty00_closed(k, n));
      CHECK(q_r_k000(k, n) == q_r_k000_closed(k, n));
    }
    for (int k = 0; k <= 3; ++k) CHECK(r_eqk000(k, n) == r_eqk000_closed(k, n));
    CHECK(r_empty000(n) == r_empty000_stirling(n));
    for (int a = 1; a <= 2; ++a) {
      for (int b = 1; b <= 2; ++b) {
        CHECK(r_ab00(a, b, n) == r_ab00_closed(a, b, n));
        CHECK(q_r_ab00(a, b, n) == q_r_ab00_closed(a, b, n));
      }
    }
    if (n >= 2) {
      CHECK(b1010(n) == b1010_closed(n));
      CHECK(b1011(n) == b1011_closed(n));
    }
  }
}

TEST_CASE("small cases") {
  CHECK(r_k000(1, 3) == P({1, 3, 2}));
  CHECK(r_k000(3, 3) == P({6}));
  CHECK(r_empty000(3) == P({0, 2, 3, 1}));
  CHECK(b1010(4) == P({4, 6, 2}));
  CHECK(b1011(5) == P({27, 27, 6}));
  CHECK(q_r_k000(2, 2) == BiPoly::from_q(q_factorial(2)));
}

TEST_CASE("recursions against the oracle") {
  for (int n = 0; n <= 8; ++n) {
    CHECK(r_k000(2, n) == distribution(n, QuadSpec::at_least(2, 0, 0, 0)));
    CHECK(r_ab00(1, 2, n) == distribution(n, QuadSpec::at_least(1, 2, 0, 0)));
    CHECK(r_kempty00(2, n) == distribution(n, QuadSpec::parse("2,empty,0,0")));
    CHECK(r_eqk000(1, n) == distribution(n, QuadSpec::parse("eq:1,0,0,0")));
    CHECK(r_kmax(3, 8)[static_cast<std::size_t>(n)] == kmax_distribution(n, 3));
  }
}

TEST_CASE("known distributions cover symmetric images") {
  const auto kd = known_distribution(QuadSpec::at_least(0, 0, 0, 2), 6);
  REQUIRE(kd.has_value());
  CHECK(kd->poly == r_k000(2, 6));
  CHECK_FALSE(known_distribution(QuadSpec::at_least(1, 0, 1, 0), 5).has_value());
  const auto vac = known_distribution(QuadSpec::at_least(0, 0, 0, 0), 4);
  REQUIRE(vac.has_value());
  CHECK(vac->poly == IntPoly::monomial(24, 4));
}

TEST_CASE("block convolution against the oracle") {
  const PermClass n1 = PermClass::parse("block:n1");
  for (int n = 2; n <= 8; ++n) {
    CHECK(block_conv(QuadSpec::at_least(0, 0, 1, 0), QuadSpec::at_least(1, 0, 0, 1), 2, n) ==
          distribution(n, QuadSpec::at_least(1, 0, 1, 1), n1));
    CHECK(block_conv(QuadSpec::at_least(0, 0, 1, 0), QuadSpec::at_least(1, 0, 0, 0), 2, n) ==
          distribution(n, QuadSpec::at_least(1, 0, 1, 0), n1));
  }
}
