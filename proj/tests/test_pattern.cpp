#include "doctest.h"

#include "meshpat/errors.hpp"
#include "meshpat/pattern.hpp"

#include <algorithm>

using namespace meshpat;

TEST_CASE("bound tokens") {
  CHECK(Bound::parse("3") == Bound::at_least(3));
  CHECK(Bound::parse("ge:2") == Bound::at_least(2));
  CHECK(Bound::parse("eq:2") == Bound::exactly(2));
  CHECK(Bound::parse("empty") == Bound::empty());
  CHECK(Bound::empty() == Bound::exactly(0));
  CHECK_FALSE(Bound::at_least(0) == Bound::exactly(0));
  for (const char* bad : {"", "-1", "eq:", "ge:x", "emptyish", "1.5"}) {
    CHECK_THROWS_AS(Bound::parse(bad), InvalidInput);
  }
}

TEST_CASE("spec parsing and rendering") {
  const auto s = QuadSpec::parse("1,empty,eq:2,0");
  CHECK(s.q[0] == Bound::at_least(1));
  CHECK(s.q[1] == Bound::empty());
  CHECK(s.q[2] == Bound::exactly(2));
  CHECK(QuadSpec::parse(s.to_string()) == s);
  CHECK_THROWS_AS(QuadSpec::parse("1,0,0"), InvalidInput);
  CHECK_THROWS_AS(QuadSpec::parse("1,0,0,0,0"), InvalidInput);
  CHECK(pattern_string(KMax{3}) == "kmax:3");
}

TEST_CASE("matching on a worked example") {
  const Permutation s({2, 4, 1, 3});
  CHECK(matches(s, 1, QuadSpec::at_least(1, 0, 0, 0)));
  CHECK_FALSE(matches(s, 2, QuadSpec::at_least(1, 0, 0, 0)));
  CHECK(matches(s, 3, QuadSpec::at_least(1, 2, 0, 0)));
  CHECK(matches(s, 2, QuadSpec::parse("empty,0,1,0")));
  CHECK(mmp_count(s, QuadSpec::at_least(0, 0, 0, 0)) == 4);
  CHECK(mmp_count(s, QuadSpec::parse("empty,0,0,0")) == 2);
  CHECK(mmp_count(Permutation({2, 1, 3}), QuadSpec::at_least(1, 0, 0, 0)) == 2);
}

TEST_CASE("k<=max pattern") {
  // 1 2 3: position 1 sees 2,3 before the maximum 3 of its quadrant I
  const Permutation s({1, 2, 3});
  CHECK(matches_kmax(s, 1, 2));
  CHECK_FALSE(matches_kmax(s, 1, 3));
  CHECK_FALSE(matches_kmax(s, 3, 1));
  CHECK(mmp_count(s, KMax{1}) == 2);
  // quadrant II must be empty
  CHECK_FALSE(matches_kmax(Permutation({3, 1, 2}), 2, 1));
  const std::vector<int> w = {2, 5, 1, 3, 4};
  CHECK(kmax_count_word(w, 1) == mmp_count(Permutation(w), KMax{1}));
}

TEST_CASE("symmetry orbits") {
  const auto o = quad_orbit(QuadSpec::at_least(1, 0, 1, 0));
  CHECK(o.size() == 2);
  CHECK(std::find(o.begin(), o.end(), QuadSpec::at_least(0, 1, 0, 1)) != o.end());
  CHECK(quad_orbit(QuadSpec::at_least(1, 1, 1, 1)).size() == 1);
  CHECK(quad_orbit(QuadSpec::at_least(1, 0, 0, 0)).size() == 4);
  CHECK(quad_orbit(QuadSpec::at_least(2, 1, 0, 0)).size() == 8);
}
