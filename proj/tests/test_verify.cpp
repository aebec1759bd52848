#include "doctest.h"

#include "meshpat/errors.hpp"
#include "meshpat/verify.hpp"

using namespace meshpat;

TEST_CASE("every suite passes its hard checks") {
  VerifyOptions o;
  o.max_n = 7;
  for (const auto& s : verify_suites()) {
    if (s == "all") continue;
    CAPTURE(s);
    const Report r = run_suite(s, o);
    CHECK(r.checks().size() > 0);
    CHECK_FALSE(r.hard_failed());
    for (const auto& c : r.checks()) {
      if (!c.passed && !c.soft) FAIL_CHECK(c.suite << ": " << c.name << " n=" << c.n.value_or(-1));
    }
  }
  CHECK_THROWS_AS(run_suite("unknown"), InvalidInput);
}

TEST_CASE("soft checks never fail a report") {
  Report r;
  Check c;
  c.soft = true;
  r.add(c);
  CHECK_FALSE(r.hard_failed());
  CHECK(r.count(false, true) == 1);
  c.soft = false;
  r.add(c);
  CHECK(r.hard_failed());
  CHECK(c.status() == "fail");
}
