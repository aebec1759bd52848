// Acceptance criteria AC1..AC10, one PASS/FAIL line each. Exit status is 0
// only when every line passes.

#include "meshpat/combinatorics.hpp"
#include "meshpat/multivar.hpp"
#include "meshpat/oracle.hpp"
#include "meshpat/published.hpp"
#include "meshpat/recursions.hpp"
#include "meshpat/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace meshpat;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  int checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

IntPoly from_ll(const std::vector<long long>& c) {
  std::vector<BigInt> v(c.begin(), c.end());
  return IntPoly(std::move(v));
}

BigInt mass(const std::vector<long long>& c) {
  BigInt s = 0;
  for (long long v : c) s += v;
  return s;
}

// Every hard check of the report passes; soft checks are tallied only.
void expect_report(Outcome& o, const Report& r, const std::function<bool(const Check&)>& keep) {
  int kept = 0;
  for (const auto& c : r.checks()) {
    if (!keep(c)) continue;
    ++kept;
    if (!c.soft) o.expect(c.passed, c.suite + ": " + c.name + (c.n ? " n=" + std::to_string(*c.n) : ""));
  }
  o.expect(kept > 0, "report contains the required checks");
}

bool has(const Check& c, const std::string& needle) { return c.name.find(needle) != std::string::npos; }

Report suite(const std::string& name, int max_n) {
  VerifyOptions vo;
  vo.max_n = max_n;
  return run_suite(name, vo);
}

void ac1(Outcome& o) {
  int exact = 0;
  int excluded = 0;
  for (const auto& table : published_tables()) {
    for (const auto& row : table.rows) {
      const IntPoly oracle = distribution(row.n, table.pattern, table.cls);
      const std::string where = table.label + " n=" + std::to_string(row.n);
      if (!row.misprinted) {
        o.expect(oracle == from_ll(row.coeffs), where);
        ++exact;
        continue;
      }
      // A misprinted row is excluded from exact matching only when it is a
      // layout garble, or when its printed coefficients violate x=1 => |class|.
      if (!row.printed.empty()) {
        o.expect(mass(row.printed) != class_size(row.n, table.cls), where + " printed row is consistent");
      }
      o.expect(oracle == from_ll(row.coeffs), where + " repaired");
      o.expect(oracle.eval(1) == class_size(row.n, table.cls), where + " mass");
      ++excluded;
    }
  }
  o.detail << exact << " printed rows exact, " << excluded << " misprinted rows checked against the oracle";
}

void ac2(Outcome& o) {
  const Report r = suite("closed-forms", 8);
  expect_report(o, r, [](const Check&) { return true; });
  for (const char* fam : {"r_k000(k=4)", "r_eqk000(k=3)", "r_ab00(a=2,b=2)", "r_kempty00(k=3)", "r_kmax(k=4)"}) {
    int hits = 0;
    for (const auto& c : r.checks()) hits += c.name.starts_with(fam) && c.passed;
    o.expect(hits >= 18, std::string(fam) + " covered for n <= 8");
  }
  o.detail << r.checks().size() << " checks";
}

void ac3(Outcome& o) {
  const Report r = suite("multivar", 8);
  expect_report(o, r, [](const Check& c) { return !c.soft; });
  std::set<std::string> engines;
  for (const auto& c : r.checks()) {
    if (has(c, "specialization = oracle") && c.passed) engines.insert(c.name.substr(0, c.name.find(' ')));
  }
  for (const char* e : {"f1010", "f10a0:2", "g2020", "f1011", "h1111"}) {
    o.expect(engines.count(e) == 1, std::string(e) + " specialization checked");
  }
  int direct = 0;
  for (const auto& c : r.checks()) direct += has(c, "= direct construction") && c.passed && c.n == 7;
  o.expect(direct == 5, "direct construction at n = 7 for all engines");
  o.detail << engines.size() << " engines, n <= 8 against the oracle, n <= 7 against S_n";
}

void ac4(Outcome& o) {
  const Report r = suite("symmetry", 7);
  expect_report(o, r, [](const Check&) { return true; });
  std::set<std::string> orbits;
  for (const auto& c : r.checks()) {
    if (has(c, "orbit of")) orbits.insert(c.name);
  }
  // Burnside count of {0,1,2,empty}^4 under the eight symmetries
  o.expect(orbits.size() == 55, "55 orbits");
  o.detail << orbits.size() << " orbits covering all 256 specs, n <= 7";
}

void ac5(Outcome& o) {
  const Report r = suite("qanalog", 7);
  expect_report(o, r, [](const Check&) { return true; });
  bool witness = false;
  for (const auto& c : r.checks()) {
    witness = witness || (has(c, "q_r_ab00(a=1,b=1) differs from q_r_k000(k=2)") && c.n == 3 && c.passed);
  }
  o.expect(witness, "inequality witnessed at (a,b) = (1,1), n = 3");
  o.expect(q_r_ab00(1, 1, 3) != q_r_k000(2, 3), "direct witness");
  o.expect(q_r_ab00(1, 1, 3).eval_q(1) == r_k000(2, 3), "q = 1 collapse of the witness");
  o.detail << r.checks().size() << " checks";
}

void ac6(Outcome& o) {
  const Report r = suite("sequences", 8);
  expect_report(o, r, [](const Check& c) { return !c.soft; });
  const std::vector<long long> catalan = {1, 2, 5, 14, 42, 132, 429, 1430};
  const std::vector<long long> schroeder = {1, 2, 6, 22, 90, 394, 1806, 8558};
  for (int n = 1; n <= 8; ++n) {
    const auto un = static_cast<std::size_t>(n);
    o.expect(distribution(n, QuadSpec::at_least(1, 0, 1, 0)).eval(0) == catalan[un - 1], "Catalan list");
    o.expect(distribution(n, QuadSpec::at_least(1, 0, 2, 0)).eval(0) == schroeder[un - 1], "Schroeder list");
    o.expect(distribution(n, QuadSpec::at_least(1, 0, 1, 1)).eval(0) == binomial(2 * un - 2, un - 1),
             "central binomial");
    // A000774 is indexed from 0: a(m) = m!(1 + H_m), and R_n(0) = a(n-1).
    BigInt a = factorial(un - 1);
    for (std::size_t i = 1; i < un; ++i) a += factorial(un - 1) / i;
    o.expect(kmax_distribution(n, 2).eval(0) == a, "A000774");
  }
  o.detail << "A000774 read with its OEIS offset, R_n(0) = (n-1)! + sum_{i<n} (n-1)!/i";
}

void ac7(Outcome& o) {
  const Report r = suite("bclass", 9);
  expect_report(o, r, [](const Check& c) { return !c.soft; });
  const std::vector<long long> avoid = {1, 2, 5, 14, 41, 122, 365, 1094, 3281};
  const PermClass n1 = PermClass::block(BlockPattern::gamma(1, 1));
  for (int n = 2; n <= 10; ++n) {
    const IntPoly d = distribution(n, QuadSpec::at_least(1, 0, 1, 1), n1);
    o.expect(d.eval(0) == avoid[static_cast<std::size_t>(n - 2)], "n1-block avoiders at n=" + std::to_string(n));
  }
  for (int n = 2; n <= 9; ++n) {
    o.expect(distribution(n, QuadSpec::at_least(1, 0, 1, 0), PermClass::one_before_n()).eval(0) ==
                 pow_int(2, static_cast<std::size_t>(n - 2)),
             "B^(1,0,1,0) avoiders");
  }
  o.detail << "n <= 9, avoider sequence through n = 10";
}

void ac8(Outcome& o) {
  const Report r = suite("series", 9);
  expect_report(o, r, [](const Check&) { return true; });
  for (const char* needle : {"P^(k,0,0,0) product coefficient (k=3)", "reproduces published R^(2<=max",
                             "reproduces published R^(3<=max", "reproduces published R^(4<=max",
                             "(1-t)^{-x} coefficient = rising factorial"}) {
    bool seen = false;
    for (const auto& c : r.checks()) seen = seen || has(c, needle);
    o.expect(seen, needle);
  }
  o.detail << r.checks().size() << " checks through t^9";
}

void ac9(Outcome& o) {
  Report all;
  all.append(suite("sequences", 9));
  all.append(suite("multivar", 8));
  all.append(suite("kmax", 7));
  int a1712 = 0, square = 0, kmax1 = 0, mismatched = 0;
  for (const auto& c : all.checks()) {
    const bool problem = has(c, "A001712") || has(c, "square-permutation") || has(c, "at every position");
    if (!problem) continue;
    o.expect(c.soft, c.name + " is reported as soft");
    a1712 += has(c, "A001712");
    square += has(c, "square-permutation");
    kmax1 += has(c, "at every position");
    mismatched += !c.passed;
  }
  o.expect(a1712 == 5 && square == 8 && kmax1 == 7, "all soft reports present");
  o.detail << a1712 << " A001712, " << square << " square-permutation, " << kmax1 << " k=1 per-position reports; "
           << mismatched << " mismatches (reported only)";
}

Permutation random_perm(std::mt19937& rng, int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(w.begin(), w.end(), rng);
  return Permutation(std::move(w));
}

void ac10(Outcome& o) {
  std::mt19937 rng(1010);
  for (int t = 0; t < 1000; ++t) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(n + 1));
    const int k = 1 + static_cast<int>(rng() % 4);
    const Permutation s = random_perm(rng, n);
    const Permutation s1 = insert_bottom(s, i);
    const auto k000 = QuadSpec::at_least(k, 0, 0, 0);
    o.expect(mmp_count(s1, k000) == mmp_count(s, k000) + (i <= n + 1 - k), "(k,0,0,0) insertion");
    const int a = 1 + static_cast<int>(rng() % 3);
    const int b = 1 + static_cast<int>(rng() % 3);
    const auto ab = QuadSpec::at_least(a, b, 0, 0);
    o.expect(mmp_count(s1, ab) == mmp_count(s, ab) + (b + 1 <= i && i <= n + 1 - a), "(a,b,0,0) insertion");
    o.expect(reverse(reverse(s)) == s && complement(complement(s)) == s && inverse(inverse(s)) == s, "involutions");
  }
  for (int n = 0; n <= 8; ++n) {
    const BigInt nf = factorial(static_cast<std::size_t>(n));
    o.expect(distribution(n, QuadSpec::at_least(1, 0, 1, 1)).eval(1) == nf, "oracle mass");
    o.expect(kmax_distribution(n, 2).eval(1) == nf, "kmax mass");
  }
  for (const char* id : {"f1010", "g2020", "f1011", "h1111"}) {
    const auto runs = MultivarEngine::parse(id).run(9);
    for (int n = 0; n <= 9; ++n) {
      o.expect(runs[static_cast<std::size_t>(n)].total_mass() == factorial(static_cast<std::size_t>(n)),
               std::string(id) + " all-ones mass");
    }
  }
  OracleOptions serial;
  serial.threads = 1;
  serial.partitions = 1;
  const Pattern p = QuadSpec::at_least(1, 1, 1, 1);
  const IntPoly ref = distribution(9, p, PermClass::all(), serial);
  for (unsigned threads : {2u, 4u}) {
    for (unsigned parts : {3u, 9u, 64u}) {
      OracleOptions opt;
      opt.threads = threads;
      opt.partitions = parts;
      o.expect(distribution(9, p, PermClass::all(), opt) == ref, "partition determinism");
    }
  }
  o.detail << "1000 random triples, n <= 9";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
      {"golden polynomial tables", ac1},
      {"oracle = recursion = closed form", ac2},
      {"multivariate engines", ac3},
      {"symmetry suite", ac4},
      {"q-analogue suite", ac5},
      {"sequence suite", ac6},
      {"restricted-class suite", ac7},
      {"series suite", ac8},
      {"soft reports", ac9},
      {"property suite", ac10},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [label, run] : criteria) {
    ++index;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      run(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (index == 1) o.expect(secs < 60.0, "runtime under 60 s");
    failed += !o.pass;
    std::printf("AC%-2d %s  %s [%d checks, %.2fs] %s\n", index, o.pass ? "PASS" : "FAIL", label, o.checks, secs,
                o.detail.str().c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
