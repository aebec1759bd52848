#include "meshpat/multivar.hpp"

#include "meshpat/combinatorics.hpp"
#include "meshpat/errors.hpp"

#include <bit>

namespace meshpat {

void MultiPoly::add(const Monomial& m, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt MultiPoly::total_mass() const {
  BigInt s = 0;
  for (const auto& [m, c] : terms_) s += c;
  return s;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string vars;
    for (int f = 0; f < families_; ++f) {
      for (int p = 0; p < 32; ++p) {
        if (m.masks[static_cast<std::size_t>(f)] >> p & 1u) {
          vars += "*" + names.at(static_cast<std::size_t>(f)) + std::to_string(p);
        }
      }
    }
    std::string term = c.str();
    if (!vars.empty()) term = (c == 1 ? vars.substr(1) : term + vars);
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

IntPoly specialize(const MultiPoly& m, const std::array<bool, kMaxFamilies>& x_families) {
  std::vector<BigInt> co(static_cast<std::size_t>(m.n()) + 1);
  for (const auto& [mono, c] : m.terms()) {
    int e = 0;
    for (std::size_t f = 0; f < kMaxFamilies; ++f) {
      if (x_families[f]) e += std::popcount(mono.masks[f]);
    }
    co[static_cast<std::size_t>(e)] += c;
  }
  return IntPoly(std::move(co));
}

IntPoly specialize(const MultiPoly& m) { return specialize(m, {true, false, false, false}); }

MultivarEngine::MultivarEngine(std::string id, std::vector<QuadSpec> specs, std::vector<std::string> names, Map left,
                               Map right, int new_tag, int min_slot, int end_gap, int range_lo, int range_gap)
    : id_(std::move(id)),
      specs_(std::move(specs)),
      names_(std::move(names)),
      left_(left),
      right_(right),
      new_tag_(new_tag),
      min_slot_(min_slot),
      end_gap_(end_gap),
      range_lo_(range_lo),
      range_gap_(range_gap) {}

MultivarEngine MultivarEngine::f1010() {
  MultivarEngine e = f10a0(1);
  e.id_ = "f1010";
  return e;
}

MultivarEngine MultivarEngine::f10a0(int a) {
  if (a < 1 || a > 20) throw InvalidInput("f10a0 needs 1 <= a <= 20");
  const Bound e = Bound::empty();
  return MultivarEngine("f10a0:" + std::to_string(a),
                        {QuadSpec::at_least(1, 0, a, 0), QuadSpec::of(e, {}, Bound::at_least(a), {})}, {"x", "y"},
                        {0, 0, -1, -1}, {0, 1, -1, -1}, 1, a + 1, 0, a + 1, 0);
}

MultivarEngine MultivarEngine::g2020() {
  const Bound e = Bound::empty();
  return MultivarEngine("g2020",
                        {QuadSpec::at_least(2, 0, 2, 0), QuadSpec::of(Bound::exactly(1), {}, Bound::at_least(2), {}),
                         QuadSpec::of(e, {}, Bound::at_least(2), {})},
                        {"x", "y", "z"}, {0, 0, 1, -1}, {0, 1, 2, -1}, 2, 3, 0, 3, 0);
}

MultivarEngine MultivarEngine::f1011() {
  const Bound e = Bound::empty();
  const Bound one = Bound::at_least(1);
  return MultivarEngine("f1011", {QuadSpec::at_least(1, 0, 1, 1), QuadSpec::of(e, {}, one, one)}, {"x", "y"},
                        {0, 0, -1, -1}, {0, 1, -1, -1}, 1, 2, 1, 2, 1);
}

MultivarEngine MultivarEngine::h1111() {
  const Bound e = Bound::empty();
  const Bound one = Bound::at_least(1);
  return MultivarEngine("h1111",
                        {QuadSpec::at_least(1, 1, 1, 1), QuadSpec::of(e, one, one, one), QuadSpec::of(one, e, one, one),
                         QuadSpec::of(e, e, one, one)},
                        {"x", "y", "z", "w"}, {0, 0, 2, 2}, {0, 1, 0, 1}, 3, 2, 1, 2, 1);
}

MultivarEngine MultivarEngine::parse(const std::string& id) {
  if (id == "f1010") return f1010();
  if (id == "g2020") return g2020();
  if (id == "f1011") return f1011();
  if (id == "h1111") return h1111();
  if (id.starts_with("f10a0:")) {
    try {
      return f10a0(std::stoi(id.substr(6)));
    } catch (const std::logic_error&) {
    }
  }
  throw InvalidInput("unknown multivariate engine '" + id + "' (f1010, f10a0:<a>, g2020, f1011, h1111)");
}

std::pair<int, int> MultivarEngine::range(int n) const { return {range_lo_, n - range_gap_}; }

MultiPoly MultivarEngine::step(const MultiPoly& f) const {
  const int n = f.n();
  if (n + 1 > kMaxMultivarN) throw ResourceLimit("multivariate engines support n <= 30");
  const int fam = families();
  MultiPoly out(n + 1, fam);
  for (const auto& [mono, c] : f.terms()) {
    for (int i = 1; i <= n + 1; ++i) {
      // positions are bits 1..n; bits below i stay, bits >= i move up by one
      const std::uint32_t low = (1u << i) - 1u;
      Monomial next;
      for (int g = 0; g < fam; ++g) {
        const std::uint32_t m = mono.masks[static_cast<std::size_t>(g)];
        const int l = left_[static_cast<std::size_t>(g)];
        const int r = right_[static_cast<std::size_t>(g)];
        if (l >= 0) next.masks[static_cast<std::size_t>(l)] |= m & low;
        if (r >= 0) next.masks[static_cast<std::size_t>(r)] |= (m & ~low) << 1;
      }
      if (i >= min_slot_ && i <= n + 1 - end_gap_) next.masks[static_cast<std::size_t>(new_tag_)] |= 1u << i;
      out.add(next, c);
    }
  }
  return out;
}

std::vector<MultiPoly> MultivarEngine::run(int max_n) const {
  if (max_n < 0) throw InvalidInput("max_n must be >= 0");
  if (max_n > kMaxMultivarN) throw ResourceLimit("multivariate engines support n <= 30");
  std::vector<MultiPoly> out;
  MultiPoly f(0, families());
  f.add(Monomial{}, 1);
  out.push_back(f);
  for (int n = 1; n <= max_n; ++n) out.push_back(step(out.back()));
  return out;
}

MultiPoly MultivarEngine::direct(int n, const OracleOptions& opts) const {
  if (n < 0) throw InvalidInput("n must be >= 0");
  if (n > kMaxMultivarN) throw ResourceLimit("multivariate engines support n <= 30");
  using Acc = std::map<Monomial, std::uint64_t>;
  const auto& specs = specs_;
  Acc acc = reduce_class<Acc>(
      n, PermClass::all(), opts, [] { return Acc{}; },
      [&specs](Acc& a, std::span<const int> w) {
        thread_local std::vector<QuadrantCounts> counts;
        counts.resize(w.size());
        quadrant_counts_all(w, counts);
        Monomial m;
        for (std::size_t p = 0; p < w.size(); ++p) {
          for (std::size_t g = 0; g < specs.size(); ++g) {
            if (specs[g].admits(counts[p])) {
              m.masks[g] |= 1u << (p + 1);
              break;
            }
          }
        }
        ++a[m];
      },
      [](Acc& a, Acc&& b) {
        for (const auto& [m, c] : b) a[m] += c;
      });
  MultiPoly out(n, families());
  for (const auto& [m, c] : acc) out.add(m, BigInt(c));
  return out;
}

bool MultivarEngine::within_state_bound(const MultiPoly& f) const {
  const auto [lo, hi] = range(f.n());
  const int size = std::max(0, hi - lo + 1);
  if (BigInt(f.terms().size()) > pow_int(families() + 1, static_cast<std::size_t>(size))) return false;
  std::uint32_t allowed = 0;
  for (int p = lo; p <= hi; ++p) allowed |= 1u << p;
  for (const auto& [m, c] : f.terms()) {
    std::uint32_t seen = 0;
    for (int g = 0; g < families(); ++g) {
      const std::uint32_t mask = m.masks[static_cast<std::size_t>(g)];
      if ((mask & seen) != 0 || (mask & ~allowed) != 0) return false;
      seen |= mask;
    }
  }
  return true;
}

}  // namespace meshpat
