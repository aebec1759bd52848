#pragma once

// Multivariate insertion recursions. A monomial records, for every position
// of a permutation, which indicator family (if any) the entry there belongs
// to; the engines build sum_{sigma in S_n} prod_p var_{family(p), p} by
// inserting the new maximum n+1 into every slot of every sigma in S_n.

#include "meshpat/oracle.hpp"
#include "meshpat/pattern.hpp"
#include "meshpat/poly.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace meshpat {

inline constexpr int kMaxFamilies = 4;
inline constexpr int kMaxMultivarN = 30;

/// One bitmask per family; bit p set means position p carries that family's
/// variable. Masks are pairwise disjoint.
struct Monomial {
  std::array<std::uint32_t, kMaxFamilies> masks{};
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(int n, int families) : n_(n), families_(families) {}

  int n() const { return n_; }
  int families() const { return families_; }
  const std::map<Monomial, BigInt>& terms() const { return terms_; }
  void add(const Monomial& m, const BigInt& c);
  /// Every variable set to 1.
  BigInt total_mass() const;
  /// "4 + 2*z3"; names gives one letter per family.
  std::string to_string(const std::vector<std::string>& names) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.n_ == b.n_ && a.families_ == b.families_ && a.terms_ == b.terms_;
  }

 private:
  int n_ = 0;
  int families_ = 0;
  std::map<Monomial, BigInt> terms_;
};

/// Substitute x for the families flagged in x_families and 1 for the rest.
IntPoly specialize(const MultiPoly& m, const std::array<bool, kMaxFamilies>& x_families);
/// First family -> x, all others -> 1.
IntPoly specialize(const MultiPoly& m);

class MultivarEngine {
 public:
  static MultivarEngine f1010();
  static MultivarEngine f10a0(int a);
  static MultivarEngine g2020();
  static MultivarEngine f1011();
  static MultivarEngine h1111();
  /// "f1010", "f10a0:2", "g2020", "f1011", "h1111".
  static MultivarEngine parse(const std::string& id);

  const std::string& id() const { return id_; }
  int families() const { return static_cast<int>(specs_.size()); }
  const std::vector<QuadSpec>& family_specs() const { return specs_; }
  const std::vector<std::string>& family_names() const { return names_; }
  /// The pattern whose distribution the first family counts.
  const QuadSpec& target() const { return specs_.front(); }
  /// Positions that can carry a variable in S_n: [lo, hi], empty when lo > hi.
  std::pair<int, int> range(int n) const;

  /// F_n -> F_{n+1}.
  MultiPoly step(const MultiPoly& f) const;
  /// F_0 .. F_max_n, starting from F_0 = 1.
  std::vector<MultiPoly> run(int max_n) const;
  /// F_n computed directly from the quadrant counts of every sigma in S_n.
  MultiPoly direct(int n, const OracleOptions& opts = {}) const;
  /// Number of monomials is at most (families + 1)^(range size).
  bool within_state_bound(const MultiPoly& f) const;

 private:
  // family index or -1 (untracked)
  using Map = std::array<int, kMaxFamilies>;
  MultivarEngine(std::string id, std::vector<QuadSpec> specs, std::vector<std::string> names, Map left, Map right,
                 int new_tag, int min_slot, int end_gap, int range_lo, int range_gap);

  std::string id_;
  std::vector<QuadSpec> specs_;
  std::vector<std::string> names_;
  Map left_{};   // family of an entry left of the inserted maximum
  Map right_{};  // family of an entry right of it
  int new_tag_ = 0;
  int min_slot_ = 2;   // the new maximum is tagged at slots min_slot .. n+1-end_gap
  int end_gap_ = 0;
  int range_lo_ = 2;   // positions range_lo .. n - range_gap
  int range_gap_ = 0;
};

}  // namespace meshpat
