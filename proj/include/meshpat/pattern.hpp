#pragma once

// Simple marked mesh patterns: a bound on the number of graph points in each
// of the four quadrants around a position, plus the "k <= max" variant.

#include "meshpat/permutation.hpp"

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace meshpat {

class Bound {
 public:
  enum class Kind { AtLeast, Exactly, Empty };

  /// AtLeast(0): the vacuous bound.
  constexpr Bound() = default;

  static constexpr Bound at_least(int m) { return Bound(Kind::AtLeast, m); }
  static constexpr Bound exactly(int m) { return Bound(Kind::Exactly, m); }
  static constexpr Bound empty() { return Bound(Kind::Empty, 0); }

  /// Token grammar: "k" (AtLeast k), "ge:k", "eq:k", "empty".
  static Bound parse(std::string_view token);

  constexpr Kind kind() const { return kind_; }
  constexpr int value() const { return m_; }

  constexpr bool admits(int count) const { return kind_ == Kind::AtLeast ? count >= m_ : count == m_; }

  /// Canonical token: "k", "eq:k" or "empty".
  std::string token() const;

  /// Empty and Exactly(0) impose the same condition and compare equal.
  friend constexpr bool operator==(const Bound& a, const Bound& b) {
    const bool a_exact = a.kind_ != Kind::AtLeast;
    const bool b_exact = b.kind_ != Kind::AtLeast;
    return a_exact == b_exact && a.m_ == b.m_;
  }

 private:
  constexpr Bound(Kind kind, int m) : kind_(kind), m_(m) {}
  Kind kind_ = Kind::AtLeast;
  int m_ = 0;
};

/// Bounds for quadrants I, II, III, IV in that order.
struct QuadSpec {
  std::array<Bound, 4> q{};

  static QuadSpec of(Bound a, Bound b, Bound c, Bound d) { return QuadSpec{{a, b, c, d}}; }
  /// All four bounds AtLeast(value).
  static QuadSpec at_least(int a, int b, int c, int d);
  /// "a,b,c,d" with Bound tokens.
  static QuadSpec parse(std::string_view text);

  bool admits(const QuadrantCounts& c) const {
    return q[0].admits(c.q1) && q[1].admits(c.q2) && q[2].admits(c.q3) && q[3].admits(c.q4);
  }

  std::string to_string() const;

  friend bool operator==(const QuadSpec&, const QuadSpec&) = default;
};

/// MMP(k <= max, empty, 0, 0).
struct KMax {
  int k = 1;
  std::string to_string() const { return "kmax:" + std::to_string(k); }
  friend bool operator==(const KMax&, const KMax&) = default;
};

using Pattern = std::variant<QuadSpec, KMax>;

std::string pattern_string(const Pattern& p);

bool matches(const Permutation& sigma, int i, const QuadSpec& spec);
bool matches_kmax(const Permutation& sigma, int i, int k);
int mmp_count(const Permutation& sigma, const Pattern& pattern);

/// Raw-word kernels used by the enumerators; counts is the output of
/// quadrant_counts_all for the same word.
int mmp_count_word(std::span<const QuadrantCounts> counts, const QuadSpec& spec);
int kmax_count_word(std::span<const int> word, int k);

/// The images of spec under the eight symmetries of the square, duplicates
/// removed, in the order (a,b,c,d), (d,a,b,c), (c,b,a,d), (b,a,d,c),
/// (d,c,b,a), (a,d,c,b), (c,d,a,b), (b,c,d,a).
std::vector<QuadSpec> quad_orbit(const QuadSpec& spec);

}  // namespace meshpat
