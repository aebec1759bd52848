#pragma once

// Permutations in one-line notation. Positions are 1-based throughout the
// public API: position i holds the point (i, word[i]) of the graph.

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace meshpat {

class Permutation {
 public:
  /// The empty permutation.
  Permutation() = default;
  /// Throws InvalidInput unless word is a rearrangement of 1..word.size().
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);
  /// Accepts "471569283" (single digits, n <= 9) or separated forms
  /// such as "4 7 1" / "4,7,1".
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(word_.size()); }
  /// Value at 1-based position i.
  int at(int i) const;
  std::span<const int> word() const { return word_; }

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

/// Order-isomorphic permutation of a word of distinct integers (red[.]).
Permutation reduce(std::span<const long long> word);

struct QuadrantCounts {
  int q1 = 0;  // later positions, larger values
  int q2 = 0;  // earlier positions, larger values
  int q3 = 0;  // earlier positions, smaller values
  int q4 = 0;  // later positions, smaller values

  friend bool operator==(const QuadrantCounts&, const QuadrantCounts&) = default;
};

QuadrantCounts quadrant_counts(const Permutation& sigma, int i);
/// Counts for every position of a raw word (index 0 = position 1); O(n^2).
void quadrant_counts_all(std::span<const int> word, std::span<QuadrantCounts> out);

struct Statistics {
  int inv = 0;
  int coinv = 0;
  int rlmax = 0;
  int cycle_count = 0;
};

Statistics statistics(const Permutation& sigma);
int coinversions(std::span<const int> word);

Permutation reverse(const Permutation& sigma);
Permutation complement(const Permutation& sigma);
Permutation inverse(const Permutation& sigma);

/// Add 1 to every entry and put a new 1 at position i (1 <= i <= n+1).
Permutation insert_bottom(const Permutation& sigma, int i);
/// Put n+1 at position i (1 <= i <= n+1).
Permutation insert_top(const Permutation& sigma, int i);

/// All of S_n in lexicographic order (for small n only).
std::vector<Permutation> all_permutations(int n);

}  // namespace meshpat
