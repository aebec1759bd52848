#pragma once

// Brute-force ground truth: enumerate S_n (or a restricted class) and tally
// the distribution of a match statistic.

#include "meshpat/pattern.hpp"
#include "meshpat/poly.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace meshpat {

/// One entry of a block descriptor: either a top value n-offset or a bottom
/// value offset+1 (so "n" is {top, 0}, "n-1" is {top, 1}, "1" is {bottom, 0}).
struct BlockToken {
  bool top = false;
  int offset = 0;
  friend bool operator==(const BlockToken&, const BlockToken&) = default;
};

/// A consecutive factor that every permutation of the class must contain,
/// written in terms of n. Covers the beta-alpha blocks (a permutation of the
/// top k values followed by a permutation of the bottom l values) and the
/// gamma_{k,l} = n (n-1) ... (n-k+1) l (l-1) ... 1 blocks.
class BlockPattern {
 public:
  BlockPattern() = default;
  explicit BlockPattern(std::vector<BlockToken> tokens);

  /// Tokens "n", "n-d" and plain integers, separated by commas or spaces;
  /// without separators each "n", "n-d" or single digit is one token, so
  /// "n1" is the adjacent pair n 1.
  static BlockPattern parse(std::string_view text);
  static BlockPattern gamma(int k, int l);
  /// beta and alpha are given reduced: beta is a permutation of 1..k standing
  /// for the values n-k+beta_i, alpha a permutation of 1..l.
  static BlockPattern beta_alpha(std::span<const int> beta, std::span<const int> alpha);

  int length() const { return static_cast<int>(tokens_.size()); }
  const std::vector<BlockToken>& tokens() const { return tokens_; }
  /// Concrete values for a given n; throws InvalidInput when infeasible.
  std::vector<int> resolve(int n) const;
  std::string to_string() const;

  friend bool operator==(const BlockPattern&, const BlockPattern&) = default;

 private:
  std::vector<BlockToken> tokens_;
};

class PermClass {
 public:
  enum class Kind { All, OneBeforeN, Block };

  PermClass() = default;
  static PermClass all() { return PermClass(); }
  static PermClass one_before_n();
  static PermClass block(BlockPattern pattern);
  /// "all", "one-before-n" or "block:<descriptor>".
  static PermClass parse(std::string_view text);

  Kind kind() const { return kind_; }
  const BlockPattern& block_pattern() const { return block_; }
  std::string to_string() const;

  friend bool operator==(const PermClass&, const PermClass&) = default;

 private:
  Kind kind_ = Kind::All;
  BlockPattern block_;
};

inline constexpr int kDefaultCapAll = 10;
inline constexpr int kDefaultCapRestricted = 11;

struct OracleOptions {
  /// Largest admissible n; 0 selects the class default.
  int cap = 0;
  /// Worker threads; 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
  /// Number of work chunks the permutation space is split into; 0 = automatic.
  /// The result never depends on this value.
  unsigned partitions = 0;
};

BigInt class_size(int n, const PermClass& cls);

/// Calls visit(word) for every member of the class, serially.
void for_each_in_class(int n, const PermClass& cls, const std::function<void(std::span<const int>)>& visit);

/// Map-reduce over the class. Each worker owns an accumulator created by
/// make(); visit folds one permutation into it; merge combines finished
/// accumulators. merge must be associative and commutative.
template <class Acc>
Acc reduce_class(int n, const PermClass& cls, const OracleOptions& opts, const std::function<Acc()>& make,
                 const std::function<void(Acc&, std::span<const int>)>& visit,
                 const std::function<void(Acc&, Acc&&)>& merge);

IntPoly distribution(int n, const Pattern& pattern, const PermClass& cls = PermClass::all(),
                     const OracleOptions& opts = {});
/// Several statistics in one pass over the class.
std::vector<IntPoly> distributions(int n, std::span<const Pattern> patterns, const PermClass& cls = PermClass::all(),
                                   const OracleOptions& opts = {});
/// sum over S_n of x^{mmp} q^{coinv}.
BiPoly q_distribution(int n, const QuadSpec& spec, const OracleOptions& opts = {});
IntPoly kmax_distribution(int n, int k, const OracleOptions& opts = {});

}  // namespace meshpat

#include "meshpat/detail/reduce_class.hpp"
