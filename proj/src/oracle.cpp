#include "meshpat/oracle.hpp"

#include "meshpat/combinatorics.hpp"
#include "meshpat/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace meshpat {

// ---------------------------------------------------------------------------
// Block descriptors

BlockPattern::BlockPattern(std::vector<BlockToken> tokens) : tokens_(std::move(tokens)) {
  if (tokens_.empty()) throw InvalidInput("block descriptor is empty");
  for (const auto& t : tokens_) {
    if (t.offset < 0) throw InvalidInput("block token with negative offset");
  }
  for (std::size_t a = 0; a < tokens_.size(); ++a) {
    for (std::size_t b = a + 1; b < tokens_.size(); ++b) {
      if (tokens_[a] == tokens_[b]) throw InvalidInput("block descriptor repeats a value");
    }
  }
}

namespace {

BlockToken parse_token(std::string_view t, std::string_view whole) {
  auto number = [&](std::string_view s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw InvalidInput("bad block descriptor: '" + std::string(whole) + "'");
    }
    return std::stoi(std::string(s));
  };
  if (t == "n") return {true, 0};
  if (t.starts_with("n-")) return {true, number(t.substr(2))};
  const int v = number(t);
  if (v < 1) throw InvalidInput("block values start at 1: '" + std::string(whole) + "'");
  return {false, v - 1};
}

}  // namespace

BlockPattern BlockPattern::parse(std::string_view text) {
  std::vector<BlockToken> tokens;
  if (text.find_first_of(", ") != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find_first_of(", ", start);
      if (end == std::string_view::npos) end = text.size();
      const auto piece = text.substr(start, end - start);
      if (!piece.empty()) tokens.push_back(parse_token(piece, text));
      start = end + 1;
    }
  } else {
    std::size_t i = 0;
    while (i < text.size()) {
      if (text[i] == 'n') {
        std::size_t j = i + 1;
        if (j < text.size() && text[j] == '-') {
          ++j;
          while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        }
        tokens.push_back(parse_token(text.substr(i, j - i), text));
        i = j;
      } else {
        tokens.push_back(parse_token(text.substr(i, 1), text));
        ++i;
      }
    }
  }
  return BlockPattern(std::move(tokens));
}

BlockPattern BlockPattern::gamma(int k, int l) {
  if (k < 1 || l < 1) throw InvalidInput("gamma block needs k, l >= 1");
  std::vector<BlockToken> t;
  for (int d = 0; d < k; ++d) t.push_back({true, d});
  for (int v = l; v >= 1; --v) t.push_back({false, v - 1});
  return BlockPattern(std::move(t));
}

BlockPattern BlockPattern::beta_alpha(std::span<const int> beta, std::span<const int> alpha) {
  const int k = static_cast<int>(beta.size());
  std::vector<BlockToken> t;
  for (int b : beta) {
    if (b < 1 || b > k) throw InvalidInput("beta must be a permutation of 1..k");
    t.push_back({true, k - b});
  }
  for (int a : alpha) {
    if (a < 1 || a > static_cast<int>(alpha.size())) throw InvalidInput("alpha must be a permutation of 1..l");
    t.push_back({false, a - 1});
  }
  return BlockPattern(std::move(t));
}

std::vector<int> BlockPattern::resolve(int n) const {
  std::vector<int> values;
  values.reserve(tokens_.size());
  for (const auto& t : tokens_) {
    const int v = t.top ? n - t.offset : t.offset + 1;
    if (v < 1 || v > n) throw InvalidInput("block " + to_string() + " does not fit n=" + std::to_string(n));
    values.push_back(v);
  }
  auto sorted = values;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidInput("block " + to_string() + " collides with itself at n=" + std::to_string(n));
  }
  return values;
}

std::string BlockPattern::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (i > 0) s += ',';
    const auto& t = tokens_[i];
    if (t.top) {
      s += t.offset == 0 ? std::string("n") : "n-" + std::to_string(t.offset);
    } else {
      s += std::to_string(t.offset + 1);
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Classes

PermClass PermClass::one_before_n() {
  PermClass c;
  c.kind_ = Kind::OneBeforeN;
  return c;
}

PermClass PermClass::block(BlockPattern pattern) {
  PermClass c;
  c.kind_ = Kind::Block;
  c.block_ = std::move(pattern);
  return c;
}

PermClass PermClass::parse(std::string_view text) {
  if (text == "all") return all();
  if (text == "one-before-n") return one_before_n();
  if (text.starts_with("block:")) return block(BlockPattern::parse(text.substr(6)));
  throw InvalidInput("unknown permutation class: '" + std::string(text) + "'");
}

std::string PermClass::to_string() const {
  switch (kind_) {
    case Kind::OneBeforeN:
      return "one-before-n";
    case Kind::Block:
      return "block:" + block_.to_string();
    case Kind::All:
      break;
  }
  return "all";
}

BigInt class_size(int n, const PermClass& cls) {
  if (n < 0) throw InvalidInput("negative n");
  switch (cls.kind()) {
    case PermClass::Kind::All:
      return factorial(static_cast<std::size_t>(n));
    case PermClass::Kind::OneBeforeN:
      if (n < 2) throw InvalidInput("one-before-n needs n >= 2");
      return factorial(static_cast<std::size_t>(n)) / 2;
    case PermClass::Kind::Block: {
      const int len = cls.block_pattern().length();
      cls.block_pattern().resolve(n);
      return BigInt(n - len + 1) * factorial(static_cast<std::size_t>(n - len));
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Enumeration plumbing

namespace detail {

namespace {

Frame make_frame(int n, const std::vector<std::pair<int, int>>& fixed) {
  Frame f;
  f.word.assign(static_cast<std::size_t>(n), 0);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (auto [pos, val] : fixed) {
    f.word[static_cast<std::size_t>(pos)] = val;
    used[static_cast<std::size_t>(val)] = true;
  }
  for (int p = 0; p < n; ++p) {
    if (f.word[static_cast<std::size_t>(p)] == 0) f.free_positions.push_back(p);
  }
  for (int v = 1; v <= n; ++v) {
    if (!used[static_cast<std::size_t>(v)]) f.free_values.push_back(v);
  }
  return f;
}

std::uint64_t factorial64(std::size_t m) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= m; ++i) f *= i;
  return f;
}

}  // namespace

std::vector<Frame> class_frames(int n, const PermClass& cls) {
  if (n < 0) throw InvalidInput("negative n");
  std::vector<Frame> frames;
  switch (cls.kind()) {
    case PermClass::Kind::All:
      frames.push_back(make_frame(n, {}));
      break;
    case PermClass::Kind::OneBeforeN:
      if (n < 2) throw InvalidInput("one-before-n needs n >= 2");
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) frames.push_back(make_frame(n, {{i, 1}, {j, n}}));
      }
      break;
    case PermClass::Kind::Block: {
      const auto values = cls.block_pattern().resolve(n);
      const int len = static_cast<int>(values.size());
      for (int p = 0; p + len <= n; ++p) {
        std::vector<std::pair<int, int>> fixed;
        for (int k = 0; k < len; ++k) fixed.emplace_back(p + k, values[static_cast<std::size_t>(k)]);
        frames.push_back(make_frame(n, fixed));
      }
      break;
    }
  }
  return frames;
}

std::vector<Chunk> split_frames(const std::vector<Frame>& frames, unsigned partitions) {
  std::vector<Chunk> chunks;
  const std::uint64_t per_frame =
      std::max<std::uint64_t>(1, (partitions + frames.size() - 1) / std::max<std::size_t>(1, frames.size()));
  for (std::size_t f = 0; f < frames.size(); ++f) {
    const std::uint64_t total = factorial64(frames[f].free_values.size());
    const std::uint64_t parts = std::min(per_frame, total);
    for (std::uint64_t p = 0; p < parts; ++p) {
      chunks.push_back({f, total * p / parts, total * (p + 1) / parts});
    }
  }
  return chunks;
}

void unrank(std::vector<int>& values, std::uint64_t rank) {
  std::vector<int> pool = values;
  const std::size_t m = values.size();
  for (std::size_t i = 0; i < m; ++i) {
    const std::uint64_t block = factorial64(m - 1 - i);
    const std::size_t idx = static_cast<std::size_t>(rank / block);
    rank %= block;
    values[i] = pool[idx];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
}

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

void check_cap(int n, const PermClass& cls, int cap) {
  const int limit = cap != 0 ? cap : (cls.kind() == PermClass::Kind::All ? kDefaultCapAll : kDefaultCapRestricted);
  if (n > limit) {
    throw ResourceLimit("n=" + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(limit));
  }
}

}  // namespace detail

void for_each_in_class(int n, const PermClass& cls, const std::function<void(std::span<const int>)>& visit) {
  for (const auto& frame : detail::class_frames(n, cls)) {
    auto word = frame.word;
    auto arrangement = frame.free_values;
    do {
      for (std::size_t k = 0; k < arrangement.size(); ++k) {
        word[static_cast<std::size_t>(frame.free_positions[k])] = arrangement[k];
      }
      visit(word);
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  }
}

// ---------------------------------------------------------------------------
// Distributions

namespace {

// Per-worker tallies: counts[p][m] = #permutations with statistic p equal to m.
using Tally = std::vector<std::vector<std::uint64_t>>;

IntPoly tally_to_poly(const std::vector<std::uint64_t>& counts) {
  std::vector<BigInt> c;
  c.reserve(counts.size());
  for (auto v : counts) c.emplace_back(v);
  return IntPoly(std::move(c));
}

}  // namespace

std::vector<IntPoly> distributions(int n, std::span<const Pattern> patterns, const PermClass& cls,
                                   const OracleOptions& opts) {
  for (const auto& p : patterns) {
    if (const auto* km = std::get_if<KMax>(&p); km != nullptr && km->k < 1) {
      throw InvalidInput("kmax needs k >= 1");
    }
  }
  const std::vector<Pattern> pats(patterns.begin(), patterns.end());
  const std::size_t width = static_cast<std::size_t>(std::max(n, 0)) + 1;
  const bool need_counts = std::any_of(pats.begin(), pats.end(), [](const Pattern& p) {
    return std::holds_alternative<QuadSpec>(p);
  });

  const Tally tally = reduce_class<Tally>(
      n, cls, opts, [&] { return Tally(pats.size(), std::vector<std::uint64_t>(width, 0)); },
      [&](Tally& acc, std::span<const int> word) {
        thread_local std::vector<QuadrantCounts> scratch;
        scratch.resize(word.size());
        if (need_counts) quadrant_counts_all(word, scratch);
        for (std::size_t p = 0; p < pats.size(); ++p) {
          const int m = std::holds_alternative<KMax>(pats[p]) ? kmax_count_word(word, std::get<KMax>(pats[p]).k)
                                                              : mmp_count_word(scratch, std::get<QuadSpec>(pats[p]));
          ++acc[p][static_cast<std::size_t>(m)];
        }
      },
      [](Tally& into, Tally&& other) {
        for (std::size_t p = 0; p < into.size(); ++p) {
          for (std::size_t m = 0; m < into[p].size(); ++m) into[p][m] += other[p][m];
        }
      });

  std::vector<IntPoly> out;
  out.reserve(pats.size());
  for (const auto& row : tally) out.push_back(tally_to_poly(row));
  return out;
}

IntPoly distribution(int n, const Pattern& pattern, const PermClass& cls, const OracleOptions& opts) {
  return distributions(n, std::span<const Pattern>(&pattern, 1), cls, opts).front();
}

IntPoly kmax_distribution(int n, int k, const OracleOptions& opts) {
  return distribution(n, KMax{k}, PermClass::all(), opts);
}

BiPoly q_distribution(int n, const QuadSpec& spec, const OracleOptions& opts) {
  const std::size_t width = static_cast<std::size_t>(std::max(n, 0)) + 1;
  const std::size_t qwidth = static_cast<std::size_t>(std::max(n, 0) * std::max(n - 1, 0) / 2) + 1;
  const Tally tally = reduce_class<Tally>(
      n, PermClass::all(), opts, [&] { return Tally(width, std::vector<std::uint64_t>(qwidth, 0)); },
      [&](Tally& acc, std::span<const int> word) {
        thread_local std::vector<QuadrantCounts> scratch;
        scratch.resize(word.size());
        quadrant_counts_all(word, scratch);
        const int m = mmp_count_word(scratch, spec);
        ++acc[static_cast<std::size_t>(m)][static_cast<std::size_t>(coinversions(word))];
      },
      [](Tally& into, Tally&& other) {
        for (std::size_t i = 0; i < into.size(); ++i) {
          for (std::size_t j = 0; j < into[i].size(); ++j) into[i][j] += other[i][j];
        }
      });
  std::vector<std::vector<BigInt>> rows;
  for (const auto& row : tally) {
    std::vector<BigInt> r;
    for (auto v : row) r.emplace_back(v);
    rows.push_back(std::move(r));
  }
  return BiPoly(std::move(rows));
}

}  // namespace meshpat
