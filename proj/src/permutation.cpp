#include "meshpat/permutation.hpp"

#include "meshpat/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace meshpat {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : word_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw InvalidInput("not a permutation of 1..n");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw InvalidInput("negative permutation length");
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
  const bool separated = text.find_first_of(" ,") != std::string_view::npos;
  std::vector<int> w;
  if (separated) {
    std::string cleaned(text);
    std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
    std::istringstream is(cleaned);
    int v = 0;
    while (is >> v) w.push_back(v);
    if (!is.eof()) throw InvalidInput("bad permutation text: " + std::string(text));
  } else {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw InvalidInput("bad permutation text: " + std::string(text));
      }
      w.push_back(c - '0');
    }
  }
  return Permutation(std::move(w));
}

int Permutation::at(int i) const {
  if (i < 1 || i > size()) throw InvalidInput("position out of range");
  return word_[static_cast<std::size_t>(i - 1)];
}

std::string Permutation::to_string() const {
  std::string s;
  const bool compact = size() <= 9;
  for (std::size_t k = 0; k < word_.size(); ++k) {
    if (!compact && k > 0) s += ' ';
    s += std::to_string(word_[k]);
  }
  return s;
}

Permutation reduce(std::span<const long long> word) {
  std::vector<std::size_t> order(word.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return word[a] < word[b]; });
  std::vector<int> out(word.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && word[order[r]] == word[order[r - 1]]) throw InvalidInput("reduce: duplicate entries");
    out[order[r]] = static_cast<int>(r) + 1;
  }
  return Permutation(std::move(out));
}

void quadrant_counts_all(std::span<const int> word, std::span<QuadrantCounts> out) {
  const std::size_t n = word.size();
  for (std::size_t i = 0; i < n; ++i) {
    int above_right = 0;
    int above_left = 0;
    for (std::size_t j = 0; j < i; ++j) above_left += word[j] > word[i];
    for (std::size_t j = i + 1; j < n; ++j) above_right += word[j] > word[i];
    out[i] = QuadrantCounts{above_right, above_left, static_cast<int>(i) - above_left,
                            static_cast<int>(n - 1 - i) - above_right};
  }
}

QuadrantCounts quadrant_counts(const Permutation& sigma, int i) {
  if (i < 1 || i > sigma.size()) throw InvalidInput("position out of range");
  std::vector<QuadrantCounts> all(static_cast<std::size_t>(sigma.size()));
  quadrant_counts_all(sigma.word(), all);
  return all[static_cast<std::size_t>(i - 1)];
}

int coinversions(std::span<const int> word) {
  int c = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    for (std::size_t j = i + 1; j < word.size(); ++j) c += word[i] < word[j];
  }
  return c;
}

Statistics statistics(const Permutation& sigma) {
  const auto w = sigma.word();
  const int n = sigma.size();
  Statistics s;
  s.coinv = coinversions(w);
  s.inv = n * (n - 1) / 2 - s.coinv;
  int best = 0;
  for (int i = n - 1; i >= 0; --i) {
    if (w[static_cast<std::size_t>(i)] > best) {
      best = w[static_cast<std::size_t>(i)];
      ++s.rlmax;
    }
  }
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++s.cycle_count;
    for (int v = start; !seen[static_cast<std::size_t>(v)]; v = w[static_cast<std::size_t>(v - 1)]) {
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
  return s;
}

Permutation reverse(const Permutation& sigma) {
  std::vector<int> w(sigma.word().rbegin(), sigma.word().rend());
  return Permutation(std::move(w));
}

Permutation complement(const Permutation& sigma) {
  std::vector<int> w(sigma.word().begin(), sigma.word().end());
  for (int& v : w) v = sigma.size() + 1 - v;
  return Permutation(std::move(w));
}

Permutation inverse(const Permutation& sigma) {
  std::vector<int> w(static_cast<std::size_t>(sigma.size()));
  for (int i = 1; i <= sigma.size(); ++i) w[static_cast<std::size_t>(sigma.at(i) - 1)] = i;
  return Permutation(std::move(w));
}

Permutation insert_bottom(const Permutation& sigma, int i) {
  if (i < 1 || i > sigma.size() + 1) throw InvalidInput("insert_bottom: slot out of range");
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(sigma.size()) + 1);
  for (int v : sigma.word()) w.push_back(v + 1);
  w.insert(w.begin() + (i - 1), 1);
  return Permutation(std::move(w));
}

Permutation insert_top(const Permutation& sigma, int i) {
  if (i < 1 || i > sigma.size() + 1) throw InvalidInput("insert_top: slot out of range");
  std::vector<int> w(sigma.word().begin(), sigma.word().end());
  w.insert(w.begin() + (i - 1), sigma.size() + 1);
  return Permutation(std::move(w));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace meshpat
