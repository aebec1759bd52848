#include "meshpat/pattern.hpp"

#include "meshpat/errors.hpp"

#include <algorithm>
#include <charconv>

namespace meshpat {

namespace {

int parse_nonneg(std::string_view s, std::string_view whole) {
  int v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end || v < 0) {
    throw InvalidInput("bad bound token: '" + std::string(whole) + "'");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

Bound Bound::parse(std::string_view token) {
  const std::string_view t = trim(token);
  if (t == "empty" || t == "e") return empty();
  if (t.starts_with("eq:")) return exactly(parse_nonneg(t.substr(3), token));
  if (t.starts_with("ge:")) return at_least(parse_nonneg(t.substr(3), token));
  return at_least(parse_nonneg(t, token));
}

std::string Bound::token() const {
  switch (kind_) {
    case Kind::Empty:
      return "empty";
    case Kind::Exactly:
      return "eq:" + std::to_string(m_);
    case Kind::AtLeast:
      break;
  }
  return std::to_string(m_);
}

QuadSpec QuadSpec::at_least(int a, int b, int c, int d) {
  return of(Bound::at_least(a), Bound::at_least(b), Bound::at_least(c), Bound::at_least(d));
}

QuadSpec QuadSpec::parse(std::string_view text) {
  QuadSpec spec;
  std::size_t start = 0;
  for (int slot = 0; slot < 4; ++slot) {
    const std::size_t comma = text.find(',', start);
    if ((slot < 3) == (comma == std::string_view::npos)) {
      throw InvalidInput("pattern needs exactly four comma-separated bounds: '" + std::string(text) + "'");
    }
    const std::size_t end = slot < 3 ? comma : text.size();
    spec.q[static_cast<std::size_t>(slot)] = Bound::parse(text.substr(start, end - start));
    start = end + 1;
  }
  return spec;
}

std::string QuadSpec::to_string() const {
  return q[0].token() + "," + q[1].token() + "," + q[2].token() + "," + q[3].token();
}

std::string pattern_string(const Pattern& p) {
  return std::visit([](const auto& v) { return v.to_string(); }, p);
}

bool matches(const Permutation& sigma, int i, const QuadSpec& spec) {
  return spec.admits(quadrant_counts(sigma, i));
}

bool matches_kmax(const Permutation& sigma, int i, int k) {
  const int n = sigma.size();
  if (i < 1 || i > n) throw InvalidInput("position out of range");
  if (k < 1) throw InvalidInput("kmax needs k >= 1");
  const auto w = sigma.word();
  const int v = w[static_cast<std::size_t>(i - 1)];
  for (int j = 0; j < i - 1; ++j) {
    if (w[static_cast<std::size_t>(j)] > v) return false;
  }
  if (i == n) return false;
  const auto max_it = std::max_element(w.begin() + i, w.end());
  if (*max_it < v) return false;
  const int above = static_cast<int>(std::count_if(w.begin() + i, max_it + 1, [v](int u) { return u > v; }));
  return above >= k;
}

int mmp_count_word(std::span<const QuadrantCounts> counts, const QuadSpec& spec) {
  int c = 0;
  for (const auto& qc : counts) c += spec.admits(qc);
  return c;
}

int kmax_count_word(std::span<const int> word, int k) {
  // Scan right to left, tracking the position of the running suffix maximum.
  const int n = static_cast<int>(word.size());
  int count = 0;
  int left_max = 0;
  std::vector<int> suffix_max_pos(static_cast<std::size_t>(n) + 1, -1);
  for (int i = n - 1; i >= 0; --i) {
    const int nxt = suffix_max_pos[static_cast<std::size_t>(i) + 1];
    suffix_max_pos[static_cast<std::size_t>(i)] =
        (nxt < 0 || word[static_cast<std::size_t>(i)] > word[static_cast<std::size_t>(nxt)]) ? i : nxt;
  }
  for (int i = 0; i < n; ++i) {
    const int v = word[static_cast<std::size_t>(i)];
    const bool left_clear = left_max < v;
    left_max = std::max(left_max, v);
    if (!left_clear || i == n - 1) continue;
    const int j = suffix_max_pos[static_cast<std::size_t>(i) + 1];
    if (word[static_cast<std::size_t>(j)] < v) continue;
    int above = 0;
    for (int t = i + 1; t <= j; ++t) above += word[static_cast<std::size_t>(t)] > v;
    count += above >= k;
  }
  return count;
}

int mmp_count(const Permutation& sigma, const Pattern& pattern) {
  if (const auto* km = std::get_if<KMax>(&pattern)) {
    if (km->k < 1) throw InvalidInput("kmax needs k >= 1");
    return kmax_count_word(sigma.word(), km->k);
  }
  std::vector<QuadrantCounts> counts(static_cast<std::size_t>(sigma.size()));
  quadrant_counts_all(sigma.word(), counts);
  return mmp_count_word(counts, std::get<QuadSpec>(pattern));
}

std::vector<QuadSpec> quad_orbit(const QuadSpec& spec) {
  static constexpr std::array<std::array<int, 4>, 8> kImages = {{
      {0, 1, 2, 3},  // (a,b,c,d)
      {3, 0, 1, 2},  // (d,a,b,c)
      {2, 1, 0, 3},  // (c,b,a,d)
      {1, 0, 3, 2},  // (b,a,d,c)
      {3, 2, 1, 0},  // (d,c,b,a)
      {0, 3, 2, 1},  // (a,d,c,b)
      {2, 3, 0, 1},  // (c,d,a,b)
      {1, 2, 3, 0},  // (b,c,d,a)
  }};
  std::vector<QuadSpec> out;
  for (const auto& img : kImages) {
    QuadSpec s;
    for (std::size_t k = 0; k < 4; ++k) s.q[k] = spec.q[static_cast<std::size_t>(img[k])];
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  return out;
}

}  // namespace meshpat
