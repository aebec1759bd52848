#include "meshpat/combinatorics.hpp"

#include <mutex>
#include <vector>

namespace meshpat {

namespace {

// Triangular tables grown on demand under a lock; rows never change once built.
class Triangle {
 public:
  using Rule = BigInt (*)(const std::vector<BigInt>& prev, std::size_t n, std::size_t k);

  Triangle(std::vector<BigInt> row0, Rule rule) : rule_(rule) { rows_.push_back(std::move(row0)); }

  BigInt get(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::lock_guard lock(mu_);
    while (rows_.size() <= n) {
      const std::size_t m = rows_.size();
      std::vector<BigInt> row(m + 1);
      for (std::size_t j = 0; j <= m; ++j) row[j] = rule_(rows_.back(), m, j);
      rows_.push_back(std::move(row));
    }
    return rows_[n][k];
  }

 private:
  std::mutex mu_;
  std::vector<std::vector<BigInt>> rows_;
  Rule rule_;
};

BigInt at(const std::vector<BigInt>& row, std::size_t k) { return k < row.size() ? row[k] : BigInt(0); }

Triangle& pascal() {
  static Triangle t({BigInt(1)}, [](const std::vector<BigInt>& prev, std::size_t, std::size_t k) {
    return (k == 0 ? BigInt(0) : at(prev, k - 1)) + at(prev, k);
  });
  return t;
}

Triangle& stirling() {
  static Triangle t({BigInt(1)}, [](const std::vector<BigInt>& prev, std::size_t n, std::size_t k) {
    return (k == 0 ? BigInt(0) : at(prev, k - 1)) + BigInt(n - 1) * at(prev, k);
  });
  return t;
}

}  // namespace

BigInt factorial(std::size_t n) { return falling_ratio(n, 0); }

BigInt falling_ratio(std::size_t n, std::size_t m) {
  BigInt acc = 1;
  for (std::size_t i = m + 1; i <= n; ++i) acc *= i;
  return acc;
}

BigInt binomial(std::size_t n, std::size_t k) { return pascal().get(n, k); }

BigInt multinomial(std::size_t a, std::size_t b, std::size_t c) {
  return binomial(a + b + c, a) * binomial(b + c, b);
}

BigInt stirling1_unsigned(std::size_t n, std::size_t k) { return stirling().get(n, k); }

BigInt stirling1_signed(std::size_t n, std::size_t k) {
  BigInt c = stirling1_unsigned(n, k);
  return ((n - k) % 2 == 0) ? c : BigInt(-c);
}

BigInt pow_int(const BigInt& base, std::size_t exp) {
  BigInt acc = 1;
  for (std::size_t i = 0; i < exp; ++i) acc *= base;
  return acc;
}

}  // namespace meshpat
