#include "meshpat/poly.hpp"

#include "meshpat/errors.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace meshpat {

// ---------------------------------------------------------------------------
// IntPoly

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, std::size_t power) {
  std::vector<BigInt> v(power + 1);
  v[power] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::x() { return monomial(1, 1); }

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : BigInt(0);
}

BigInt IntPoly::leading_coefficient() const {
  return coeffs_.empty() ? BigInt(0) : coeffs_.back();
}

BigInt IntPoly::eval(const BigInt& at) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<BigInt> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) { return *this = *this * rhs; }

IntPoly& IntPoly::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly IntPoly::div_exact(const IntPoly& monic_divisor) const {
  if (monic_divisor.is_zero() || monic_divisor.leading_coefficient() != 1) {
    throw InvalidInput("div_exact: divisor must be monic");
  }
  if (degree() < monic_divisor.degree()) {
    if (is_zero()) return {};
    throw InvalidInput("div_exact: nonzero remainder");
  }
  std::vector<BigInt> rem = coeffs_;
  const std::size_t dd = static_cast<std::size_t>(monic_divisor.degree());
  std::vector<BigInt> quot(rem.size() - dd);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const BigInt lead = rem[k + dd];
    quot[k] = lead;
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= lead * monic_divisor.coeffs_[j];
  }
  if (std::any_of(rem.begin(), rem.end(), [](const BigInt& c) { return c != 0; })) {
    throw InvalidInput("div_exact: nonzero remainder");
  }
  return IntPoly(std::move(quot));
}

IntPoly IntPoly::div_x_pow(std::size_t k) const {
  for (std::size_t i = 0; i < k && i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) throw InvalidInput("div_x_pow: polynomial not divisible by x^k");
  }
  if (k >= coeffs_.size()) return {};
  return IntPoly(std::vector<BigInt>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
}

namespace {

void append_term(std::ostringstream& os, bool first, const BigInt& c, const std::string& var_part) {
  if (first) {
    os << c;
  } else if (c < 0) {
    os << " - " << BigInt(-c);
  } else {
    os << " + " << c;
  }
  if (!var_part.empty()) os << '*' << var_part;
}

std::string power_str(const char* var, std::size_t k) {
  if (k == 0) return {};
  std::string s = var;
  if (k > 1) s += "^" + std::to_string(k);
  return s;
}

}  // namespace

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    append_term(os, first, coeffs_[k], power_str("x", k));
    first = false;
  }
  return os.str();
}

std::vector<std::string> IntPoly::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.str());
  return out;
}

// ---------------------------------------------------------------------------
// BiPoly

BiPoly::BiPoly(std::vector<std::vector<BigInt>> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void BiPoly::trim() {
  for (auto& row : coeffs_) {
    while (!row.empty() && row.back() == 0) row.pop_back();
  }
  while (!coeffs_.empty() && coeffs_.back().empty()) coeffs_.pop_back();
}

BiPoly BiPoly::from_x(const IntPoly& p) {
  std::vector<std::vector<BigInt>> rows;
  for (const auto& c : p.coeffs()) rows.push_back({c});
  return BiPoly(std::move(rows));
}

BiPoly BiPoly::from_q(const IntPoly& p) { return BiPoly({p.coeffs()}); }

BigInt BiPoly::coefficient(std::size_t xi, std::size_t qj) const {
  if (xi >= coeffs_.size() || qj >= coeffs_[xi].size()) return 0;
  return coeffs_[xi][qj];
}

IntPoly BiPoly::eval_q(const BigInt& value) const {
  std::vector<BigInt> out;
  out.reserve(coeffs_.size());
  for (const auto& row : coeffs_) out.push_back(IntPoly(row).eval(value));
  return IntPoly(std::move(out));
}

IntPoly BiPoly::eval_x(const BigInt& value) const {
  IntPoly acc;
  BigInt power = 1;
  for (const auto& row : coeffs_) {
    acc += IntPoly(row) * power;
    power *= value;
  }
  return acc;
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    auto& row = coeffs_[i];
    const auto& other = rhs.coeffs_[i];
    if (other.size() > row.size()) row.resize(other.size());
    for (std::size_t j = 0; j < other.size(); ++j) row[j] += other[j];
  }
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    auto& row = coeffs_[i];
    const auto& other = rhs.coeffs_[i];
    if (other.size() > row.size()) row.resize(other.size());
    for (std::size_t j = 0; j < other.size(); ++j) row[j] -= other[j];
  }
  trim();
  return *this;
}

BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<std::vector<BigInt>> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
      const auto& a = lhs.coeffs_[i];
      const auto& b = rhs.coeffs_[k];
      if (a.empty() || b.empty()) continue;
      auto& row = out[i + k];
      if (row.size() < a.size() + b.size() - 1) row.resize(a.size() + b.size() - 1);
      for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] == 0) continue;
        for (std::size_t l = 0; l < b.size(); ++l) row[j + l] += a[j] * b[l];
      }
    }
  }
  return BiPoly(std::move(out));
}

BiPoly operator*(BiPoly lhs, const BigInt& s) {
  for (auto& row : lhs.coeffs_) {
    for (auto& c : row) c *= s;
  }
  lhs.trim();
  return lhs;
}

std::string BiPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < coeffs_[i].size(); ++j) {
      const BigInt& c = coeffs_[i][j];
      if (c == 0) continue;
      std::string var = power_str("x", i);
      const std::string qpart = power_str("q", j);
      if (!qpart.empty()) var += var.empty() ? qpart : "*" + qpart;
      append_term(os, first, c, var);
      first = false;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------

IntPoly rising_product(const IntPoly& c0, const IntPoly& step, std::size_t s) {
  IntPoly acc = IntPoly::one();
  for (std::size_t i = 0; i < s; ++i) acc *= c0 + step * BigInt(i);
  return acc;
}

IntPoly q_integer(std::size_t n) {
  return IntPoly(std::vector<BigInt>(n, BigInt(1)));
}

IntPoly q_factorial(std::size_t n) {
  IntPoly acc = IntPoly::one();
  for (std::size_t i = 1; i <= n; ++i) acc *= q_integer(i);
  return acc;
}

}  // namespace meshpat
