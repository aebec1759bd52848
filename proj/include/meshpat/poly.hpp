#pragma once

// Exact integer polynomials in x, and in (x, q).

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace meshpat {

using BigInt = boost::multiprecision::cpp_int;

/// Polynomial in one variable with arbitrary-precision integer coefficients.
/// Stored in canonical form: coeffs()[k] is the coefficient of x^k and there
/// are no trailing zeros, so the zero polynomial has an empty coefficient list.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long long> coeffs);

  static IntPoly constant(const BigInt& c);
  static IntPoly monomial(const BigInt& c, std::size_t power);
  /// The polynomial x.
  static IntPoly x();
  static IntPoly one() { return constant(1); }

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coefficient(std::size_t k) const;
  BigInt leading_coefficient() const;

  BigInt eval(const BigInt& at) const;

  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const IntPoly& rhs);
  IntPoly& operator*=(const BigInt& scalar);

  friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
  friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
  friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
  friend IntPoly operator*(IntPoly lhs, const BigInt& s) { return lhs *= s; }
  friend IntPoly operator*(const BigInt& s, IntPoly rhs) { return rhs *= s; }
  IntPoly operator-() const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  /// Exact quotient by a monic divisor. Throws InvalidInput when the divisor
  /// is not monic or leaves a remainder.
  IntPoly div_exact(const IntPoly& monic_divisor) const;
  /// Exact quotient by x^k. Throws InvalidInput when a low coefficient is nonzero.
  IntPoly div_x_pow(std::size_t k) const;

  /// Ascending-power rendering: "c0 + c1*x + c2*x^2"; zero terms omitted,
  /// "0" for the zero polynomial, negative terms joined with " - ".
  std::string to_string() const;
  /// Decimal strings c0..cd.
  std::vector<std::string> coeff_strings() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Polynomial in (x, q): coeffs()[i][j] is the coefficient of x^i q^j.
/// Canonical: no trailing zero entries in any row and no trailing empty rows.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<std::vector<BigInt>> coeffs);

  /// Embed a polynomial in x (q-degree 0).
  static BiPoly from_x(const IntPoly& p);
  /// Embed a polynomial in q (x-degree 0).
  static BiPoly from_q(const IntPoly& p);

  const std::vector<std::vector<BigInt>>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  BigInt coefficient(std::size_t xi, std::size_t qj) const;
  int x_degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// Substitute q := value, leaving a polynomial in x.
  IntPoly eval_q(const BigInt& value) const;
  /// Substitute x := value, leaving a polynomial in q.
  IntPoly eval_x(const BigInt& value) const;

  BiPoly& operator+=(const BiPoly& rhs);
  BiPoly& operator-=(const BiPoly& rhs);
  friend BiPoly operator+(BiPoly lhs, const BiPoly& rhs) { return lhs += rhs; }
  friend BiPoly operator-(BiPoly lhs, const BiPoly& rhs) { return lhs -= rhs; }
  friend BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs);
  friend BiPoly operator*(BiPoly lhs, const BigInt& s);

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<std::vector<BigInt>> coeffs_;
};

/// prod_{i=0}^{s-1} (c0 + i*step); the empty product is 1.
IntPoly rising_product(const IntPoly& c0, const IntPoly& step, std::size_t s);

/// [n]_q = 1 + q + ... + q^{n-1} as a polynomial in q ([0]_q = 0).
IntPoly q_integer(std::size_t n);
/// [n]_q! = [1]_q [2]_q ... [n]_q ([0]_q! = 1).
IntPoly q_factorial(std::size_t n);

}  // namespace meshpat
