#pragma once

// Exact integer tables: factorials, binomials, Stirling numbers of the first kind.

#include "meshpat/poly.hpp"

#include <cstddef>

namespace meshpat {

BigInt factorial(std::size_t n);
/// Pascal-triangle binomial; 0 when k > n.
BigInt binomial(std::size_t n, std::size_t k);
/// Multinomial (a+b+c)! / (a! b! c!).
BigInt multinomial(std::size_t a, std::size_t b, std::size_t c);
/// Signless Stirling number of the first kind c(n,k) via
/// c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k).
BigInt stirling1_unsigned(std::size_t n, std::size_t k);
/// Signed s(n,k) = (-1)^{n-k} c(n,k).
BigInt stirling1_signed(std::size_t n, std::size_t k);
/// n!/m! for m <= n.
BigInt falling_ratio(std::size_t n, std::size_t m);
BigInt pow_int(const BigInt& base, std::size_t exp);

}  // namespace meshpat
