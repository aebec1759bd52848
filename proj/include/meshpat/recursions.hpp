#pragma once

// Recursions and closed forms for distribution polynomials R_n(x), their
// q-analogues, and the restricted-class convolutions. Every family comes as a
// step recursion and as a product formula.

#include "meshpat/oracle.hpp"
#include "meshpat/pattern.hpp"
#include "meshpat/poly.hpp"
#include "meshpat/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace meshpat {

// --- MMP(k,0,0,0), k >= 1 -------------------------------------------------
/// R_{m+1} = (k + x(m+1-k)) R_m for m >= k, R_n = n! for n <= k.
IntPoly r_k000(int k, int n);
/// k! prod_{i=1}^{n-k} (k + i x).
IntPoly r_k000_closed(int k, int n);

// --- MMP(=k,0,0,0), k >= 0 -------------------------------------------------
/// R_{m+1} = (m + x) R_m for m >= k.
IntPoly r_eqk000(int k, int n);
/// k! prod_{i=1}^{n-k} (k + i - 1 + x).
IntPoly r_eqk000_closed(int k, int n);

// --- MMP(empty,0,0,0) ------------------------------------------------------
/// x(x+1)...(x+n-1).
IntPoly r_empty000(int n);
/// sum_k c(n,k) x^k from the Stirling recurrence.
IntPoly r_empty000_stirling(int n);

// --- MMP(a,b,0,0), a, b >= 1 -----------------------------------------------
IntPoly r_ab00(int a, int b, int n);
IntPoly r_ab00_closed(int a, int b, int n);

// --- MMP(k,empty,0,0), k >= 1 ----------------------------------------------
/// R_{m+1} = (x + m) R_m for m >= k.
IntPoly r_kempty00(int k, int n);
/// (x+1)...(x+n-1) for k = 1; k!(x+k)...(x+n-1) for k >= 2 and n > k.
IntPoly r_kempty00_closed(int k, int n);

// --- q-analogues (coinversions) --------------------------------------------
BiPoly q_r_k000(int k, int n);
BiPoly q_r_k000_closed(int k, int n);
BiPoly q_r_ab00(int a, int b, int n);
BiPoly q_r_ab00_closed(int a, int b, int n);

// --- MMP(k <= max, empty, 0, 0) --------------------------------------------
/// R_0..R_N by the insert-the-maximum convolution; index n holds R_n.
std::vector<IntPoly> r_kmax(int k, int max_n);

// --- Restricted classes ----------------------------------------------------
/// B_n^(1,0,1,0): permutations with 1 left of n, by position of 1 and n.
IntPoly b1010(int n);
/// Parity-split product form of B_n^(1,0,1,0).
IntPoly b1010_closed(int n);
/// B_n^(1,0,1,1) by the position of 1.
IntPoly b1011(int n);
/// prod_{i=0}^{n-3} (3 + i x).
IntPoly b1011_closed(int n);
/// sum_i C(m,i) R_i^{left} R_{m-i}^{right}, m = n - block_len: the
/// distribution over permutations containing a consecutive block whose
/// entries never match and split the permutation into independent halves.
IntPoly block_conv(const QuadSpec& left, const QuadSpec& right, int block_len, int n);

// --- Lookup ----------------------------------------------------------------
struct KnownDistribution {
  IntPoly poly;
  std::string id;  // e.g. "r_k000(k=1)[1,0,0,0]": family and the orbit member it matched
};
/// A recursion-based R_n for any pattern whose symmetry orbit contains one of
/// the families above (or the vacuous pattern); nullopt otherwise.
std::optional<KnownDistribution> known_distribution(const QuadSpec& spec, int n);
/// Same lookup, evaluated through the product formulas.
std::optional<KnownDistribution> known_closed_form(const QuadSpec& spec, int n);

// --- Numeric claims ----------------------------------------------------------
/// Sequence and coefficient identities for R_n^(k<=max), n <= max_n.
Report kmax_sequence_checks(int max_n, const OracleOptions& opts = {});
/// Leading terms of the oracle polynomials against the factorial formulas.
Report top_coefficient_checks(int max_n, const OracleOptions& opts = {});

}  // namespace meshpat
