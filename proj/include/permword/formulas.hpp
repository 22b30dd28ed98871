#pragma once

#include <cstdint>
#include <string>

#include "permword/error.hpp"

namespace permword {

enum class DecompConvention { rho, tau };

// n = 2^r + p (tau convention) or n = 2^r + p + 1 (rho convention), with
// 0 < p <= 2^r; the pair (r, p) is unique.
struct NDecomposition {
  std::size_t n = 0;
  int r = 0;
  std::size_t p = 0;
  DecompConvention convention = DecompConvention::tau;
};

inline NDecomposition decompose(std::size_t n, DecompConvention convention) {
  std::size_t base = convention == DecompConvention::rho ? n - 1 : n;
  std::size_t min_n = convention == DecompConvention::rho ? 3 : 2;
  if (n < min_n)
    throw domain_error("decompose: n must be >= " + std::to_string(min_n) +
                       " for this convention");
  NDecomposition d;
  d.n = n;
  d.convention = convention;
  std::size_t pw = 1;
  int r = 0;
  while (!(base > pw && base - pw <= pw)) {
    pw <<= 1;
    ++r;
  }
  d.r = r;
  d.p = base - pw;
  return d;
}

// Factor count of the Thue-Morse word, n >= 3 (piecewise in the rho
// decomposition; integer forms 3*2^r + 4p and 2^{r+2} + 2p).
inline std::size_t rho_tm_formula(std::size_t n) {
  NDecomposition d = decompose(n, DecompConvention::rho);
  std::size_t pw = std::size_t{1} << d.r;
  return 2 * d.p <= pw ? 3 * pw + 4 * d.p : 4 * pw + 2 * d.p;
}

// Subpermutation count of the Thue-Morse word, n >= 6.
inline std::size_t tau_tm_formula(std::size_t n) {
  if (n < 6) throw domain_error("tau_tm_formula: n must be >= 6");
  NDecomposition d = decompose(n, DecompConvention::tau);
  return 2 * ((std::size_t{2} << d.r) + d.p - 2);
}

// Subpermutation count of a doubled Sturmian word: n + 2k + 1, where k is
// the longest run of the majority letter.  Valid from twice the scanned
// class-coverage window, which the caller supplies.
inline std::size_t tau_doubled_sturmian_formula(std::size_t n, int k, std::size_t threshold) {
  if (n < threshold)
    throw domain_error("tau_doubled_sturmian_formula: n below threshold " +
                       std::to_string(threshold));
  return n + 2 * static_cast<std::size_t>(k) + 1;
}

// Subpermutation count of the doubled Thue-Morse word at length m, where
// m = 2n-1 or 2n with n >= 9.  With n = 2^r + p, 0 <= p <= 2^r - 1:
//   p = 0:  2^{r+2} + 2^{r+1}  (odd m),  +4 more (even m)
//   p > 0:  2^{r+3} + 4p       (odd m),  +2 more (even m)
inline std::size_t tau_doubled_tm_formula(std::size_t m) {
  if (m < 17) throw domain_error("tau_doubled_tm_formula: length must be >= 17 (n >= 9)");
  bool odd = m % 2 == 1;
  std::size_t n = odd ? (m + 1) / 2 : m / 2;
  std::size_t pw = 1;
  while (pw * 2 <= n) pw *= 2;
  std::size_t p = n - pw;  // 0 <= p <= pw - 1
  if (p == 0) return 4 * pw + 2 * pw + (odd ? 0 : 4);
  return 8 * pw + 4 * p + (odd ? 0 : 2);
}

}  // namespace permword
