#pragma once

#include <optional>
#include <vector>

#include "permword/subperm.hpp"

namespace permword {

// p = (alpha_1..alpha_k  lambda_1..lambda_l  beta_1..beta_k) with
// alpha_i = beta_i + epsilon for a single epsilon in {-1, +1}.
struct TypeKDecomposition {
  int k = 0;
  int epsilon = 0;
  std::vector<int> alpha, beta, lambda;
  bool lambda_empty() const { return lambda.empty(); }
};

// Decomposition of p at the given type, if one exists.  Empty middles
// (length exactly 2k) are allowed and flagged via lambda_empty().
inline std::optional<TypeKDecomposition> decompose_type(const SubPermutation& p, int k) {
  if (k < 1) return std::nullopt;
  std::size_t n = p.size();
  if (n < 2 * static_cast<std::size_t>(k)) return std::nullopt;
  int eps = p[0] - p[n - static_cast<std::size_t>(k)];
  if (eps != 1 && eps != -1) return std::nullopt;
  TypeKDecomposition d;
  d.k = k;
  d.epsilon = eps;
  for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i) {
    int a = p[i];
    int b = p[n - static_cast<std::size_t>(k) + i];
    if (a - b != eps) return std::nullopt;
    d.alpha.push_back(a);
    d.beta.push_back(b);
  }
  for (std::size_t i = static_cast<std::size_t>(k); i < n - static_cast<std::size_t>(k); ++i)
    d.lambda.push_back(p[i]);
  return d;
}

// Largest k >= 1 with p = (alpha lambda beta) and q = (beta lambda alpha),
// alpha_i = beta_i + epsilon.  Equal permutations are not a pair.
inline std::optional<int> complementary_pair_type(const SubPermutation& p, const SubPermutation& q) {
  if (p.size() != q.size() || p == q) return std::nullopt;
  std::size_t n = p.size();
  for (int k = static_cast<int>(n / 2); k >= 1; --k) {
    auto d = decompose_type(p, k);
    if (!d) continue;
    std::size_t kk = static_cast<std::size_t>(k);
    bool match = true;
    for (std::size_t i = 0; i < kk && match; ++i)
      match = q[i] == d->beta[i] && q[n - kk + i] == d->alpha[i];
    for (std::size_t i = 0; i + 2 * kk < n && match; ++i)
      match = q[kk + i] == d->lambda[i];
    if (match) return k;
  }
  return std::nullopt;
}

}  // namespace permword
