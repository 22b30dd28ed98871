#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permword/compare.hpp"
#include "permword/error.hpp"
#include "permword/word.hpp"

namespace permword {

// Rank vector in one-line notation, ranks 1..n.  Extracted permutations
// carry the start position they came from; equality and hashing look at the
// ranks only.
class SubPermutation {
 public:
  SubPermutation() = default;
  explicit SubPermutation(std::vector<int> ranks, std::optional<std::size_t> source = {})
      : ranks_(std::move(ranks)), source_(source) {}

  std::size_t size() const { return ranks_.size(); }
  int operator[](std::size_t i) const { return ranks_[i]; }
  const std::vector<int>& ranks() const { return ranks_; }
  std::optional<std::size_t> source() const { return source_; }
  void set_source(std::optional<std::size_t> s) { source_ = s; }

  bool is_valid() const {
    std::vector<bool> seen(ranks_.size(), false);
    for (int r : ranks_) {
      if (r < 1 || static_cast<std::size_t>(r) > ranks_.size() || seen[static_cast<std::size_t>(r - 1)])
        return false;
      seen[static_cast<std::size_t>(r - 1)] = true;
    }
    return true;
  }

  // "(4 9 7 2 6 1 3 8 5)"
  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < ranks_.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(ranks_[i]);
    }
    return out + ")";
  }

  static SubPermutation parse(std::string_view text) {
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && text[i] == ' ') ++i; };
    skip_ws();
    if (i >= text.size() || text[i] != '(') throw domain_error("permutation text must start with '('");
    ++i;
    std::vector<int> ranks;
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] == ')') { ++i; break; }
      int v = 0;
      bool any = false;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        v = v * 10 + (text[i] - '0');
        ++i;
        any = true;
      }
      if (!any) throw domain_error("expected a rank in permutation text");
      ranks.push_back(v);
    }
    skip_ws();
    if (i != text.size()) throw domain_error("trailing characters after permutation text");
    SubPermutation p(std::move(ranks));
    if (!p.is_valid()) throw domain_error("ranks are not a permutation of 1..n");
    return p;
  }

  friend bool operator==(const SubPermutation& x, const SubPermutation& y) {
    return x.ranks_ == y.ranks_;
  }
  friend bool operator!=(const SubPermutation& x, const SubPermutation& y) { return !(x == y); }
  friend bool operator<(const SubPermutation& x, const SubPermutation& y) {
    return x.ranks_ < y.ranks_;
  }

 private:
  std::vector<int> ranks_;
  std::optional<std::size_t> source_;
};

struct SubPermutationHash {
  std::size_t operator()(const SubPermutation& p) const {
    std::size_t h = 1469598103934665603ull;
    for (int r : p.ranks()) {
      h ^= static_cast<std::size_t>(r);
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Ranks of positions a..a+n-1 under the shift order of w.
inline SubPermutation extract_subperm(Word& w, std::size_t a, std::size_t n, CapPolicy policy) {
  if (n < 1) throw domain_error("extract_subperm: length must be >= 1");
  ShiftComparator cmp(w, policy);
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t i, std::size_t j) { return cmp.less(a + i, a + j); });
  std::vector<int> ranks(n);
  for (std::size_t r = 0; r < n; ++r) ranks[idx[r]] = static_cast<int>(r + 1);
  return SubPermutation(std::move(ranks), a);
}

inline SubPermutation extract_subperm(Word& w, std::size_t a, std::size_t n) {
  return extract_subperm(w, a, n, CapPolicy::for_window(n));
}

// Ascent/descent word: letter i is 0 iff rank i < rank i+1.  For a
// permutation extracted at (w, a) this recovers the factor w[a, a+n-2].
inline std::string form_of(const SubPermutation& p) {
  if (p.size() < 2) throw domain_error("form_of: length must be >= 2");
  std::string out(p.size() - 1, '0');
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] > p[i + 1]) out[i] = '1';
  return out;
}

// Alias documenting that a binary factor is recoverable from the ranks.
inline std::string factor_from_perm(const SubPermutation& p) { return form_of(p); }

inline bool same_form(const SubPermutation& p, const SubPermutation& q) {
  if (p.size() != q.size()) return false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if ((p[i] < p[i + 1]) != (q[i] < q[i + 1])) return false;
  return true;
}

// Drop the last position and re-rank: L(p)_i = p_i - 1 if p_last < p_i, else p_i.
inline SubPermutation restrict_left(const SubPermutation& p) {
  if (p.size() < 2) throw domain_error("restrict_left: length must be >= 2");
  int last = p[p.size() - 1];
  std::vector<int> ranks(p.size() - 1);
  for (std::size_t i = 0; i + 1 < p.size(); ++i) ranks[i] = p[i] > last ? p[i] - 1 : p[i];
  return SubPermutation(std::move(ranks), p.source());
}

// Drop the first position and re-rank: R(p)_i = p_{i+1} - 1 if p_0 < p_{i+1}, else p_{i+1}.
inline SubPermutation restrict_right(const SubPermutation& p) {
  if (p.size() < 2) throw domain_error("restrict_right: length must be >= 2");
  int first = p[0];
  std::vector<int> ranks(p.size() - 1);
  for (std::size_t i = 0; i + 1 < p.size(); ++i) ranks[i] = p[i + 1] > first ? p[i + 1] - 1 : p[i + 1];
  std::optional<std::size_t> src = p.source();
  if (src) src = *src + 1;
  return SubPermutation(std::move(ranks), src);
}

// M = L(R(p)) = R(L(p)): both endpoints dropped.
inline SubPermutation restrict_middle(const SubPermutation& p) {
  if (p.size() < 3) throw domain_error("restrict_middle: length must be >= 3");
  return restrict_left(restrict_right(p));
}

inline SubPermutation iterate_left(SubPermutation p, std::size_t k) {
  if (p.size() <= k) throw domain_error("iterate_left: length must exceed k");
  for (std::size_t t = 0; t < k; ++t) p = restrict_left(p);
  return p;
}

// Rank reversal n - r + 1; matches extraction from the complemented word.
inline SubPermutation complement_perm(const SubPermutation& p) {
  int n = static_cast<int>(p.size());
  std::vector<int> ranks(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) ranks[i] = n - p[i] + 1;
  return SubPermutation(std::move(ranks), p.source());
}

}  // namespace permword
