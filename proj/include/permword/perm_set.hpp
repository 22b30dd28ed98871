#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "permword/compare.hpp"
#include "permword/subperm.hpp"
#include "permword/word.hpp"

namespace permword {

// Dense ranks of the shifts at positions 0..count-1 under the shift order.
// Window extraction against a fixed horizon then reduces to re-ranking a
// slice of this array, which is what makes whole-horizon enumeration cheap.
class ShiftRanking {
 public:
  ShiftRanking(Word& w, std::size_t count, CapPolicy policy = {}) : rank_(count) {
    ShiftComparator cmp(w, policy);
    std::vector<std::uint32_t> order(count);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t a, std::uint32_t b) { return cmp.less(a, b); });
    for (std::uint32_t r = 0; r < count; ++r) rank_[order[r]] = r;
  }

  std::uint32_t rank_of(std::size_t pos) const { return rank_[pos]; }
  std::size_t size() const { return rank_.size(); }

 private:
  std::vector<std::uint32_t> rank_;
};

// Deduplicated subpermutation set of one length over a horizon of start
// positions.  Sources record the first occurrence; parity masks record
// whether a permutation was seen at even and/or odd starts.
struct PermSetReport {
  std::size_t n = 0;
  std::size_t horizon = 0;
  std::vector<SubPermutation> perms;       // sorted canonically
  std::vector<std::uint8_t> parity_mask;   // per perm: bit0 even start, bit1 odd start
  std::size_t tau = 0;
  std::size_t even_count = 0;              // perms seen at some even start
  std::size_t odd_count = 0;               // perms seen at some odd start
  std::size_t last_new = 0;                // start of the last newly seen perm
  bool converged = false;                  // no new perm in the final half

  bool parity_disjoint() const {
    for (std::uint8_t m : parity_mask)
      if (m == 3) return false;
    return true;
  }
};

struct RhoReport {
  std::size_t n = 0;
  std::size_t horizon = 0;
  std::size_t count = 0;
  std::size_t last_new = 0;
  bool converged = false;
};

// Enumerates subpermutation and factor sets for one word handle, reusing a
// single shift ranking across lengths.
class PermEnumerator {
 public:
  explicit PermEnumerator(Word& w, CapPolicy policy = {}) : w_(&w), policy_(policy) {}

  PermSetReport perm_set(std::size_t n, std::size_t horizon) {
    if (n < 1) throw domain_error("perm_set: length must be >= 1");
    ensure_ranking(horizon + n);
    struct Info {
      std::size_t first;
      std::uint8_t parity;
    };
    std::unordered_map<SubPermutation, Info, SubPermutationHash> seen;
    PermSetReport rep;
    rep.n = n;
    rep.horizon = horizon;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> buf(n);
    std::vector<int> ranks(n);
    for (std::size_t a = 0; a < horizon; ++a) {
      for (std::size_t i = 0; i < n; ++i)
        buf[i] = {ranking_[a + i], static_cast<std::uint32_t>(i)};
      std::sort(buf.begin(), buf.end());
      for (std::size_t r = 0; r < n; ++r) ranks[buf[r].second] = static_cast<int>(r + 1);
      SubPermutation key(ranks);
      auto it = seen.find(key);
      std::uint8_t bit = (a & 1) ? std::uint8_t{2} : std::uint8_t{1};
      if (it == seen.end()) {
        seen.emplace(std::move(key), Info{a, bit});
        rep.last_new = a;
      } else {
        it->second.parity |= bit;
      }
    }
    rep.perms.reserve(seen.size());
    for (auto& [perm, info] : seen) {
      SubPermutation p = perm;
      p.set_source(info.first);
      rep.perms.push_back(std::move(p));
    }
    std::vector<std::size_t> idx(rep.perms.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
      return rep.perms[i] < rep.perms[j];
    });
    std::vector<SubPermutation> sorted;
    sorted.reserve(rep.perms.size());
    rep.parity_mask.reserve(rep.perms.size());
    for (std::size_t i : idx) {
      rep.parity_mask.push_back(seen.at(rep.perms[i]).parity);
      sorted.push_back(std::move(rep.perms[i]));
    }
    rep.perms = std::move(sorted);
    rep.tau = rep.perms.size();
    for (std::uint8_t m : rep.parity_mask) {
      if (m & 1) ++rep.even_count;
      if (m & 2) ++rep.odd_count;
    }
    rep.converged = rep.last_new < horizon / 2;
    return rep;
  }

  RhoReport rho(std::size_t n, std::size_t horizon) {
    if (n < 1) throw domain_error("rho: length must be >= 1");
    w_->extend_to(horizon + n);
    RhoReport rep;
    rep.n = n;
    rep.horizon = horizon;
    if (n <= 64) {
      // Binary factors of length <= 64 pack into one machine word.
      std::unordered_set<std::uint64_t> seen;
      std::uint64_t window = 0;
      const std::uint64_t mask = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
      for (std::size_t i = 0; i < n; ++i) window = (window << 1) | w_->letter(i);
      if (seen.insert(window).second) rep.last_new = 0;
      for (std::size_t a = 1; a < horizon; ++a) {
        window = ((window << 1) | w_->letter(a + n - 1)) & mask;
        if (seen.insert(window).second) rep.last_new = a;
      }
      rep.count = seen.size();
    } else {
      std::unordered_set<std::string> seen;
      std::string buf(n, '0');
      for (std::size_t a = 0; a < horizon; ++a) {
        for (std::size_t i = 0; i < n; ++i) buf[i] = static_cast<char>('0' + w_->letter(a + i));
        if (seen.insert(buf).second) rep.last_new = a;
      }
      rep.count = seen.size();
    }
    rep.converged = rep.last_new < horizon / 2;
    return rep;
  }

  Word& word() const { return *w_; }

  // Pre-size the ranking when the maximum window end is known, so a sweep
  // over lengths sorts the shifts once.
  void reserve(std::size_t count) { ensure_ranking(count); }

 private:
  void ensure_ranking(std::size_t count) {
    if (count <= ranking_.size()) return;
    ShiftRanking r(*w_, count, policy_);
    ranking_.resize(count);
    for (std::size_t i = 0; i < count; ++i) ranking_[i] = r.rank_of(i);
  }

  Word* w_;
  CapPolicy policy_;
  std::vector<std::uint32_t> ranking_;
};

}  // namespace permword
