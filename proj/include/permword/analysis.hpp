#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "permword/error.hpp"
#include "permword/word.hpp"

namespace permword {

struct FactorSetReport {
  std::size_t n = 0;
  std::size_t horizon = 0;
  std::vector<std::string> factors;  // sorted
  std::size_t count = 0;
  std::size_t last_new = 0;  // start position of the last newly seen factor
  bool converged = false;    // no new factor in the final half of the horizon
};

// Distinct factors of length n among start positions 0..horizon-1.
inline FactorSetReport factor_set(Word& w, std::size_t n, std::size_t horizon) {
  if (n < 1) throw domain_error("factor_set: length must be >= 1");
  w.extend_to(horizon + n);
  std::unordered_set<std::string> seen;
  FactorSetReport rep;
  rep.n = n;
  rep.horizon = horizon;
  std::string buf(n, '0');
  for (std::size_t a = 0; a < horizon; ++a) {
    for (std::size_t i = 0; i < n; ++i) buf[i] = static_cast<char>('0' + w.letter(a + i));
    if (seen.insert(buf).second) rep.last_new = a;
  }
  rep.factors.assign(seen.begin(), seen.end());
  std::sort(rep.factors.begin(), rep.factors.end());
  rep.count = rep.factors.size();
  rep.converged = rep.last_new < horizon / 2;
  return rep;
}

struct RunParameters {
  int k0 = 0;  // longest run of 0 seen
  int k1 = 0;  // longest run of 1 seen
  std::size_t last_new = 0;
  bool converged = false;
};

// Maximal run lengths in prefix(horizon).  Scan-based: certified as lower
// bounds, exact for uniformly recurrent words once the scan has converged.
inline RunParameters run_parameters(Word& w, std::size_t horizon) {
  w.extend_to(horizon);
  RunParameters rp;
  std::size_t i = 0;
  while (i < horizon) {
    std::size_t j = i;
    while (j < horizon && w.letter(j) == w.letter(i)) ++j;
    int len = static_cast<int>(j - i);
    int& k = w.letter(i) ? rp.k1 : rp.k0;
    if (len > k) {
      k = len;
      rp.last_new = i;
    }
    i = j;
  }
  if (rp.k0 == 0 || rp.k1 == 0)
    throw domain_error("run_parameters: prefix uses a single letter, word is degenerate");
  rp.converged = rp.last_new < horizon / 2;
  return rp;
}

// Every shift of an aperiodic binary word starts with exactly one run class:
// 0^{k0}, 0^{k0-1}1, ..., 01, 10, ..., 1^{k1}, listed in increasing
// lexicographic order.  class_of(i) identifies the class of the shift at i
// by its initial run, reading letters from the handle on demand.
class ClassTable {
 public:
  ClassTable(Word& w, std::size_t horizon = kDefaultScanHorizon) : w_(&w) {
    RunParameters rp = run_parameters(w, horizon);
    k0_ = rp.k0;
    k1_ = rp.k1;
    scan_converged_ = rp.converged;
    for (int j = 0; j < k0_; ++j) {
      std::string c(static_cast<std::size_t>(k0_ - j), '0');
      if (j > 0 || k0_ == 1) c += '1';
      classes_.push_back(std::move(c));
    }
    for (int m = 1; m <= k1_; ++m) {
      std::string c(static_cast<std::size_t>(m), '1');
      if (m < k1_ || k1_ == 1) c += '0';
      classes_.push_back(std::move(c));
    }
  }

  int k0() const { return k0_; }
  int k1() const { return k1_; }
  int k() const { return std::max(k0_, k1_); }
  int class_count() const { return k0_ + k1_; }
  bool scan_converged() const { return scan_converged_; }
  const std::vector<std::string>& classes() const { return classes_; }

  int class_of(std::size_t pos) const {
    std::uint8_t a = w_->at(pos);
    int limit = a ? k1_ : k0_;
    int m = 1;
    while (m <= limit && w_->at(pos + m) == a) ++m;
    if (m > limit)
      throw domain_error("class_of: run at position " + std::to_string(pos) +
                         " exceeds the scanned maximum; rescan with a larger horizon");
    return a ? k0_ + m - 1 : k0_ - m;
  }

  Word& word() const { return *w_; }

 private:
  Word* w_;
  int k0_ = 0, k1_ = 0;
  bool scan_converged_ = false;
  std::vector<std::string> classes_;
};

// Smallest N such that, over the scanned prefix, every factor of length N
// contains every factor of length n.  Instantiates the recurrence thresholds
// that the class machinery needs; scan-based, requires the factor
// enumeration to have converged.
inline std::size_t recurrence_window(Word& w, std::size_t n, std::size_t horizon) {
  FactorSetReport fs = factor_set(w, n, horizon);
  if (!fs.converged)
    throw domain_error("recurrence_window: factor enumeration not converged at horizon " +
                       std::to_string(horizon));
  std::unordered_map<std::string, int> id;
  for (const auto& f : fs.factors) id.emplace(f, static_cast<int>(id.size()));
  const int total = static_cast<int>(id.size());
  std::vector<int> ids(horizon);
  std::string buf(n, '0');
  for (std::size_t a = 0; a < horizon; ++a) {
    for (std::size_t i = 0; i < n; ++i) buf[i] = static_cast<char>('0' + w.letter(a + i));
    ids[a] = id[buf];
  }
  const std::size_t scan = horizon + n - 1;  // letters available
  auto covers = [&](std::size_t N) {
    // every window w[i, i+N-1] inside the scan holds all factor ids among
    // starts i..i+N-n
    if (N < n) return false;
    std::size_t starts = N - n + 1;
    std::vector<int> cnt(static_cast<std::size_t>(total), 0);
    int have = 0;
    for (std::size_t a = 0; a < std::min(starts, ids.size()); ++a)
      if (cnt[static_cast<std::size_t>(ids[a])]++ == 0) ++have;
    std::size_t i = 0;
    while (true) {
      if (have != total) return false;
      std::size_t nxt = i + starts;
      if (i + N >= scan || nxt >= ids.size()) return true;
      if (--cnt[static_cast<std::size_t>(ids[i])] == 0) --have;
      if (cnt[static_cast<std::size_t>(ids[nxt])]++ == 0) ++have;
      ++i;
    }
  };
  std::size_t lo = n, hi = horizon;
  if (!covers(hi))
    throw domain_error("recurrence_window: no covering window length within horizon " +
                       std::to_string(horizon));
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (covers(mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

// True iff for every length <= n_max the number of 1s over scanned factors
// of that length varies by at most 1.
inline bool check_balanced(Word& w, std::size_t n_max, std::size_t horizon) {
  w.extend_to(horizon + n_max);
  std::vector<std::uint32_t> ones(horizon + n_max + 1, 0);
  for (std::size_t i = 0; i < horizon + n_max; ++i)
    ones[i + 1] = ones[i] + w.letter(i);
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::uint32_t lo = ones[n], hi = ones[n];
    for (std::size_t a = 1; a < horizon; ++a) {
      std::uint32_t c = ones[a + n] - ones[a];
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    if (hi - lo > 1) return false;
  }
  return true;
}

// Smallest period p <= max_period valid on the whole scanned prefix, or 0 if
// none.  Aperiodicity smoke test only.
inline std::size_t detect_period(Word& w, std::size_t max_period, std::size_t horizon) {
  w.extend_to(horizon);
  for (std::size_t p = 1; p <= max_period; ++p) {
    bool ok = true;
    for (std::size_t i = 0; i + p < horizon; ++i)
      if (w.letter(i) != w.letter(i + p)) {
        ok = false;
        break;
      }
    if (ok) return p;
  }
  return 0;
}

}  // namespace permword
