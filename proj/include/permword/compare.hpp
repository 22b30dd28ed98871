#pragma once

#include <cstdint>
#include <cstddef>

#include "permword/error.hpp"
#include "permword/word.hpp"

namespace permword {

enum class ShiftRelation { less, greater, unresolved };

struct ComparisonOutcome {
  ShiftRelation relation = ShiftRelation::unresolved;
  std::size_t discrepancy = 0;  // first index where the shifts differ (when resolved)
  std::size_t cap_used = 0;
};

// Lexicographic comparison of the shifts w[a] and w[b], looking at most cap
// letters ahead.  Unresolved is a value, not a failure; callers that need a
// verdict escalate the cap.
inline ComparisonOutcome compare_shifts(Word& w, std::size_t a, std::size_t b, std::size_t cap) {
  if (a == b) throw domain_error("compare_shifts: positions must differ");
  ComparisonOutcome out;
  out.cap_used = cap;
  for (std::size_t i = 0; i < cap; ++i) {
    std::uint8_t x = w.at(a + i);
    std::uint8_t y = w.at(b + i);
    if (x != y) {
      out.relation = x < y ? ShiftRelation::less : ShiftRelation::greater;
      out.discrepancy = i;
      return out;
    }
  }
  return out;
}

struct CapPolicy {
  std::size_t initial = 256;
  std::size_t growth = 4;
  std::size_t absolute = std::size_t{1} << 20;

  static CapPolicy for_window(std::size_t n) {
    CapPolicy p;
    p.initial = n < 16 ? 64 : 4 * n;
    return p;
  }
};

// Total order on shift positions.  Aperiodicity guarantees every comparison
// terminates but gives no bound, hence the escalating cap; exhausting the
// absolute cap raises unresolved_error naming the two positions.
class ShiftComparator {
 public:
  explicit ShiftComparator(Word& w, CapPolicy policy = {}) : w_(&w), policy_(policy) {}

  ComparisonOutcome resolve(std::size_t a, std::size_t b) const {
    std::size_t cap = policy_.initial;
    while (true) {
      ComparisonOutcome out = compare_shifts(*w_, a, b, cap);
      if (out.relation != ShiftRelation::unresolved) return out;
      if (cap >= policy_.absolute) throw unresolved_error(a, b, cap);
      cap *= policy_.growth;
      if (cap > policy_.absolute) cap = policy_.absolute;
    }
  }

  bool less(std::size_t a, std::size_t b) const {
    if (a == b) return false;
    return resolve(a, b).relation == ShiftRelation::less;
  }

  bool operator()(std::size_t a, std::size_t b) const { return less(a, b); }

  Word& word() const { return *w_; }
  const CapPolicy& policy() const { return policy_; }

 private:
  Word* w_;
  CapPolicy policy_;
};

}  // namespace permword
