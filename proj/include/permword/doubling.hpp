#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permword/analysis.hpp"
#include "permword/compare.hpp"
#include "permword/error.hpp"
#include "permword/perm_set.hpp"
#include "permword/subperm.hpp"
#include "permword/word.hpp"

namespace permword {

// Occurrence sets of the run classes over a window (a, n): gamma_j holds the
// window offsets whose shift starts with class j, S(j) the prefix sums of
// their sizes, with S(-1) = 0 and S(last) = n.
struct GammaProfile {
  std::size_t start = 0;
  std::size_t length = 0;
  std::vector<std::vector<std::size_t>> gamma;
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> sums;  // sums[j+1] = S_j

  std::size_t S(int j) const { return sums[static_cast<std::size_t>(j + 1)]; }
  bool complete() const {
    for (std::size_t s : sizes)
      if (s == 0) return false;
    return true;
  }
};

enum class DoubledOrderCase { a, b, c, d, e };

// How the four doubled positions 2a, 2a+1, 2b, 2b+1 interleave, given the
// letters at a and b and whether the two shifts share a run class.
struct DoubledShiftOrder {
  DoubledOrderCase label;
  std::array<std::size_t, 4> ascending;  // doubled positions in increasing shift order
  bool swapped;                          // inputs arrived with w[a] > w[b]
};

struct DeltaResult {
  SubPermutation input;        // length n + k at a
  SubPermutation image;        // length 2n at 2a
  GammaProfile profile;
  std::string window;          // w[a, a+n-1]
  std::vector<int> class_of;   // class index per window position
  bool cross_checked = false;  // image verified against direct extraction
};

// The window-level doubling analysis for one word: run classes, gamma
// profiles, the forward image map into the doubled word, and its left /
// right / middle restrictions.  Images are computed by the closed formula
//   ascent at i:   image[2i] = Lk_i + S_{j-1},  image[2i+1] = Lk_i + S_j
//   descent at i:  the two values swap
// with Lk the k-fold left restriction of the input and j the class at a+i,
// and cross-checked against direct extraction in d(w) unless disabled.
class DoublingMap {
 public:
  explicit DoublingMap(Word& w, std::size_t scan_horizon = kDefaultScanHorizon,
                       CapPolicy policy = {})
      : base_(&w),
        table_(w, scan_horizon),
        doubled_(std::make_unique<Word>(WordSpec::doubled(w.spec()), w.hard_cap())),
        policy_(policy) {}

  Word& base() const { return *base_; }
  Word& doubled() const { return *doubled_; }
  const ClassTable& classes() const { return table_; }
  int k() const { return table_.k(); }

  GammaProfile gamma_profile(std::size_t a, std::size_t n) const {
    GammaProfile g;
    g.start = a;
    g.length = n;
    g.gamma.resize(static_cast<std::size_t>(table_.class_count()));
    for (std::size_t i = 0; i < n; ++i)
      g.gamma[static_cast<std::size_t>(table_.class_of(a + i))].push_back(i);
    g.sums.push_back(0);
    for (const auto& cls : g.gamma) {
      g.sizes.push_back(cls.size());
      g.sums.push_back(g.sums.back() + cls.size());
    }
    return g;
  }

  DoubledShiftOrder order_doubled_shifts(std::size_t a, std::size_t b) const {
    ShiftComparator cmp(*base_, policy_);
    DoubledShiftOrder out{};
    out.swapped = !cmp.less(a, b);
    if (out.swapped) std::swap(a, b);
    int la = base_->at(a);
    int lb = base_->at(b);
    int ca = table_.class_of(a);
    int cb = table_.class_of(b);
    // the earlier shift cannot start with the larger letter, and within the
    // same starting letter its class index cannot exceed the later one's
    if (la > lb || (la == lb && ca > cb))
      throw error("order_doubled_shifts: class order contradicts the shift order (this is a bug)");
    if (la == 0 && lb == 0) {
      if (ca < cb) {
        out.label = DoubledOrderCase::a;
        out.ascending = {2 * a, 2 * a + 1, 2 * b, 2 * b + 1};
      } else {
        out.label = DoubledOrderCase::b;
        out.ascending = {2 * a, 2 * b, 2 * a + 1, 2 * b + 1};
      }
    } else if (la == 0 && lb == 1) {
      out.label = DoubledOrderCase::c;
      out.ascending = {2 * a, 2 * a + 1, 2 * b + 1, 2 * b};
    } else if (ca < cb) {
      out.label = DoubledOrderCase::d;
      out.ascending = {2 * a + 1, 2 * a, 2 * b + 1, 2 * b};
    } else {
      out.label = DoubledOrderCase::e;
      out.ascending = {2 * a + 1, 2 * b + 1, 2 * a, 2 * b};
    }
    return out;
  }

  DeltaResult delta(std::size_t a, std::size_t n, bool cross_check = true) const {
    DeltaResult r = delta_unchecked(a, n);
    if (!r.profile.complete())
      throw domain_error("delta: window at " + std::to_string(a) + " of length " +
                         std::to_string(n) +
                         " misses a run class; enlarge the window past the recurrence threshold");
    if (cross_check) run_cross_check(r, a, n);
    return r;
  }

  // Image without the completeness requirement; used by the census, which
  // skips incomplete windows instead of failing.
  DeltaResult delta_unchecked(std::size_t a, std::size_t n) const {
    if (n < 1) throw domain_error("delta: window length must be >= 1");
    std::size_t len = n + static_cast<std::size_t>(table_.k());
    DeltaResult r;
    r.input = extract_subperm(*base_, a, len, CapPolicy::for_window(len));
    r.profile = gamma_profile(a, n);
    r.window = base_->factor(a, a + n - 1);
    SubPermutation lk = iterate_left(r.input, static_cast<std::size_t>(table_.k()));
    std::vector<int> image(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      int j = table_.class_of(a + i);
      r.class_of.push_back(j);
      int lo = lk[i] + static_cast<int>(r.profile.S(j - 1));
      int hi = lk[i] + static_cast<int>(r.profile.S(j));
      bool ascent = r.input[i] < r.input[i + 1];
      image[2 * i] = ascent ? lo : hi;
      image[2 * i + 1] = ascent ? hi : lo;
    }
    r.image = SubPermutation(std::move(image), 2 * a);
    return r;
  }

  SubPermutation delta_left(std::size_t a, std::size_t n, bool cross_check = true) const {
    SubPermutation img = restrict_left(delta(a, n, cross_check).image);
    if (cross_check) verify_equal(img, 2 * a, 2 * n - 1, "delta_left");
    return img;
  }

  SubPermutation delta_right(std::size_t a, std::size_t n, bool cross_check = true) const {
    SubPermutation img = restrict_right(delta(a, n, cross_check).image);
    if (cross_check) verify_equal(img, 2 * a + 1, 2 * n - 1, "delta_right");
    return img;
  }

  SubPermutation delta_middle(std::size_t a, std::size_t n, bool cross_check = true) const {
    SubPermutation img = restrict_middle(delta(a, n, cross_check).image);
    if (cross_check) verify_equal(img, 2 * a + 1, 2 * n - 2, "delta_middle");
    return img;
  }

 private:
  void run_cross_check(DeltaResult& r, std::size_t a, std::size_t n) const {
    verify_equal(r.image, 2 * a, 2 * n, "delta");
    r.cross_checked = true;
  }

  void verify_equal(const SubPermutation& img, std::size_t at, std::size_t len,
                    const char* what) const {
    SubPermutation direct = extract_subperm(*doubled_, at, len, CapPolicy::for_window(len));
    if (!(direct == img))
      throw error(std::string(what) + ": formula image differs from direct extraction at position " +
                  std::to_string(at) + " (this is a bug)");
  }

  Word* base_;
  ClassTable table_;
  std::unique_ptr<Word> doubled_;
  CapPolicy policy_;
};

// Split an enumerated doubled-word permutation set by start parity.  The two
// sides must be disjoint once the length passes the recurrence threshold;
// a shared permutation there signals a misconfigured horizon.
struct EvenOddSplit {
  std::vector<SubPermutation> even, odd;
};

inline EvenOddSplit partition_even_odd(const PermSetReport& rep, std::size_t min_disjoint_length) {
  EvenOddSplit out;
  for (std::size_t i = 0; i < rep.perms.size(); ++i) {
    std::uint8_t m = rep.parity_mask[i];
    if (m == 3 && rep.n >= min_disjoint_length)
      throw domain_error("partition_even_odd: permutation " + rep.perms[i].to_string() +
                         " occurs at both parities at length " + std::to_string(rep.n));
    if (m & 1) out.even.push_back(rep.perms[i]);
    if (m & 2) out.odd.push_back(rep.perms[i]);
  }
  return out;
}

enum class RestrictionKind { none, left, right, middle };

struct CollisionCensus {
  std::size_t n = 0;
  std::size_t horizon = 0;
  RestrictionKind restriction = RestrictionKind::none;
  std::size_t skipped_incomplete = 0;  // inputs whose windows miss a class
  bool converged = false;
  struct Collision {
    SubPermutation p, q;  // distinct inputs, sources attached
    SubPermutation image;
  };
  std::vector<Collision> collisions;
};

// All unordered pairs of distinct length-(n+k) subpermutations whose images
// under the chosen map coincide.  Plain-image collisions must come from
// equal window permutations with equal per-position classes; a collision
// violating that is reported as an internal error.
inline CollisionCensus collision_census(DoublingMap& dm, std::size_t n, std::size_t horizon,
                                        RestrictionKind which = RestrictionKind::none,
                                        CapPolicy policy = {}) {
  PermEnumerator en(dm.base(), policy);
  std::size_t len = n + static_cast<std::size_t>(dm.k());
  PermSetReport rep = en.perm_set(len, horizon);

  CollisionCensus census;
  census.n = n;
  census.horizon = horizon;
  census.restriction = which;
  census.converged = rep.converged;

  std::map<std::vector<int>, std::vector<const SubPermutation*>> groups;
  for (const SubPermutation& p : rep.perms) {
    std::size_t a = *p.source();
    DeltaResult d = dm.delta_unchecked(a, n);
    if (!d.profile.complete()) {
      ++census.skipped_incomplete;
      continue;
    }
    SubPermutation img = d.image;
    switch (which) {
      case RestrictionKind::none: break;
      case RestrictionKind::left: img = restrict_left(img); break;
      case RestrictionKind::right: img = restrict_right(img); break;
      case RestrictionKind::middle: img = restrict_middle(img); break;
    }
    groups[img.ranks()].push_back(&p);
  }

  for (auto& [image_ranks, members] : groups) {
    if (members.size() < 2) continue;
    for (std::size_t x = 0; x < members.size(); ++x) {
      for (std::size_t y = x + 1; y < members.size(); ++y) {
        const SubPermutation& p = *members[x];
        const SubPermutation& q = *members[y];
        if (which == RestrictionKind::none) {
          // window permutations and per-position classes must agree
          std::size_t kk = static_cast<std::size_t>(dm.k());
          if (!(iterate_left(p, kk) == iterate_left(q, kk)))
            throw error("collision census: colliding images with different window permutations");
          std::size_t pa = *p.source(), qa = *q.source();
          for (std::size_t i = 0; i < n; ++i)
            if (dm.classes().class_of(pa + i) != dm.classes().class_of(qa + i))
              throw error("collision census: colliding images with different class profiles");
        }
        census.collisions.push_back({p, q, SubPermutation(image_ranks)});
      }
    }
  }
  return census;
}

}  // namespace permword
