#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "permword/analysis.hpp"
#include "permword/doubling.hpp"
#include "permword/formulas.hpp"
#include "permword/patterns.hpp"
#include "permword/perm_set.hpp"
#include "permword/subperm.hpp"
#include "permword/word.hpp"

namespace permword {

struct ReportRow {
  std::string word;
  std::size_t n = 0;
  std::optional<std::size_t> tau, tau_even, tau_odd, rho, formula;
  std::optional<bool> match;  // empty = informational or inconclusive
  std::optional<bool> converged;
  std::size_t horizon = 0;
  std::string note;
};

enum class SuiteOutcome { pass, fail, inconclusive };

struct SuiteReport {
  std::string suite;
  std::string word;
  std::size_t horizon = 0;
  std::vector<ReportRow> rows;
  std::vector<std::string> counterexamples;

  SuiteOutcome outcome() const {
    bool inconclusive = false;
    for (const auto& r : rows) {
      if (r.match && !*r.match) return SuiteOutcome::fail;
      if (!r.match && r.converged && !*r.converged) inconclusive = true;
    }
    return inconclusive ? SuiteOutcome::inconclusive : SuiteOutcome::pass;
  }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "sturmian-tau",   "doubled-sturmian", "tm-rho",          "tm-tau",
      "doubled-tm",     "complement",       "bounds",          "delta-oracle",
      "restrictions",   "type1-exclusion",  "restriction-equivalence",
      "tm-pairs",       "tm-injectivity"};
  return names;
}

namespace detail {

inline ReportRow row_for(const std::string& word, std::size_t n, std::size_t horizon) {
  ReportRow r;
  r.word = word;
  r.n = n;
  r.horizon = horizon;
  return r;
}

// Longest run of the majority letter of a balanced word; complement-
// normalized so that the minority letter is isolated.
inline int sturmian_run_k(const RunParameters& rp) {
  if (rp.k0 > 1 && rp.k1 > 1)
    throw domain_error("word has runs of both letters longer than 1; not Sturmian");
  return std::max(rp.k0, rp.k1);
}

inline void require_thue_morse(Word& w, const std::string& suite) {
  Word tm(WordSpec::thue_morse());
  if (w.prefix_string(128) != tm.prefix_string(128))
    throw domain_error(suite + ": suite requires the thue-morse word");
}

inline std::uint64_t factorial_capped(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    if (f > (std::uint64_t{1} << 62) / i) return std::uint64_t{1} << 63;  // big enough
    f *= i;
  }
  return f;
}

}  // namespace detail

// Named end-to-end checks of the closed-form counts and the structural
// properties of the doubling map.  Each row asserts only when its
// enumeration converged; otherwise it is reported as inconclusive.
inline SuiteReport verify_suite(const std::string& name, const WordSpec& spec, std::size_t n_lo,
                                std::size_t n_hi, std::size_t horizon, CapPolicy policy = {},
                                std::size_t samples = 1000) {
  if (n_lo > n_hi) throw domain_error("verify_suite: empty range");
  SuiteReport rep;
  rep.suite = name;
  rep.word = spec.render();
  rep.horizon = horizon;

  Word w(spec);

  auto push_fail_example = [&](const std::string& text) {
    if (rep.counterexamples.size() < 16) rep.counterexamples.push_back(text);
  };

  if (name == "sturmian-tau") {
    // tau(n) = n for every Sturmian word, n >= 2
    PermEnumerator en(w, policy);
    en.reserve(horizon + n_hi);
    for (std::size_t n = std::max<std::size_t>(n_lo, 2); n <= n_hi; ++n) {
      PermSetReport ps = en.perm_set(n, horizon);
      ReportRow r = detail::row_for(rep.word, n, horizon);
      r.tau = ps.tau;
      r.formula = n;
      r.converged = ps.converged;
      if (ps.converged) {
        r.match = ps.tau == n;
        if (!*r.match) push_fail_example("tau(" + std::to_string(n) + ") = " + std::to_string(ps.tau));
      }
      rep.rows.push_back(std::move(r));
    }
  } else if (name == "doubled-sturmian") {
    // tau_{d(s)}(n) = n + 2k + 1 for n at and beyond twice the scanned
    // class-coverage window; smaller n in the range are reported only.
    RunParameters rp = run_parameters(w, kDefaultScanHorizon);
    int k = detail::sturmian_run_k(rp);
    std::size_t N = recurrence_window(w, static_cast<std::size_t>(k), horizon);
    std::size_t threshold = 2 * N;
    Word d(WordSpec::doubled(spec));
    PermEnumerator en(d, policy);
    en.reserve(horizon + n_hi);
    for (std::size_t n = std::max<std::size_t>(n_lo, 2); n <= n_hi; ++n) {
      PermSetReport ps = en.perm_set(n, horizon);
      ReportRow r = detail::row_for(rep.word, n, horizon);
      r.tau = ps.tau;
      r.formula = n + 2 * static_cast<std::size_t>(k) + 1;
      r.converged = ps.converged;
      if (n < threshold) {
        r.note = "below 2N = " + std::to_string(threshold) + (ps.tau == *r.formula ? "; agrees" : "; differs");
      } else if (ps.converged) {
        r.match = ps.tau == tau_doubled_sturmian_formula(n, k, threshold);
        if (!*r.match) push_fail_example("tau_d(" + std::to_string(n) + ") = " + std::to_string(ps.tau));
      }
      rep.rows.push_back(std::move(r));
    }
  } else if (name == "tm-rho") {
    detail::require_thue_morse(w, name);
    PermEnumerator en(w, policy);
    for (std::size_t n = std::max<std::size_t>(n_lo, 3); n <= n_hi; ++n) {
      RhoReport rr = en.rho(n, horizon);
      ReportRow r = detail::row_for(rep.word, n, horizon);
      r.rho = rr.count;
      r.formula = rho_tm_formula(n);
      r.converged = rr.converged;
      if (rr.converged) {
        r.match = rr.count == *r.formula;
        if (!*r.match) push_fail_example("rho(" + std::to_string(n) + ") = " + std::to_string(rr.count));
      }
      rep.rows.push_back(std::move(r));
    }
  } else if (name == "tm-tau") {
    detail::require_thue_morse(w, name);
    PermEnumerator en(w, policy);
    en.reserve(horizon + n_hi);
    for (std::size_t n = std::max<std::size_t>(n_lo, 6); n <= n_hi; ++n) {
      PermSetReport ps = en.perm_set(n, horizon);
      ReportRow r = detail::row_for(rep.word, n, horizon);
      r.tau = ps.tau;
      r.formula = tau_tm_formula(n);
      r.converged = ps.converged;
      if (ps.converged) {
        r.match = ps.tau == *r.formula;
        if (!*r.match) push_fail_example("tau(" + std::to_string(n) + ") = " + std::to_string(ps.tau));
      }
      rep.rows.push_back(std::move(r));
    }
  } else if (name == "doubled-tm") {
    // range is in window units n; asserts both doubled lengths 2n-1 and 2n
    detail::require_thue_morse(w, name);
    Word d(WordSpec::doubled(spec));
    PermEnumerator en(d, policy);
    en.reserve(horizon + 2 * n_hi);
    auto is_pow2 = [](std::size_t v) { return v && (v & (v - 1)) == 0; };
    for (std::size_t n = std::max<std::size_t>(n_lo, 9); n <= n_hi; ++n) {
      for (std::size_t m : {2 * n - 1, 2 * n}) {
        PermSetReport ps = en.perm_set(m, horizon);
        ReportRow r = detail::row_for(rep.word, m, horizon);
        r.tau = ps.tau;
        r.tau_even = ps.even_count;
        r.tau_odd = ps.odd_count;
        r.formula = tau_doubled_tm_formula(m);
        r.converged = ps.converged;
        // around powers of two the image maps collide and the affected
        // parity side tracks the factor count instead of the base
        // permutation count; even lengths draw their odd side from windows
        // of n+1 through the middle restriction, which also collides at
        // 2^r + 1
        bool collapse = is_pow2(n) || is_pow2(n + 1) || (m % 2 == 0 && is_pow2(n + 2));
        r.note = collapse ? "collision regime" : "injective regime";
        if (ps.converged) {
          r.match = ps.tau == *r.formula && ps.even_count + ps.odd_count == ps.tau;
          if (!*r.match)
            push_fail_example("tau_d(" + std::to_string(m) + ") = " + std::to_string(ps.tau));
        }
        rep.rows.push_back(std::move(r));
      }
    }
  } else if (name == "complement") {
    // the rank-reversal map carries Perm^w(n) onto Perm^{complement}(n)
    Word wc(WordSpec::complemented(spec));
    PermEnumerator en(w, policy), enc(wc, policy);
    en.reserve(horizon + n_hi);
    enc.reserve(horizon + n_hi);
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
      PermSetReport ps = en.perm_set(n, horizon);
      PermSetReport psc = enc.perm_set(n, horizon);
      std::vector<SubPermutation> mapped;
      mapped.reserve(ps.perms.size());
      for (const auto& p : ps.perms) mapped.push_back(complement_perm(p));
      std::sort(mapped.begin(), mapped.end());
      ReportRow r = detail::row_for(rep.word, n, horizon);
      r.tau = ps.tau;
      r.formula = psc.tau;
      r.converged = ps.converged && psc.converged;
      if (*r.converged) {
        r.match = mapped.size() == psc.perms.size() &&
                  std::equal(mapped.begin(), mapped.end(), psc.perms.begin());
        if (!*r.match) push_fail_example("complement bijection fails at n = " + std::to_string(n));
      }
      rep.rows.push_back(std::move(r));
    }
  } else if (name == "bounds") {
    // rho(n-1) <= tau(n) <= n!, and the doubled-word counts against their
    // parity upper bounds for n past the class-coverage window
    ClassTable table(w);
    std::size_t k = static_cast<std::size_t>(table.k());
    std::size_t N = recurrence_window(w, k, horizon);
    Word d(WordSpec::doubled(spec));
    PermEnumerator en(w, policy), den(d, policy);
    en.reserve(horizon + n_hi + k + 1);
    den.reserve(horizon + 2 * n_hi);
    for (std::size_t n = std::max<std::size_t>(n_lo, 2); n <= n_hi; ++n) {
      PermSetReport ps = en.perm_set(n, horizon);
      RhoReport rr = en.rho(n - 1, horizon);
      ReportRow r = detail::row_for(rep.word, n, horizon);
      r.tau = ps.tau;
      r.rho = rr.count;
      r.converged = ps.converged && rr.converged;
      r.note = "rho(n-1) <= tau(n) <= n!";
      if (*r.converged) {
        r.match = rr.count <= ps.tau && ps.tau <= detail::factorial_capped(n);
        if (!*r.match) push_fail_example("sandwich fails at n = " + std::to_string(n));
      }
      rep.rows.push_back(std::move(r));
    }
    for (std::size_t n = std::max(n_lo, N); n <= n_hi; ++n) {
      PermSetReport base_k = en.perm_set(n + k, horizon);
      PermSetReport base_k1 = en.perm_set(n + k + 1, horizon);
      PermSetReport odd_len = den.perm_set(2 * n - 1, horizon);
      PermSetReport even_len = den.perm_set(2 * n, horizon);
      ReportRow r = detail::row_for(rep.word, n, horizon);
      r.tau = even_len.tau;
      r.tau_even = even_len.even_count;
      r.tau_odd = even_len.odd_count;
      r.formula = base_k.tau + base_k1.tau;
      r.converged = base_k.converged && base_k1.converged && odd_len.converged && even_len.converged;
      r.note = "tau_d(2n-1) <= 2 tau(n+k); tau_d(2n) <= tau(n+k) + tau(n+k+1)";
      if (*r.converged) {
        r.match = odd_len.tau <= 2 * base_k.tau && even_len.tau <= base_k.tau + base_k1.tau;
        if (!*r.match) push_fail_example("doubled bound fails at n = " + std::to_string(n));
      }
      rep.rows.push_back(std::move(r));
    }
  } else if (name == "delta-oracle" || name == "restrictions") {
    // randomized agreement between the closed formulas and re-extraction
    std::mt19937_64 rng(0x5eed5eedULL);
    DoublingMap dm(w, kDefaultScanHorizon, policy);
    std::size_t N = name == "delta-oracle"
                        ? recurrence_window(w, static_cast<std::size_t>(dm.k()), horizon)
                        : 0;
    std::size_t lo = std::max(n_lo, name == "delta-oracle" ? N : std::size_t{3});
    std::size_t hi = std::max(lo, n_hi);
    std::uniform_int_distribution<std::size_t> pick_a(0, horizon - 1);
    std::uniform_int_distribution<std::size_t> pick_n(lo, hi);
    std::size_t mismatches = 0, done = 0, attempts = 0;
    while (done < samples && attempts < 100 * samples) {
      ++attempts;
      std::size_t a = pick_a(rng);
      std::size_t n = pick_n(rng);
      try {
        if (name == "delta-oracle") {
          dm.delta(a, n, /*cross_check=*/true);
        } else {
          SubPermutation p = extract_subperm(w, a, n);
          if (!(restrict_left(p) == extract_subperm(w, a, n - 1)) ||
              !(restrict_right(p) == extract_subperm(w, a + 1, n - 1)) ||
              !(restrict_middle(p) == extract_subperm(w, a + 1, n - 2)))
            throw error("restriction formula mismatch");
          std::size_t kk = 1 + attempts % 3;
          if (n > kk && !(iterate_left(p, kk) == extract_subperm(w, a, n - kk)))
            throw error("iterated restriction mismatch");
        }
        ++done;
      } catch (const domain_error&) {
        continue;  // window unusable (missing class); redraw
      } catch (const error& e) {
        ++mismatches;
        ++done;
        push_fail_example(std::string(e.what()) + " at a=" + std::to_string(a) +
                          " n=" + std::to_string(n));
      }
    }
    ReportRow r = detail::row_for(rep.word, lo, horizon);
    r.formula = 0;
    r.tau = mismatches;
    r.converged = done == samples;
    r.match = mismatches == 0 && done == samples;
    r.note = std::to_string(done) + " samples, n in [" + std::to_string(lo) + ", " +
             std::to_string(hi) + "], mismatches = " + std::to_string(mismatches);
    rep.rows.push_back(std::move(r));
  } else if (name == "type1-exclusion" || name == "restriction-equivalence") {
    DoublingMap dm(w, kDefaultScanHorizon, policy);
    std::size_t k = static_cast<std::size_t>(dm.k());
    std::size_t N = recurrence_window(w, k, horizon);
    PermEnumerator en(w, policy);
    en.reserve(horizon + n_hi + k);
    for (std::size_t n = std::max(n_lo, N); n <= n_hi; ++n) {
      PermSetReport ps = en.perm_set(n + k, horizon);
      ReportRow r = detail::row_for(rep.word, n, horizon);
      r.tau = ps.tau;
      r.converged = ps.converged;
      bool ok = true;
      std::vector<SubPermutation> images, lefts, rights;
      for (const auto& p : ps.perms) {
        SubPermutation img = dm.delta(*p.source(), n, /*cross_check=*/false).image;
        lefts.push_back(restrict_left(img));
        rights.push_back(restrict_right(img));
        images.push_back(std::move(img));
      }
      if (name == "type1-exclusion") {
        for (std::size_t x = 0; x < images.size() && ok; ++x)
          for (std::size_t y = x + 1; y < images.size() && ok; ++y) {
            auto t = complementary_pair_type(images[x], images[y]);
            if (t && *t == 1) {
              ok = false;
              push_fail_example("type-1 pair of images at n = " + std::to_string(n) + ": " +
                                images[x].to_string() + " / " + images[y].to_string());
            }
          }
      } else {
        for (std::size_t x = 0; x < images.size() && ok; ++x)
          for (std::size_t y = x + 1; y < images.size() && ok; ++y) {
            bool eq = images[x] == images[y];
            if (eq != (lefts[x] == lefts[y]) || eq != (rights[x] == rights[y])) {
              ok = false;
              push_fail_example("restriction equivalence fails at n = " + std::to_string(n));
            }
          }
      }
      if (ps.converged) r.match = ok;
      rep.rows.push_back(std::move(r));
    }
  } else if (name == "tm-pairs") {
    detail::require_thue_morse(w, name);
    PermEnumerator en(w, policy);
    en.reserve(horizon + n_hi);
    for (std::size_t len = std::max<std::size_t>(n_lo, 6); len <= n_hi; ++len) {
      PermSetReport ps = en.perm_set(len, horizon);
      ReportRow r = detail::row_for(rep.word, len, horizon);
      r.tau = ps.tau;
      r.converged = ps.converged;
      bool ok = true;
      // n = len - 1 = 2^r + c with 0 <= c < 2^r
      std::size_t n = len - 1;
      std::size_t pw = 1;
      while (pw * 2 <= n) pw *= 2;
      std::size_t c = n - pw;
      bool pairs_possible = c < pw / 2 + 1;
      for (std::size_t x = 0; x < ps.perms.size() && ok; ++x) {
        for (std::size_t y = x + 1; y < ps.perms.size() && ok; ++y) {
          const SubPermutation& p = ps.perms[x];
          const SubPermutation& q = ps.perms[y];
          auto t = complementary_pair_type(p, q);
          bool sf = same_form(p, q);
          if (sf != t.has_value()) {
            ok = false;
            push_fail_example("same-form/pair mismatch at len " + std::to_string(len) + ": " +
                              p.to_string() + " / " + q.to_string());
            break;
          }
          if (!t) continue;
          if (!pairs_possible || static_cast<std::size_t>(*t) != c + 1) {
            ok = false;
            push_fail_example("pair type " + std::to_string(*t) + " at len " +
                              std::to_string(len) + ", expected " +
                              (pairs_possible ? std::to_string(c + 1) : "none"));
            break;
          }
          // restrictions of a pair are pairs of lower type
          auto tl = complementary_pair_type(restrict_left(p), restrict_left(q));
          auto tr = complementary_pair_type(restrict_right(p), restrict_right(q));
          if (*t >= 2) {
            if (!tl || *tl != *t - 1 || !tr || *tr != *t - 1) ok = false;
          } else {
            if (!(restrict_left(p) == restrict_left(q)) ||
                !(restrict_right(p) == restrict_right(q)))
              ok = false;
          }
          auto tmid = complementary_pair_type(restrict_middle(p), restrict_middle(q));
          if (*t >= 3) {
            if (!tmid || *tmid != *t - 2) ok = false;
          } else if (tmid || !(restrict_middle(p) == restrict_middle(q))) {
            ok = false;
          }
          if (!ok)
            push_fail_example("restricted pair type wrong at len " + std::to_string(len));
        }
      }
      if (ps.converged) r.match = ok;
      rep.rows.push_back(std::move(r));
    }
  } else if (name == "tm-injectivity") {
    detail::require_thue_morse(w, name);
    DoublingMap dm(w, kDefaultScanHorizon, policy);
    PermEnumerator en(w, policy);
    en.reserve(horizon + n_hi + 2);
    auto is_pow2 = [](std::size_t v) { return v && (v & (v - 1)) == 0; };
    for (std::size_t n = std::max<std::size_t>(n_lo, 9); n <= n_hi; ++n) {
      PermSetReport ps = en.perm_set(n + 2, horizon);
      ReportRow r = detail::row_for(rep.word, n, horizon);
      r.tau = ps.tau;
      r.converged = ps.converged;
      bool special_delta = is_pow2(n) || is_pow2(n + 1);
      bool special_middle = special_delta || is_pow2(n - 1);
      bool ok = true;
      std::vector<SubPermutation> images, middles;
      for (const auto& p : ps.perms) {
        SubPermutation img = dm.delta(*p.source(), n, /*cross_check=*/false).image;
        middles.push_back(restrict_middle(img));
        images.push_back(std::move(img));
      }
      for (std::size_t x = 0; x < images.size() && ok; ++x) {
        for (std::size_t y = x + 1; y < images.size() && ok; ++y) {
          bool img_eq = images[x] == images[y];
          bool mid_eq = middles[x] == middles[y];
          bool sf = same_form(ps.perms[x], ps.perms[y]);
          bool want_img = special_delta ? sf : false;
          bool want_mid = special_middle ? sf : img_eq;
          if (img_eq != want_img || mid_eq != want_mid) {
            ok = false;
            push_fail_example("injectivity regime fails at n = " + std::to_string(n) + ": " +
                              ps.perms[x].to_string() + " / " + ps.perms[y].to_string());
          }
        }
      }
      r.note = special_delta ? "collision regime" : (special_middle ? "middle collision regime" : "injective regime");
      if (ps.converged) r.match = ok;
      rep.rows.push_back(std::move(r));
    }
  } else {
    throw domain_error("unknown suite: " + name);
  }

  return rep;
}

}  // namespace permword
