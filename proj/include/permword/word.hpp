#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "permword/error.hpp"
#include "permword/word_spec.hpp"

namespace permword {

inline constexpr std::size_t kDefaultHardCap = std::size_t{1} << 24;
inline constexpr std::size_t kDefaultScanHorizon = std::size_t{1} << 17;
inline constexpr std::size_t kDefaultHorizon = std::size_t{1} << 15;

// Lazily materialized prefix of an infinite binary word.
//
// The materialized prefix only grows, and regenerating from the same spec
// always yields the same letters, so prefix(m) is deterministic and
// prefix(m) is a prefix of prefix(m') for m <= m'.
//
// Extension is the only mutating operation.  Reads below materialized() are
// pure; a handle may be shared across threads once extended to the working
// length.
class Word {
 public:
  explicit Word(WordSpec spec, std::size_t hard_cap = kDefaultHardCap)
      : spec_(std::move(spec)), hard_cap_(hard_cap) {
    switch (spec_.kind()) {
      case WordKind::named:
        switch (spec_.name()) {
          case NamedWord::fibonacci: image0_ = {0, 1}; image1_ = {0}; break;
          case NamedWord::thue_morse: image0_ = {0, 1}; image1_ = {1, 0}; break;
          case NamedWord::period_doubling: image0_ = {0, 1}; image1_ = {0, 0}; break;
        }
        break;
      case WordKind::morphic:
        for (char c : spec_.image0()) image0_.push_back(c == '1');
        for (char c : spec_.image1()) image1_.push_back(c == '1');
        break;
      case WordKind::sturmian_cf:
        st_prev_ = {1};
        st_cur_ = {0};
        break;
      case WordKind::doubled:
      case WordKind::complemented:
      case WordKind::shifted:
        inner_ = std::make_unique<Word>(spec_.inner(), hard_cap);
        break;
    }
  }

  const WordSpec& spec() const { return spec_; }
  std::size_t hard_cap() const { return hard_cap_; }
  std::size_t materialized() const { return letters_.size(); }

  // Materialize at least m letters (geometric growth, so interleaved small
  // requests do not rescan the generator).
  void extend_to(std::size_t m) {
    if (m <= letters_.size()) return;
    if (m > hard_cap_)
      throw cap_error("prefix request of " + std::to_string(m) + " letters exceeds hard cap " +
                      std::to_string(hard_cap_) + " for " + spec_.render());
    std::size_t target = letters_.size() ? letters_.size() : std::size_t{64};
    while (target < m) target *= 2;
    if (target > hard_cap_) target = hard_cap_;
    generate(target);
  }

  std::uint8_t at(std::size_t i) {
    if (i >= letters_.size()) extend_to(i + 1);
    return letters_[i];
  }

  // Read without extension; i must already be materialized.
  std::uint8_t letter(std::size_t i) const { return letters_[i]; }

  // View of the first m letters; invalidated by a later extension.
  std::span<const std::uint8_t> prefix(std::size_t m) {
    extend_to(m);
    return {letters_.data(), m};
  }

  std::string prefix_string(std::size_t m) {
    extend_to(m);
    std::string out(m, '0');
    for (std::size_t i = 0; i < m; ++i) out[i] += letters_[i];
    return out;
  }

  // Factor w[i..j], inclusive on both ends.
  std::string factor(std::size_t i, std::size_t j) {
    if (i > j) throw domain_error("factor: start exceeds end");
    extend_to(j + 1);
    std::string out(j - i + 1, '0');
    for (std::size_t t = i; t <= j; ++t) out[t - i] += letters_[t];
    return out;
  }

 private:
  void generate(std::size_t m) {
    switch (spec_.kind()) {
      case WordKind::named:
      case WordKind::morphic: {
        if (letters_.empty()) letters_ = {0};
        while (letters_.size() < m) {
          std::vector<std::uint8_t> next;
          next.reserve(letters_.size() * 2);
          for (std::uint8_t c : letters_) {
            const auto& img = c ? image1_ : image0_;
            next.insert(next.end(), img.begin(), img.end());
            if (next.size() >= m) break;
          }
          if (next.size() <= letters_.size())
            throw spec_error("morphism does not grow: " + spec_.render());
          letters_ = std::move(next);
        }
        break;
      }
      case WordKind::sturmian_cf: {
        const auto& dir = spec_.directive();
        // s_1 = s_0^{a_1 - 1} s_{-1}, s_n = s_{n-1}^{a_n} s_{n-2}; each s_n
        // with n >= 1 is a prefix of the limit word.
        while (st_step_ == 0 || st_cur_.size() < m) {
          int a = dir[st_step_ % dir.size()];
          int reps = st_step_ == 0 ? a - 1 : a;
          std::vector<std::uint8_t> next;
          next.reserve(st_cur_.size() * reps + st_prev_.size());
          for (int t = 0; t < reps; ++t)
            next.insert(next.end(), st_cur_.begin(), st_cur_.end());
          next.insert(next.end(), st_prev_.begin(), st_prev_.end());
          st_prev_ = std::move(st_cur_);
          st_cur_ = std::move(next);
          ++st_step_;
        }
        letters_.assign(st_cur_.begin(), st_cur_.begin() + m);
        break;
      }
      case WordKind::doubled: {
        inner_->extend_to((m + 1) / 2);
        letters_.reserve(m);
        for (std::size_t i = letters_.size(); i < m; ++i)
          letters_.push_back(inner_->letter(i / 2));
        break;
      }
      case WordKind::complemented: {
        inner_->extend_to(m);
        letters_.reserve(m);
        for (std::size_t i = letters_.size(); i < m; ++i)
          letters_.push_back(static_cast<std::uint8_t>(1 - inner_->letter(i)));
        break;
      }
      case WordKind::shifted: {
        std::size_t off = spec_.offset();
        inner_->extend_to(m + off);
        letters_.reserve(m);
        for (std::size_t i = letters_.size(); i < m; ++i)
          letters_.push_back(inner_->letter(i + off));
        break;
      }
    }
  }

  WordSpec spec_;
  std::size_t hard_cap_;
  std::vector<std::uint8_t> letters_;
  std::unique_ptr<Word> inner_;
  std::vector<std::uint8_t> image0_, image1_;
  std::vector<std::uint8_t> st_prev_, st_cur_;
  std::size_t st_step_ = 0;
};

}  // namespace permword
