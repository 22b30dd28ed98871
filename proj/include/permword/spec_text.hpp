#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "permword/error.hpp"
#include "permword/word_spec.hpp"

namespace permword {

// Recursive-descent parser for the word mini-language:
//
//   spec  := "fibonacci" | "thue-morse" | "period-doubling"
//          | "morphic" ":" "0" "->" bits "," "1" "->" bits
//          | "sturmian" ":" "cf" "=" "[" int ("," int)* "]"
//          | "double" "(" spec ")"
//          | "complement" "(" spec ")"
//          | "shift" "(" int "," spec ")"
//
// Whitespace is insignificant.  Errors carry the offending position and the
// expected token.
class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  WordSpec parse() {
    WordSpec spec = parse_spec();
    skip_ws();
    if (pos_ != text_.size()) fail("end of input");
    return spec;
  }

 private:
  WordSpec parse_spec() {
    std::string word = next_word();
    if (word == "fibonacci") return WordSpec::fibonacci();
    if (word == "thue-morse") return WordSpec::thue_morse();
    if (word == "period-doubling") return WordSpec::period_doubling();
    if (word == "morphic") {
      expect(':');
      expect_word("0");
      expect_arrow();
      std::string image0 = next_bits();
      expect(',');
      expect_word("1");
      expect_arrow();
      std::string image1 = next_bits();
      return WordSpec::morphic(std::move(image0), std::move(image1));
    }
    if (word == "sturmian") {
      expect(':');
      expect_word("cf");
      expect('=');
      expect('[');
      std::vector<int> directive;
      directive.push_back(next_int());
      skip_ws();
      while (peek() == ',') {
        ++pos_;
        directive.push_back(next_int());
        skip_ws();
      }
      expect(']');
      return WordSpec::sturmian(std::move(directive));
    }
    if (word == "double") {
      expect('(');
      WordSpec inner = parse_spec();
      expect(')');
      return WordSpec::doubled(std::move(inner));
    }
    if (word == "complement") {
      expect('(');
      WordSpec inner = parse_spec();
      expect(')');
      return WordSpec::complemented(std::move(inner));
    }
    if (word == "shift") {
      expect('(');
      int offset = next_int();
      expect(',');
      WordSpec inner = parse_spec();
      expect(')');
      return WordSpec::shifted(static_cast<std::size_t>(offset), std::move(inner));
    }
    fail("a word name (fibonacci, thue-morse, period-doubling, morphic, sturmian, double, complement, shift)",
         pos_ - word.size());
    return WordSpec::fibonacci();  // unreachable
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  // Identifiers may contain '-' (thue-morse) but "->" always lexes as the
  // arrow, so stop before a '-' that is followed by '>'.
  std::string next_word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') break;
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '-')) break;
      ++pos_;
    }
    if (pos_ == start) fail("a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string next_bits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (text_[pos_] == '0' || text_[pos_] == '1')) ++pos_;
    if (pos_ == start) fail("a binary string");
    return std::string(text_.substr(start, pos_ - start));
  }

  int next_int() {
    skip_ws();
    std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000'000L) fail("a smaller integer", start);
      ++pos_;
    }
    if (pos_ == start) fail("an integer");
    return static_cast<int>(value);
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("'") + c + "'");
    ++pos_;
  }

  void expect_arrow() {
    skip_ws();
    if (pos_ + 1 >= text_.size() || text_[pos_] != '-' || text_[pos_ + 1] != '>') fail("'->'");
    pos_ += 2;
  }

  void expect_word(const std::string& want) {
    std::size_t at = pos_;
    std::string got = next_word();
    if (got != want) fail("'" + want + "'", at);
  }

  [[noreturn]] void fail(const std::string& expected) { fail(expected, pos_); }

  [[noreturn]] void fail(const std::string& expected, std::size_t at) {
    throw spec_error("word spec parse error at position " + std::to_string(at) + ": expected " +
                     expected + " in \"" + std::string(text_) + "\"");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline WordSpec parse_spec(std::string_view text) { return SpecParser(text).parse(); }

}  // namespace permword
