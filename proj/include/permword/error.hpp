#pragma once

#include <stdexcept>
#include <string>

namespace permword {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid word description (bad morphism, empty directive, parse failure).
struct spec_error : error {
  using error::error;
};

// A prefix request exceeded the handle's hard cap.
struct cap_error : error {
  using error::error;
};

// Two shifts stayed equal past the absolute comparison cap.  For aperiodic
// words this signals a cap set too low, or an eventually periodic input.
struct unresolved_error : error {
  unresolved_error(std::size_t a, std::size_t b, std::size_t cap)
      : error("shift comparison unresolved after " + std::to_string(cap) +
              " letters (positions " + std::to_string(a) + " and " +
              std::to_string(b) + "); suspected periodicity"),
        pos_a(a), pos_b(b), cap_used(cap) {}
  std::size_t pos_a, pos_b, cap_used;
};

// Operation called outside its domain (window too short, index out of range).
struct domain_error : error {
  using error::error;
};

}  // namespace permword
