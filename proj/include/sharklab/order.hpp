#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace sharklab {

// n = 2^valuation * odd_part with odd_part odd.
struct DyadicDecomposition {
  unsigned valuation = 0;
  std::uint64_t odd_part = 1;

  friend bool operator==(const DyadicDecomposition&, const DyadicDecomposition&) = default;
};

// Throws DomainError for n == 0.
DyadicDecomposition decompose(std::uint64_t n);

// A point of the Sharkovsky order: a positive integer, or the class 2^inf
// sitting above every power of two and below every 2^i * q with odd q > 1.
class SharkClass {
 public:
  // Throws DomainError for n == 0.
  static SharkClass finite(std::uint64_t n);
  static SharkClass two_inf() { return SharkClass(0); }

  bool is_two_inf() const { return n_ == 0; }
  // Only meaningful when !is_two_inf().
  std::uint64_t value() const { return n_; }

  friend bool operator==(const SharkClass&, const SharkClass&) = default;

 private:
  explicit SharkClass(std::uint64_t n) : n_(n) {}
  std::uint64_t n_;
};

// less: a precedes b in the Sharkovsky order (1 is first, 3 is last).
std::strong_ordering shark_cmp(const SharkClass& a, const SharkClass& b);
std::strong_ordering shark_cmp(std::uint64_t a, std::uint64_t b);

// { m <= bound : m precedes or equals c }, ascending.
std::vector<std::uint64_t> shark_tail(const SharkClass& c, std::uint64_t bound);

struct TailMatch {
  SharkClass cls;
  // The set is exactly the powers of two up to bound; it is equally the
  // truncation of the 2^inf tail.
  bool ambiguous_at_bound = false;
};

// The class whose tail (truncated at bound) equals s, if any.
std::optional<TailMatch> recognize_tail(const std::set<std::uint64_t>& s, std::uint64_t bound);

// "2^inf" or a positive decimal integer. Throws DomainError.
SharkClass parse_shark_class(std::string_view text);
std::string to_string(const SharkClass& c);

}  // namespace sharklab
