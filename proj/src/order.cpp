#include "sharklab/order.hpp"

#include <bit>
#include <charconv>

#include "sharklab/errors.hpp"

namespace sharklab {

DyadicDecomposition decompose(std::uint64_t n) {
  if (n == 0) throw DomainError("decompose: n must be positive");
  const auto i = static_cast<unsigned>(std::countr_zero(n));
  return {i, n >> i};
}

SharkClass SharkClass::finite(std::uint64_t n) {
  if (n == 0) throw DomainError("SharkClass: finite class requires n >= 1");
  return SharkClass(n);
}

std::strong_ordering shark_cmp(std::uint64_t a, std::uint64_t b) {
  return shark_cmp(SharkClass::finite(a), SharkClass::finite(b));
}

std::strong_ordering shark_cmp(const SharkClass& a, const SharkClass& b) {
  if (a.is_two_inf() || b.is_two_inf()) {
    if (a.is_two_inf() && b.is_two_inf()) return std::strong_ordering::equal;
    // 2^inf vs a finite n: above powers of two, below everything else.
    const bool a_inf = a.is_two_inf();
    const DyadicDecomposition d = decompose(a_inf ? b.value() : a.value());
    const bool finite_is_pow2 = d.odd_part == 1;
    if (a_inf) return finite_is_pow2 ? std::strong_ordering::greater : std::strong_ordering::less;
    return finite_is_pow2 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  const DyadicDecomposition da = decompose(a.value());
  const DyadicDecomposition db = decompose(b.value());
  const bool pa = da.odd_part == 1;
  const bool pb = db.odd_part == 1;
  if (pa && pb) return da.valuation <=> db.valuation;
  if (pa) return std::strong_ordering::less;
  if (pb) return std::strong_ordering::greater;
  if (da.valuation != db.valuation) return db.valuation <=> da.valuation;
  return db.odd_part <=> da.odd_part;
}

std::vector<std::uint64_t> shark_tail(const SharkClass& c, std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 1; m <= bound; ++m) {
    if (shark_cmp(SharkClass::finite(m), c) != std::strong_ordering::greater) out.push_back(m);
  }
  return out;
}

std::optional<TailMatch> recognize_tail(const std::set<std::uint64_t>& s, std::uint64_t bound) {
  if (s.empty() || bound == 0) return std::nullopt;
  // The candidate is the Sharkovsky-largest element.
  std::uint64_t top = *s.begin();
  for (const auto m : s) {
    if (m == 0 || m > bound) return std::nullopt;
    if (shark_cmp(m, top) == std::strong_ordering::greater) top = m;
  }
  const auto tail = shark_tail(SharkClass::finite(top), bound);
  if (!std::equal(tail.begin(), tail.end(), s.begin(), s.end())) return std::nullopt;
  const bool pow2 = decompose(top).odd_part == 1;
  const bool ambiguous = pow2 && std::bit_floor(bound) == top;
  return TailMatch{SharkClass::finite(top), ambiguous};
}

SharkClass parse_shark_class(std::string_view text) {
  if (text == "2^inf") return SharkClass::two_inf();
  std::uint64_t n = 0;
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, n);
  if (text.empty() || res.ec != std::errc{} || res.ptr != end || n == 0) {
    throw DomainError("invalid Sharkovsky class '" + std::string(text) +
                      "' (expected a positive integer or 2^inf)");
  }
  return SharkClass::finite(n);
}

std::string to_string(const SharkClass& c) {
  return c.is_two_inf() ? std::string("2^inf") : std::to_string(c.value());
}

}  // namespace sharklab
