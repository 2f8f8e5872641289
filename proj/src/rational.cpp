#include "sharklab/rational.hpp"

#include <cctype>
#include <cstdio>
#include <vector>

#include "sharklab/errors.hpp"

namespace sharklab {

namespace {

bool is_integer_text(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && s[0] == '-') {
    if (s.size() == 1) return false;
    i = 1;
  }
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_text(num, true) || !is_integer_text(den, false)) {
    throw DomainError("invalid rational '" + std::string(text) + "'");
  }
  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) {
    throw DomainError("invalid rational '" + std::string(text) + "': zero denominator");
  }
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

std::string to_decimal(const Rational& r, int significant_digits) {
  mpf_class f(r, 256);
  // mpf has no %g; go through gmp_snprintf.
  std::vector<char> buf(64 + static_cast<std::size_t>(significant_digits));
  gmp_snprintf(buf.data(), buf.size(), "%.*Fg", significant_digits, f.get_mpf_t());
  return std::string(buf.data());
}

Interval hull(const Rational& a, const Rational& b) {
  return a <= b ? Interval{a, b} : Interval{b, a};
}

std::string to_string(const Interval& iv) {
  return "[" + to_string(iv.lo) + ", " + to_string(iv.hi) + "]";
}

}  // namespace sharklab
