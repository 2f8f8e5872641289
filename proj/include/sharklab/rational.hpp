#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sharklab {

// Exact rational number. GMP keeps results of arithmetic in lowest terms with
// a positive denominator, so operator== is value equality.
using Rational = mpq_class;

// p / q in lowest terms; q must be non-zero.
inline Rational make_rational(long p, long q) {
  Rational r{mpz_class(p), mpz_class(q)};
  r.canonicalize();
  return r;
}

// Parses "p/q" or "p" (optional leading '-'). The denominator must be
// positive; non-reduced input is reduced. Throws DomainError otherwise.
Rational parse_rational(std::string_view text);

// Canonical "p/q" text, or "p" for integers.
std::string to_string(const Rational& r);

// Decimal rendering with the given number of significant digits. Only used
// for plots and human-facing tables.
std::string to_decimal(const Rational& r, int significant_digits = 12);

// Closed interval [lo, hi], lo <= hi.
struct Interval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& other) const {
    return lo <= other.lo && other.hi <= hi;
  }
  bool is_point() const { return lo == hi; }
  Rational length() const { return hi - lo; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

// Interval spanned by two values in either order ("[a : b]").
Interval hull(const Rational& a, const Rational& b);

std::string to_string(const Interval& iv);

// x -> slope * x + intercept.
struct Affine {
  Rational slope;
  Rational intercept;

  Rational operator()(const Rational& x) const { return slope * x + intercept; }

  // (*this) o inner
  Affine after(const Affine& inner) const {
    return {slope * inner.slope, slope * inner.intercept + intercept};
  }

  bool is_identity() const { return slope == 1 && intercept == 0; }
};

}  // namespace sharklab
