#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sharklab/rational.hpp"

namespace sharklab {

inline constexpr std::size_t kDefaultPieceBudget = 1'000'000;

struct Breakpoint {
  Rational x;
  Rational y;

  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

// Continuous piecewise-linear self-map of the closed interval
// [points.front().x, points.back().x], linear between consecutive breakpoints.
// Collinear interior breakpoints are kept as given; see normalize().
class PLMap {
 public:
  // Throws DomainError unless there are at least two points, x is strictly
  // increasing and every y lies in the domain.
  explicit PLMap(std::vector<Breakpoint> points);

  static PLMap identity(const Interval& domain);
  static PLMap constant(const Interval& domain, const Rational& value);

  const Interval& domain() const { return domain_; }
  std::span<const Breakpoint> points() const { return points_; }
  std::size_t piece_count() const { return pieces_.size(); }

  // Linear formula of piece i, valid on [points[i].x, points[i+1].x].
  const Affine& piece(std::size_t i) const { return pieces_[i]; }
  Interval piece_domain(std::size_t i) const { return {points_[i].x, points_[i + 1].x}; }

  // Index of a piece whose closed domain contains x (the left one at
  // interior breakpoints). x must be in the domain.
  std::size_t piece_index(const Rational& x) const;

  // Throws DomainError if x is outside the domain.
  Rational operator()(const Rational& x) const;

  // Exact image f(J) = [min f, max f] over J. J must lie in the domain.
  Interval image(const Interval& j) const;

  friend bool operator==(const PLMap& a, const PLMap& b) { return a.points_ == b.points_; }

 private:
  Interval domain_;
  std::vector<Breakpoint> points_;
  std::vector<Affine> pieces_;
};

Rational eval(const PLMap& f, const Rational& x);

// g o f. Requires f's range inside g's domain and the result to be a self-map
// of f's domain; throws DomainError otherwise.
PLMap compose(const PLMap& g, const PLMap& f);

// f^n, with f^0 the identity. Throws ResourceError when an intermediate
// iterate has more than piece_budget pieces.
PLMap iterate(const PLMap& f, unsigned n, std::size_t piece_budget = kDefaultPieceBudget);

// Drops interior breakpoints collinear with their neighbours.
PLMap normalize(const PLMap& f);

// Same function (possibly different breakpoint lists).
bool value_equal(const PLMap& a, const PLMap& b);

// Number of maximal monotone (non-strict) pieces.
std::size_t lap_count(const PLMap& f);

}  // namespace sharklab
