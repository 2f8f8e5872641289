#pragma once

// Depth-first walk over the itineraries of a PL map. Each leaf at depth n is a
// maximal subinterval X of the start interval on which f, f^2, ..., f^n are
// all affine; leaves are visited in increasing x order, so the first hit of a
// search is also the leftmost one. Nothing of size f^n is ever materialised.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sharklab/errors.hpp"
#include "sharklab/pl_map.hpp"

namespace sharklab::detail {

struct Leaf {
  Interval x;
  // maps[k] is f^(k+1) restricted to x.
  std::span<const Affine> maps;
};

template <class Visitor>
class ItineraryWalk {
 public:
  ItineraryWalk(const PLMap& f, unsigned depth, std::size_t budget, Visitor& visit)
      : f_(f), depth_(depth), budget_(budget), visit_(visit), path_(depth) {}

  // Returns true if the visitor asked to stop.
  bool run(const Interval& start) {
    return descend(0, start, Affine{Rational(1), Rational(0)});
  }

  std::size_t leaves() const { return leaves_; }

 private:
  bool descend(unsigned level, const Interval& x, const Affine& map) {
    if (level == depth_) {
      if (budget_ != 0 && ++leaves_ > budget_) {
        throw ResourceError("piece budget of " + std::to_string(budget_) +
                                " exceeded while walking iterate " + std::to_string(depth_),
                            budget_);
      }
      return visit_(Leaf{x, std::span<const Affine>(path_.data(), depth_)});
    }
    const auto pts = f_.points();
    if (map.slope == 0 || x.is_point()) {
      const Rational y = map(x.lo);
      path_[level] = f_.piece(f_.piece_index(y)).after(map);
      return descend(level + 1, x, path_[level]);
    }
    const Rational y0 = map(x.lo);
    const Rational y1 = map(x.hi);
    const bool up = y0 < y1;
    const Rational& lo = up ? y0 : y1;
    const Rational& hi = up ? y1 : y0;
    // Pieces meeting (lo, hi) in a set of positive length.
    std::size_t first = f_.piece_index(lo);
    if (pts[first + 1].x == lo && first + 1 < f_.piece_count()) ++first;
    const std::size_t last = f_.piece_index(hi);
    auto child = [&](std::size_t j) {
      const Rational& u = pts[j].x > lo ? pts[j].x : lo;
      const Rational& v = pts[j + 1].x < hi ? pts[j + 1].x : hi;
      Interval sub = up ? Interval{(u - map.intercept) / map.slope, (v - map.intercept) / map.slope}
                        : Interval{(v - map.intercept) / map.slope, (u - map.intercept) / map.slope};
      path_[level] = f_.piece(j).after(map);
      return descend(level + 1, sub, path_[level]);
    };
    if (up) {
      for (std::size_t j = first; j <= last; ++j) {
        if (child(j)) return true;
      }
    } else {
      for (std::size_t j = last + 1; j-- > first;) {
        if (child(j)) return true;
      }
    }
    return false;
  }

  const PLMap& f_;
  unsigned depth_;
  std::size_t budget_;
  Visitor& visit_;
  std::vector<Affine> path_;
  std::size_t leaves_ = 0;
};

template <class Visitor>
bool walk_itineraries(const PLMap& f, const Interval& start, unsigned depth, std::size_t budget,
                      Visitor&& visit) {
  ItineraryWalk<std::remove_reference_t<Visitor>> walk(f, depth, budget, visit);
  return walk.run(start);
}

}  // namespace sharklab::detail
