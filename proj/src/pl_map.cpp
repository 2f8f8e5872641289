#include "sharklab/pl_map.hpp"

#include <algorithm>
#include <string>

#include "sharklab/errors.hpp"

namespace sharklab {

namespace {

// Breakpoint list of g o f, built piece by piece. Stops with ResourceError
// once more than budget pieces have been produced.
std::vector<Breakpoint> compose_points(const PLMap& g, const PLMap& f, std::size_t budget) {
  const auto gp = g.points();
  const auto fp = f.points();
  std::vector<Breakpoint> out;
  out.reserve(fp.size());
  auto push = [&](const Rational& x, const Rational& fx) {
    out.push_back({x, g(fx)});
    if (budget != 0 && out.size() > budget + 1) {
      throw ResourceError("piece budget of " + std::to_string(budget) + " exceeded", budget);
    }
  };
  push(fp[0].x, fp[0].y);
  for (std::size_t i = 0; i + 1 < fp.size(); ++i) {
    const Affine& a = f.piece(i);
    const Rational& y0 = fp[i].y;
    const Rational& y1 = fp[i + 1].y;
    if (y0 != y1) {
      // g-breakpoints strictly inside the image of this piece, in x order.
      const bool up = y0 < y1;
      const Rational& lo = up ? y0 : y1;
      const Rational& hi = up ? y1 : y0;
      auto first = std::upper_bound(gp.begin(), gp.end(), lo,
                                    [](const Rational& v, const Breakpoint& b) { return v < b.x; });
      auto last = std::lower_bound(gp.begin(), gp.end(), hi,
                                   [](const Breakpoint& b, const Rational& v) { return b.x < v; });
      if (up) {
        for (auto it = first; it < last; ++it) {
          push((it->x - a.intercept) / a.slope, it->x);
        }
      } else {
        for (auto it = last; it > first;) {
          --it;
          push((it->x - a.intercept) / a.slope, it->x);
        }
      }
    }
    push(fp[i + 1].x, y1);
  }
  return out;
}

}  // namespace

PLMap::PLMap(std::vector<Breakpoint> points) : points_(std::move(points)) {
  if (points_.size() < 2) throw DomainError("map needs at least 2 breakpoints");
  domain_ = {points_.front().x, points_.back().x};
  for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
    if (!(points_[i].x < points_[i + 1].x)) {
      throw DomainError("breakpoint x-coordinates must be strictly increasing (at index " +
                        std::to_string(i + 1) + ")");
    }
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!domain_.contains(points_[i].y)) {
      throw DomainError("breakpoint " + std::to_string(i) + " has y = " + to_string(points_[i].y) +
                        " outside the domain " + to_string(domain_));
    }
  }
  pieces_.reserve(points_.size() - 1);
  for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
    const auto& p = points_[i];
    const auto& q = points_[i + 1];
    Rational slope = (q.y - p.y) / (q.x - p.x);
    Rational intercept = p.y - slope * p.x;
    pieces_.push_back({std::move(slope), std::move(intercept)});
  }
}

PLMap PLMap::identity(const Interval& domain) {
  return PLMap({{domain.lo, domain.lo}, {domain.hi, domain.hi}});
}

PLMap PLMap::constant(const Interval& domain, const Rational& value) {
  return PLMap({{domain.lo, value}, {domain.hi, value}});
}

std::size_t PLMap::piece_index(const Rational& x) const {
  auto it = std::lower_bound(points_.begin() + 1, points_.end() - 1, x,
                             [](const Breakpoint& b, const Rational& v) { return b.x < v; });
  return static_cast<std::size_t>(it - points_.begin()) - 1;
}

Rational PLMap::operator()(const Rational& x) const {
  if (!domain_.contains(x)) {
    throw DomainError("x = " + to_string(x) + " outside the domain " + to_string(domain_));
  }
  const std::size_t i = piece_index(x);
  if (x == points_[i].x) return points_[i].y;
  if (x == points_[i + 1].x) return points_[i + 1].y;
  return pieces_[i](x);
}

Interval PLMap::image(const Interval& j) const {
  if (!domain_.contains(j)) {
    throw DomainError("interval " + to_string(j) + " outside the domain " + to_string(domain_));
  }
  Rational lo = (*this)(j.lo);
  Rational hi = lo;
  auto widen = [&](const Rational& y) {
    if (y < lo) lo = y;
    if (y > hi) hi = y;
  };
  widen((*this)(j.hi));
  for (const auto& p : points_) {
    if (p.x > j.lo && p.x < j.hi) widen(p.y);
  }
  return {lo, hi};
}

Rational eval(const PLMap& f, const Rational& x) { return f(x); }

PLMap compose(const PLMap& g, const PLMap& f) {
  if (!g.domain().contains(f.image(f.domain()))) {
    throw DomainError("compose: range of the inner map is not inside the outer map's domain");
  }
  return PLMap(compose_points(g, f, 0));
}

PLMap iterate(const PLMap& f, unsigned n, std::size_t piece_budget) {
  if (n == 0) return PLMap::identity(f.domain());
  PLMap result = f;
  for (unsigned k = 2; k <= n; ++k) {
    try {
      result = PLMap(compose_points(f, result, piece_budget));
    } catch (const ResourceError&) {
      throw ResourceError("iterate: piece budget of " + std::to_string(piece_budget) +
                              " exceeded at iterate " + std::to_string(k),
                          piece_budget);
    }
  }
  return result;
}

PLMap normalize(const PLMap& f) {
  const auto pts = f.points();
  std::vector<Breakpoint> out;
  out.reserve(pts.size());
  out.push_back(pts[0]);
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    const auto& a = out.back();
    const auto& b = pts[i];
    const auto& c = pts[i + 1];
    if ((b.y - a.y) * (c.x - b.x) != (c.y - b.y) * (b.x - a.x)) out.push_back(b);
  }
  out.push_back(pts.back());
  return PLMap(std::move(out));
}

bool value_equal(const PLMap& a, const PLMap& b) { return normalize(a) == normalize(b); }

std::size_t lap_count(const PLMap& f) {
  std::size_t laps = 1;
  int dir = 0;
  for (std::size_t i = 0; i < f.piece_count(); ++i) {
    const int s = sgn(f.piece(i).slope);
    if (s == 0) continue;
    if (dir != 0 && s != dir) ++laps;
    dir = s;
  }
  return laps;
}

}  // namespace sharklab
