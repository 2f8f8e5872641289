#include "sharklab/periodic.hpp"

#include <algorithm>
#include <numeric>

#include "itinerary.hpp"
#include "sharklab/errors.hpp"

namespace sharklab {

namespace {

using detail::Leaf;

enum class HitKind { none, isolated, segment };

struct LeafHit {
  HitKind kind = HitKind::none;
  Rational point;
};

// Smallest k in 1..n with f^k(x) = x, read off the leaf's affine maps.
unsigned leaf_period(const Leaf& leaf, const Rational& x) {
  for (std::size_t k = 0; k < leaf.maps.size(); ++k) {
    if (leaf.maps[k](x) == x) return static_cast<unsigned>(k + 1);
  }
  return 0;
}

// A point of least period exactly n inside a depth-n leaf, if there is one.
LeafHit classify_leaf(const Leaf& leaf, unsigned n) {
  const Affine& fn = leaf.maps[n - 1];
  if (leaf.x.is_point()) {
    const Rational& x = leaf.x.lo;
    if (leaf_period(leaf, x) == n) return {HitKind::isolated, x};
    return {};
  }
  if (fn.is_identity()) {
    unsigned generic = n;
    for (unsigned k = 1; k < n; ++k) {
      if (leaf.maps[k - 1].is_identity()) {
        generic = k;
        break;
      }
    }
    if (generic != n) return {};
    // The non-identity f^k (k < n) each fix at most one point of the leaf,
    // so one of these n + 1 candidates has least period n.
    const Rational step = leaf.x.length() / (n + 1);
    for (unsigned i = 0; i <= n; ++i) {
      Rational c = leaf.x.lo + step * i;
      if (leaf_period(leaf, c) == n) return {HitKind::segment, std::move(c)};
    }
    return {};
  }
  if (fn.slope == 1) return {};
  Rational x = fn.intercept / (1 - fn.slope);
  if (!leaf.x.contains(x)) return {};
  if (leaf_period(leaf, x) == n) return {HitKind::isolated, std::move(x)};
  return {};
}

std::optional<Rational> leftmost_of_period(const PLMap& f, unsigned n, std::size_t budget) {
  std::optional<Rational> found;
  detail::walk_itineraries(f, f.domain(), n, budget, [&](const Leaf& leaf) {
    LeafHit hit = classify_leaf(leaf, n);
    if (hit.kind == HitKind::none) return false;
    found = std::move(hit.point);
    return true;
  });
  return found;
}

// min (or max) of { x in [lo, hi] : f(x) = y }, if the set is non-empty.
std::optional<Rational> solve_extreme(const PLMap& f, const Rational& y, const Interval& range,
                                      bool want_max) {
  const auto pts = f.points();
  const std::size_t first = f.piece_index(range.lo);
  const std::size_t last = f.piece_index(range.hi);
  auto on_piece = [&](std::size_t j) -> std::optional<Rational> {
    const Rational& u = std::max(pts[j].x, range.lo);
    const Rational& v = std::min(pts[j + 1].x, range.hi);
    if (u > v) return std::nullopt;
    const Affine& a = f.piece(j);
    if (a.slope == 0) {
      if (pts[j].y == y) return want_max ? v : u;
      return std::nullopt;
    }
    Rational x = (y - a.intercept) / a.slope;
    if (u <= x && x <= v) return x;
    return std::nullopt;
  };
  if (want_max) {
    for (std::size_t j = last + 1; j-- > first;) {
      if (auto x = on_piece(j)) return x;
    }
  } else {
    for (std::size_t j = first; j <= last; ++j) {
      if (auto x = on_piece(j)) return x;
    }
  }
  return std::nullopt;
}

// Closed K inside J with f(K) = L, given f(J) covers L: with f(p) = a and
// f(q) = b, take the last hit of a before q and then the first hit of b.
Interval select_preimage(const PLMap& f, const Interval& j, const Interval& l) {
  const Rational p = *solve_extreme(f, l.lo, j, false);
  const Rational q = *solve_extreme(f, l.hi, j, false);
  if (p == q) return {p, p};
  if (p < q) {
    const Rational c = *solve_extreme(f, l.lo, {p, q}, true);
    const Rational d = *solve_extreme(f, l.hi, {c, q}, false);
    return {c, d};
  }
  const Rational c = *solve_extreme(f, l.hi, {q, p}, true);
  const Rational d = *solve_extreme(f, l.lo, {c, p}, false);
  return {c, d};
}

// Interval of d (with open/closed ends) satisfying a list of linear
// constraints slope * d + intercept {<, <=} 0.
struct Feasible {
  Rational lo;
  bool lo_open = false;
  Rational hi;
  bool hi_open = false;
  bool empty = false;

  void add(const Rational& slope, const Rational& intercept, bool strict) {
    if (empty) return;
    if (slope == 0) {
      if (strict ? !(intercept < 0) : !(intercept <= 0)) empty = true;
      return;
    }
    const Rational root = -intercept / slope;
    if (slope > 0) {
      if (root < hi || (root == hi && strict)) {
        hi = root;
        hi_open = strict;
      }
    } else if (root > lo || (root == lo && strict)) {
      lo = root;
      lo_open = strict;
    }
    if (lo > hi || (lo == hi && (lo_open || hi_open))) empty = true;
  }

  std::optional<Rational> pick() const {
    if (empty) return std::nullopt;
    if (!lo_open) return lo;
    return (lo + hi) / 2;
  }
};

}  // namespace

FixedSet fixed_points(const PLMap& f) {
  FixedSet out;
  for (std::size_t i = 0; i < f.piece_count(); ++i) {
    const Affine& a = f.piece(i);
    const Interval dom = f.piece_domain(i);
    if (a.slope != 1) {
      Rational x = a.intercept / (1 - a.slope);
      if (dom.contains(x) && (out.isolated.empty() || out.isolated.back() != x)) {
        out.isolated.push_back(std::move(x));
      }
    } else if (a.intercept == 0) {
      if (!out.segments.empty() && out.segments.back().hi == dom.lo) {
        out.segments.back().hi = dom.hi;
      } else {
        out.segments.push_back(dom);
      }
    }
  }
  std::erase_if(out.isolated, [&](const Rational& x) {
    return std::any_of(out.segments.begin(), out.segments.end(),
                       [&](const Interval& s) { return s.contains(x); });
  });
  return out;
}

PeriodicPoints periodic_points(const PLMap& f, unsigned n, std::size_t piece_budget) {
  if (n == 0) throw DomainError("periodic_points: period must be positive");
  PeriodicPoints out;
  detail::walk_itineraries(f, f.domain(), n, piece_budget, [&](const Leaf& leaf) {
    LeafHit hit = classify_leaf(leaf, n);
    if (hit.kind == HitKind::isolated) {
      if (out.isolated.empty() || out.isolated.back() != hit.point) {
        out.isolated.push_back(std::move(hit.point));
      }
    } else if (hit.kind == HitKind::segment) {
      if (!out.segments.empty() && out.segments.back().hi == leaf.x.lo) {
        out.segments.back().hi = leaf.x.hi;
      } else {
        out.segments.push_back(leaf.x);
      }
    }
    return false;
  });
  std::erase_if(out.isolated, [&](const Rational& x) {
    return std::any_of(out.segments.begin(), out.segments.end(),
                       [&](const Interval& s) { return s.contains(x); });
  });
  return out;
}

std::vector<std::vector<Rational>> periodic_orbits(const PLMap& f, unsigned n,
                                                   std::size_t piece_budget) {
  const PeriodicPoints pts = periodic_points(f, n, piece_budget);
  if (!pts.segments.empty()) {
    throw PreconditionError("periodic_orbits: period-" + std::to_string(n) +
                            " points form a continuum");
  }
  std::vector<std::vector<Rational>> orbits;
  std::set<Rational> seen;
  for (const auto& x : pts.isolated) {
    if (seen.contains(x)) continue;
    std::vector<Rational> orbit;
    Rational y = x;
    for (unsigned i = 0; i < n; ++i) {
      seen.insert(y);
      orbit.push_back(y);
      y = f(y);
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

unsigned least_period(const PLMap& f, const Rational& x, unsigned n) {
  if (n == 0) throw DomainError("least_period: n must be positive");
  std::vector<Rational> orbit;
  orbit.reserve(n + 1);
  orbit.push_back(x);
  for (unsigned i = 0; i < n; ++i) orbit.push_back(f(orbit.back()));
  if (orbit[n] != x) {
    throw PreconditionError("least_period: f^" + std::to_string(n) + "(" + to_string(x) +
                            ") = " + to_string(orbit[n]) + " is not " + to_string(x));
  }
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d == 0 && orbit[d] == x) return d;
  }
  return n;
}

std::set<std::uint64_t> PeriodReport::periods() const {
  std::set<std::uint64_t> s;
  for (const auto& [n, w] : entries) s.insert(n);
  return s;
}

PeriodReport period_set(const PLMap& f, unsigned bound, std::size_t piece_budget) {
  if (bound == 0) throw DomainError("period_set: bound must be positive");
  PeriodReport report;
  report.bound = bound;
  for (unsigned n = 1; n <= bound; ++n) {
    std::optional<Rational> w;
    try {
      w = leftmost_of_period(f, n, piece_budget);
    } catch (const ResourceError&) {
      throw ResourceError("period_set: piece budget of " + std::to_string(piece_budget) +
                              " exceeded at period " + std::to_string(n),
                          piece_budget);
    }
    if (w) report.entries.emplace(n, std::move(*w));
  }
  if (auto match = recognize_tail(report.periods(), bound)) {
    report.tail_class = match->cls;
    report.ambiguous_at_bound = match->ambiguous_at_bound;
  }
  return report;
}

PeriodReport verify_sharkovsky(const PLMap& f, unsigned bound, std::size_t piece_budget) {
  return period_set(f, bound, piece_budget);
}

std::uint64_t power_period(std::uint64_t m, std::uint64_t n) {
  if (m == 0 || n == 0) throw DomainError("power_period: arguments must be positive");
  return m / std::gcd(m, n);
}

std::set<std::uint64_t> lift_period(std::uint64_t k, std::uint64_t n) {
  if (k == 0 || n == 0) throw DomainError("lift_period: arguments must be positive");
  std::set<std::uint64_t> out;
  for (std::uint64_t s = 1; s <= n; ++s) {
    if (n % s == 0 && std::gcd(s, k) == 1) out.insert(k * n / s);
  }
  return out;
}

bool check_covering(const PLMap& f, const Interval& j, const Interval& l) {
  return f.image(j).contains(l);
}

LoopCertificate realize_loop(const PLMap& f, const IntervalCycle& cycle, std::size_t piece_budget) {
  const auto& js = cycle.intervals;
  const std::size_t n = js.size();
  if (n == 0) throw PreconditionError("realize_loop: empty cycle");
  for (std::size_t i = 0; i < n; ++i) {
    if (js[i].lo > js[i].hi || !f.domain().contains(js[i])) {
      throw PreconditionError("realize_loop: J_" + std::to_string(i) + " = " + to_string(js[i]) +
                              " is not a subinterval of the domain");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!check_covering(f, js[i], js[(i + 1) % n])) {
      throw PreconditionError("realize_loop: covering fails at index " + std::to_string(i) +
                              ": f(J_" + std::to_string(i) + ") = " + to_string(f.image(js[i])) +
                              " does not contain J_" + std::to_string((i + 1) % n) + " = " +
                              to_string(js[(i + 1) % n]));
    }
  }
  LoopCertificate cert;
  cert.cycle = cycle;
  cert.nested.resize(n + 1);
  cert.nested[n] = js[0];
  for (std::size_t i = n; i-- > 0;) cert.nested[i] = select_preimage(f, js[i], cert.nested[i + 1]);

  // f^n maps nested[0] onto J_0, which contains nested[0]: a fixed point exists.
  std::optional<Rational> witness;
  detail::walk_itineraries(f, cert.nested[0], static_cast<unsigned>(n), piece_budget,
                           [&](const Leaf& leaf) {
                             const Affine& fn = leaf.maps[n - 1];
                             if (leaf.x.is_point() || fn.is_identity()) {
                               if (fn(leaf.x.lo) == leaf.x.lo) witness = leaf.x.lo;
                             } else if (fn.slope != 1) {
                               Rational x = fn.intercept / (1 - fn.slope);
                               if (leaf.x.contains(x)) witness = std::move(x);
                             }
                             return witness.has_value();
                           });
  if (!witness) throw PreconditionError("realize_loop: no fixed point of f^n found in Q_0");
  cert.witness = std::move(*witness);
  return cert;
}

CertificateCheck validate_certificate(const PLMap& f, const LoopCertificate& cert) {
  const auto& js = cert.cycle.intervals;
  const std::size_t n = js.size();
  if (n == 0 || cert.nested.size() != n + 1) return {false, "wrong number of nested intervals"};
  if (cert.nested[n] != js[0]) return {false, "last nested interval is not J_0"};
  for (std::size_t i = 0; i < n; ++i) {
    const std::string idx = std::to_string(i);
    if (!check_covering(f, js[i], js[(i + 1) % n])) return {false, "covering fails at " + idx};
    if (!js[i].contains(cert.nested[i])) return {false, "Q_" + idx + " not inside J_" + idx};
    if (f.image(cert.nested[i]) != cert.nested[i + 1]) {
      return {false, "f(Q_" + idx + ") differs from Q_" + std::to_string(i + 1)};
    }
  }
  Rational y = cert.witness;
  for (std::size_t i = 0; i < n; ++i) {
    if (!cert.nested[i].contains(y)) {
      return {false, "witness iterate " + std::to_string(i) + " leaves Q_" + std::to_string(i)};
    }
    y = f(y);
  }
  if (y != cert.witness) return {false, "witness is not fixed by f^n"};
  return {};
}

bool AbcReport::all_passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const ImplicationCheck& c) { return c.status == CheckStatus::failed; });
}

AbcReport check_abc(const PeriodReport& report) {
  const auto s = report.periods();
  const std::uint64_t bound = report.bound;
  AbcReport out;
  auto check = [&](char rule, std::uint64_t m, std::uint64_t target) {
    CheckStatus st = CheckStatus::skipped;
    if (target <= bound) st = s.contains(target) ? CheckStatus::passed : CheckStatus::failed;
    out.checks.push_back({rule, m, target, st});
  };
  for (const std::uint64_t m : {3u, 4u}) {
    if (s.contains(m)) check('a', m, 2);
  }
  for (const auto m : s) {
    if (m < 3 || m % 2 == 0) continue;
    check('b', m, m + 2);
    check('c', m, 6);
    check('c', m, 2 * m);
  }
  return out;
}

AbcReport check_abc(const PLMap& f, unsigned bound, std::size_t piece_budget) {
  return check_abc(period_set(f, bound, piece_budget));
}

bool satisfies_lemma6(const PLMap& f, const Rational& d, const Rational& z, Lemma6Variant v) {
  if (f(z) != z) return false;
  const Rational f1 = f(d);
  const Rational f2 = f(f1);
  const Rational f3 = f(f2);
  if (v == Lemma6Variant::left) return f3 <= z && f2 < d && d < z && z < f1;
  return f1 < z && z < d && d < f2 && z <= f3;
}

std::optional<Lemma6Witness> lemma6_search(const PLMap& f, std::size_t piece_budget) {
  const FixedSet fix = fixed_points(f);
  for (const Rational& z : fix.isolated) {
    std::optional<Lemma6Witness> best;
    detail::walk_itineraries(f, f.domain(), 3, piece_budget, [&](const Leaf& leaf) {
      const Affine& f1 = leaf.maps[0];
      const Affine& f2 = leaf.maps[1];
      const Affine& f3 = leaf.maps[2];
      for (const auto variant : {Lemma6Variant::left, Lemma6Variant::right}) {
        Feasible fs{leaf.x.lo, false, leaf.x.hi, false};
        // Each constraint written as slope * d + intercept (<|<=) 0.
        if (variant == Lemma6Variant::left) {
          fs.add(f3.slope, f3.intercept - z, false);           // f^3(d) <= z
          fs.add(f2.slope - 1, f2.intercept, true);            // f^2(d) < d
          fs.add(Rational(1), -z, true);                       // d < z
          fs.add(-f1.slope, z - f1.intercept, true);           // z < f(d)
        } else {
          fs.add(f1.slope, f1.intercept - z, true);            // f(d) < z
          fs.add(Rational(-1), z, true);                       // z < d
          fs.add(1 - f2.slope, -f2.intercept, true);           // d < f^2(d)
          fs.add(-f3.slope, z - f3.intercept, false);          // z <= f^3(d)
        }
        if (auto d = fs.pick(); d && (!best || *d < best->d)) {
          best = Lemma6Witness{std::move(*d), z, variant};
        }
      }
      // Later leaves lie further right.
      return best.has_value();
    });
    if (best) return best;
  }
  return std::nullopt;
}

Lemma6Check lemma6_check(const PLMap& f, unsigned bound, std::size_t piece_budget) {
  Lemma6Check out;
  out.witness = lemma6_search(f, piece_budget);
  if (out.witness) {
    const auto periods = period_set(f, bound, piece_budget).periods();
    bool all = true;
    for (std::uint64_t n = 2; n <= bound; n += 2) all = all && periods.contains(n);
    out.even_periods_present = all;
  }
  return out;
}

}  // namespace sharklab
