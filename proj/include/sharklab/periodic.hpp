#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sharklab/order.hpp"
#include "sharklab/pl_map.hpp"

namespace sharklab {

// Fixed points of a map: isolated points plus segments on which the map is
// the identity. Sorted and disjoint.
struct FixedSet {
  std::vector<Rational> isolated;
  std::vector<Interval> segments;
};

FixedSet fixed_points(const PLMap& f);

// Points of least period exactly n. Each segment is a maximal interval on
// which f^n is the identity and all but finitely many points have least
// period n; isolated points never lie in a segment.
struct PeriodicPoints {
  std::vector<Rational> isolated;
  std::vector<Interval> segments;
};

PeriodicPoints periodic_points(const PLMap& f, unsigned n,
                               std::size_t piece_budget = kDefaultPieceBudget);

// Period-n orbits (each sorted ascending), ordered by their smallest point.
// Throws PreconditionError if f has a segment of period-n points.
std::vector<std::vector<Rational>> periodic_orbits(const PLMap& f, unsigned n,
                                                   std::size_t piece_budget = kDefaultPieceBudget);

// Smallest d | n with f^d(x) = x. Throws PreconditionError if f^n(x) != x.
unsigned least_period(const PLMap& f, const Rational& x, unsigned n);

struct PeriodReport {
  unsigned bound = 0;
  // least period -> leftmost witness found
  std::map<unsigned, Rational> entries;
  std::optional<SharkClass> tail_class;
  bool ambiguous_at_bound = false;

  std::set<std::uint64_t> periods() const;
  bool is_tail() const { return tail_class.has_value(); }
};

// Least periods 1..bound of f with one witness each. Throws ResourceError
// (naming the period reached) when an iterate exceeds the piece budget.
PeriodReport period_set(const PLMap& f, unsigned bound,
                        std::size_t piece_budget = kDefaultPieceBudget);

// Same report; callers treat is_tail() as the pass/fail verdict.
PeriodReport verify_sharkovsky(const PLMap& f, unsigned bound,
                               std::size_t piece_budget = kDefaultPieceBudget);

// Least period under f^n of a point with least period m under f.
std::uint64_t power_period(std::uint64_t m, std::uint64_t n);

// Possible least periods under f of a point with least period k under f^n.
std::set<std::uint64_t> lift_period(std::uint64_t k, std::uint64_t n);

// f(J) contains L.
bool check_covering(const PLMap& f, const Interval& j, const Interval& l);

// J_0 ... J_{n-1} with f(J_i) covering J_{i+1 mod n}.
struct IntervalCycle {
  std::vector<Interval> intervals;
};

struct LoopCertificate {
  IntervalCycle cycle;
  // nested[i] is inside cycle.intervals[i] and f(nested[i]) == nested[i+1];
  // nested[n] == cycle.intervals[0].
  std::vector<Interval> nested;
  Rational witness;
};

// Builds the nested intervals backwards from J_0 and returns the leftmost
// fixed point of f^n in the first of them. The witness is periodic with
// f^n(y) = y; its least period may be a proper divisor of n.
// Throws PreconditionError naming the first index whose covering fails.
LoopCertificate realize_loop(const PLMap& f, const IntervalCycle& cycle,
                             std::size_t piece_budget = kDefaultPieceBudget);

struct CertificateCheck {
  bool ok = true;
  std::string detail;
};

// Re-checks a certificate from scratch with eval and exact images.
CertificateCheck validate_certificate(const PLMap& f, const LoopCertificate& cert);

enum class CheckStatus { passed, failed, skipped };

struct ImplicationCheck {
  char rule;            // 'a', 'b' or 'c'
  std::uint64_t m;      // period that triggered the rule
  std::uint64_t target; // period the rule forces
  CheckStatus status;
};

struct AbcReport {
  std::vector<ImplicationCheck> checks;
  bool all_passed() const;
};

// (a) period 3 or 4 forces 2; (b) odd m >= 3 forces m + 2; (c) odd m >= 3
// forces 6 and 2m. Targets above the bound are reported as skipped.
AbcReport check_abc(const PeriodReport& report);
AbcReport check_abc(const PLMap& f, unsigned bound,
                    std::size_t piece_budget = kDefaultPieceBudget);

enum class Lemma6Variant { left, right };

// left:  f^3(d) <= z and f^2(d) < d < z < f(d)
// right: f(d) < z < d < f^2(d) and z <= f^3(d)
struct Lemma6Witness {
  Rational d;
  Rational z;
  Lemma6Variant variant;
};

bool satisfies_lemma6(const PLMap& f, const Rational& d, const Rational& z, Lemma6Variant v);

// Exact search: z over the isolated fixed points, d over each piece of the
// common refinement of f, f^2, f^3 where the conditions are linear. Returns
// the witness with smallest z, then smallest d (the left end of the feasible
// set when it is attained, else the midpoint of the feasible piece).
std::optional<Lemma6Witness> lemma6_search(const PLMap& f,
                                           std::size_t piece_budget = kDefaultPieceBudget);

struct Lemma6Check {
  std::optional<Lemma6Witness> witness;
  // Present when a witness exists: every even period <= bound is realised.
  std::optional<bool> even_periods_present;
};

Lemma6Check lemma6_check(const PLMap& f, unsigned bound,
                         std::size_t piece_budget = kDefaultPieceBudget);

}  // namespace sharklab
