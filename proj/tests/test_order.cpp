#include <compare>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "sharklab/errors.hpp"
#include "sharklab/order.hpp"

using namespace sharklab;

namespace {

std::vector<SharkClass> classes_upto(std::uint64_t n) {
  std::vector<SharkClass> out;
  for (std::uint64_t i = 1; i <= n; ++i) out.push_back(SharkClass::finite(i));
  out.push_back(SharkClass::two_inf());
  return out;
}

std::set<std::uint64_t> as_set(const std::vector<std::uint64_t>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("decompose splits off the power of two") {
  CHECK(decompose(12) == DyadicDecomposition{2, 3});
  CHECK(decompose(1) == DyadicDecomposition{0, 1});
  CHECK(decompose(8) == DyadicDecomposition{3, 1});
  CHECK_THROWS_AS(decompose(0), DomainError);
}

TEST_CASE("shark_cmp examples") {
  CHECK(shark_cmp(5, 3) == std::strong_ordering::less);
  CHECK(shark_cmp(2, 2) == std::strong_ordering::equal);
  CHECK(shark_cmp(6, 12) == std::strong_ordering::greater);
  CHECK(shark_cmp(SharkClass::two_inf(), SharkClass::finite(8)) == std::strong_ordering::greater);
  CHECK(shark_cmp(SharkClass::two_inf(), SharkClass::finite(3 * 1024)) == std::strong_ordering::less);
  CHECK(shark_cmp(SharkClass::two_inf(), SharkClass::two_inf()) == std::strong_ordering::equal);
}

TEST_CASE("shark_cmp agrees with the written-out order") {
  for (std::uint64_t a = 1; a <= 64; ++a) {
    for (std::uint64_t b = 1; b <= 64; ++b) {
      const bool before = oracle::shark_rank(a, 64) > oracle::shark_rank(b, 64);
      CHECK((shark_cmp(a, b) < 0) == before);
    }
  }
}

TEST_CASE("trichotomy and reversal on 1..64 and 2^inf") {
  const auto all = classes_upto(64);
  for (const auto& a : all) {
    for (const auto& b : all) {
      const auto ab = shark_cmp(a, b);
      const auto ba = shark_cmp(b, a);
      CHECK(((ab < 0) + (ab == 0) + (ab > 0)) == 1);
      CHECK((ab < 0) == (ba > 0));
      CHECK((ab == 0) == (a == b));
    }
  }
}

TEST_CASE("transitivity on 1..48") {
  const auto all = classes_upto(48);
  std::size_t violations = 0;
  for (const auto& a : all)
    for (const auto& b : all)
      for (const auto& c : all)
        if (shark_cmp(a, b) < 0 && shark_cmp(b, c) < 0 && !(shark_cmp(a, c) < 0)) ++violations;
  CHECK(violations == 0);
}

TEST_CASE("extremes: 1 first, 3 last, powers of two before the rest") {
  for (std::uint64_t n = 1; n <= 64; ++n) {
    CHECK(shark_cmp(1, n) <= 0);
    CHECK(shark_cmp(n, 3) <= 0);
    for (std::uint64_t p = 1; p <= 64; p *= 2) {
      if (decompose(n).odd_part > 1) CHECK(shark_cmp(p, n) < 0);
    }
  }
}

TEST_CASE("shark_tail examples") {
  CHECK(as_set(shark_tail(SharkClass::finite(3), 10)) == std::set<std::uint64_t>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
  CHECK(as_set(shark_tail(SharkClass::finite(4), 10)) == std::set<std::uint64_t>{1, 2, 4});
  CHECK(as_set(shark_tail(SharkClass::finite(5), 10)) == std::set<std::uint64_t>{1, 2, 4, 5, 6, 7, 8, 9, 10});
  CHECK(as_set(shark_tail(SharkClass::finite(6), 13)) == std::set<std::uint64_t>{1, 2, 4, 6, 8, 10, 12});
  CHECK(as_set(shark_tail(SharkClass::two_inf(), 20)) == std::set<std::uint64_t>{1, 2, 4, 8, 16});
}

TEST_CASE("tail monotonicity") {
  const auto all = classes_upto(32);
  for (std::uint64_t n = 1; n <= 32; ++n) {
    for (const auto& a : all) {
      for (const auto& b : all) {
        if (shark_cmp(a, b) > 0) continue;
        const auto ta = as_set(shark_tail(a, n));
        const auto tb = as_set(shark_tail(b, n));
        CHECK(std::includes(tb.begin(), tb.end(), ta.begin(), ta.end()));
      }
    }
  }
}

TEST_CASE("recognize_tail examples") {
  auto r = recognize_tail({1, 2}, 3);
  REQUIRE(r);
  CHECK(r->cls == SharkClass::finite(2));
  // {1, 2} is also every power of two up to 3.
  CHECK(r->ambiguous_at_bound);
  CHECK_FALSE(recognize_tail({1, 3}, 3));
  r = recognize_tail({1, 2, 4, 6, 8, 10, 12}, 13);
  REQUIRE(r);
  CHECK(r->cls == SharkClass::finite(6));
  CHECK_FALSE(recognize_tail({}, 5));
}

TEST_CASE("powers of two up to the bound are flagged ambiguous") {
  auto r = recognize_tail({1, 2, 4, 8}, 12);
  REQUIRE(r);
  CHECK(r->cls == SharkClass::finite(8));
  CHECK(r->ambiguous_at_bound);
  r = recognize_tail({1, 2, 4}, 12);
  REQUIRE(r);
  CHECK(r->cls == SharkClass::finite(4));
  CHECK_FALSE(r->ambiguous_at_bound);
}

TEST_CASE("recognize_tail inverts shark_tail") {
  for (std::uint64_t bound = 1; bound <= 40; ++bound) {
    for (std::uint64_t c = 1; c <= bound; ++c) {
      const auto tail = shark_tail(SharkClass::finite(c), bound);
      const auto r = recognize_tail(as_set(tail), bound);
      REQUIRE(r);
      if (!r->ambiguous_at_bound) CHECK(r->cls == SharkClass::finite(c));
      // Exact class is always reported, ambiguous or not.
      CHECK(r->cls == SharkClass::finite(c));
    }
  }
}

TEST_CASE("class text round trip") {
  CHECK(to_string(parse_shark_class("2^inf")) == "2^inf");
  CHECK(parse_shark_class("12") == SharkClass::finite(12));
  CHECK(to_string(SharkClass::finite(7)) == "7");
  CHECK_THROWS_AS(parse_shark_class("0"), DomainError);
  CHECK_THROWS_AS(parse_shark_class("-3"), DomainError);
  CHECK_THROWS_AS(parse_shark_class("2^x"), DomainError);
  CHECK_THROWS_AS(parse_shark_class(""), DomainError);
}
