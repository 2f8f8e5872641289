#include <random>
#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "sharklab/constructions.hpp"
#include "sharklab/errors.hpp"
#include "sharklab/map_io.hpp"
#include "sharklab/pl_map.hpp"

using namespace sharklab;

namespace {

Rational q(long p, long d) { return make_rational(p, d); }

const PLMap& tent() {
  static const PLMap t = make_named(NamedMap::tent);
  return t;
}

}  // namespace

TEST_CASE("rationals parse and print canonically") {
  CHECK(parse_rational("6/8") == q(3, 4));
  CHECK(to_string(parse_rational("6/8")) == "3/4");
  CHECK(to_string(parse_rational("-4/2")) == "-2");
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("1/-2"), DomainError);
  CHECK_THROWS_AS(parse_rational("0.5"), DomainError);
  CHECK_THROWS_AS(parse_rational(""), DomainError);
  CHECK(to_decimal(q(1, 3), 5) == "0.33333");
}

TEST_CASE("construction rejects bad breakpoint lists") {
  CHECK_THROWS_AS(PLMap({{0, 0}}), DomainError);
  CHECK_THROWS_AS(PLMap({{0, 0}, {0, 1}}), DomainError);
  CHECK_THROWS_AS(PLMap({{0, 0}, {1, 2}}), DomainError);
  CHECK_THROWS_AS(PLMap({{1, 0}, {0, 0}}), DomainError);
}

TEST_CASE("eval examples") {
  CHECK(tent()(q(1, 2)) == 1);
  CHECK(make_named(NamedMap::h)(q(5, 14)) == q(11, 14));
  const PLMap h = make_named(NamedMap::h);
  for (const auto& p : h.points()) CHECK(h(p.x) == p.y);
  CHECK(eval(tent(), q(1, 4)) == q(1, 2));
  CHECK_THROWS_AS(tent()(q(3, 2)), DomainError);
  CHECK_THROWS_AS(tent()(q(-1, 5)), DomainError);
}

TEST_CASE("compose examples") {
  const PLMap id = PLMap::identity({0, 1});
  CHECK(value_equal(compose(id, tent()), tent()));
  const PLMap tt = compose(tent(), tent());
  CHECK(lap_count(tt) == 4);
  CHECK(tt(q(1, 4)) == 1);
  CHECK(tt(q(3, 4)) == 1);
  CHECK(tt(q(1, 2)) == 0);
  CHECK(value_equal(compose(make_named(NamedMap::zero), tent()), PLMap::constant({0, 1}, 0)));
  // Range of f outside g's domain.
  const PLMap small({{0, 0}, {q(1, 2), q(1, 2)}});
  CHECK_THROWS_AS(compose(small, tent()), DomainError);
}

TEST_CASE("iterate examples") {
  CHECK(value_equal(iterate(tent(), 0), PLMap::identity({0, 1})));
  CHECK(iterate(tent(), 1) == tent());
  CHECK(iterate(tent(), 2)(q(2, 5)) == q(2, 5));
  CHECK(iterate(tent(), 10).piece_count() == 1024);
}

TEST_CASE("iterate budget names the budget") {
  try {
    (void)iterate(tent(), 12, 500);
    FAIL("expected ResourceError");
  } catch (const ResourceError& e) {
    CHECK(e.budget() == 500);
    CHECK(std::string(e.what()).find("500") != std::string::npos);
  }
}

TEST_CASE("normalize examples") {
  const PLMap line({{0, 0}, {q(1, 2), q(1, 2)}, {1, 1}});
  CHECK(normalize(line).points().size() == 2);
  CHECK(normalize(tent()) == tent());
  const PLMap tt = compose(tent(), tent());
  CHECK(normalize(tt) == tt);
}

TEST_CASE("iterate matches repeated eval on random maps") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const PLMap f = oracle::random_map(rng);
    for (unsigned k = 0; k <= 6; ++k) {
      const PLMap fk = iterate(f, k);
      CHECK(lap_count(fk) <= std::max<std::size_t>(1, static_cast<std::size_t>(std::pow(lap_count(f), k))));
      for (int i = 0; i < 100; ++i) {
        const Rational x = oracle::random_point(rng, f.domain());
        const Rational y = fk(x);
        CHECK(y == oracle::apply(f, x, k));
        CHECK(f.domain().contains(y));
      }
    }
  }
}

TEST_CASE("normalize preserves values") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const PLMap f = iterate(oracle::random_map(rng), 2);
    const PLMap n = normalize(f);
    CHECK(n.points().size() <= f.points().size());
    for (int i = 0; i < 1000; ++i) {
      const Rational x = oracle::random_point(rng, f.domain());
      CHECK(n(x) == f(x));
    }
  }
}

TEST_CASE("image is the exact min and max") {
  const PLMap h = make_named(NamedMap::h);
  CHECK(h.image({0, 1}) == Interval{0, 1});
  CHECK(h.image({q(1, 8), q(3, 8)}) == Interval{q(3, 4), 1});
  CHECK(tent().image({q(1, 4), q(1, 4)}) == Interval{q(1, 2), q(1, 2)});
}

TEST_CASE("non-unit domains work") {
  const PLMap f({{-1, 2}, {0, -1}, {2, 0}});
  CHECK(f.domain() == Interval{-1, 2});
  CHECK(iterate(f, 3)(q(1, 3)) == oracle::apply(f, q(1, 3), 3));
}

TEST_CASE("map files round trip exactly") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 20; ++i) {
    const PLMap f = oracle::random_map(rng);
    const std::string text = format_map_document(f, "trial " + std::to_string(i));
    const MapDocument doc = parse_map_document(text);
    CHECK(doc.map == f);
    CHECK(doc.comment == "trial " + std::to_string(i));
    CHECK(format_map_document(doc.map, doc.comment) == text);
  }
}

TEST_CASE("map file errors name the field") {
  auto message = [](const std::string& text) {
    try {
      (void)parse_map_document(text);
    } catch (const DomainError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("{") .find("JSON") != std::string::npos);
  CHECK(message(R"({"points": [["0","0"],["1","1"]]})").find("domain") != std::string::npos);
  CHECK(message(R"({"domain": ["0","1"], "points": [["0","0"],["1","x"]]})").find("points[1][1]") !=
        std::string::npos);
  CHECK(message(R"({"domain": ["0","1"], "points": [["0","0"],["1",1]]})").find("points[1][1]") !=
        std::string::npos);
  CHECK(message(R"({"domain": ["0","1"], "points": [["0","0"],["1/2","3/2"],["1","0"]]})") != "no error");
  CHECK(message(R"({"domain": ["0","1"], "points": [["0","0"],["1/2","1"]]})").find("points") !=
        std::string::npos);
  CHECK(message(R"({"domain": ["0","1/0"], "points": []})") != "no error");
}
