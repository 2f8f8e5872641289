#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "sharklab/constructions.hpp"
#include "sharklab/errors.hpp"
#include "sharklab/patterns.hpp"
#include "sharklab/periodic.hpp"

using namespace sharklab;
using Walk = std::vector<unsigned>;

namespace {

Rational q(long p, long d) { return make_rational(p, d); }

// All closed walks of length n by brute force over every node sequence,
// reduced to their least rotation.
std::set<Walk> brute_loops(const CoverDigraph& g, unsigned n) {
  std::set<Walk> out;
  Walk w(n, 1);
  while (true) {
    bool closed = true;
    for (unsigned i = 0; i < n && closed; ++i) closed = g.has_edge(w[i], w[(i + 1) % n]);
    if (closed) {
      Walk best = w;
      for (unsigned r = 1; r < n; ++r) {
        Walk rot(w.begin() + r, w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + r);
        best = std::min(best, rot);
      }
      out.insert(best);
    }
    unsigned i = 0;
    while (i < n && w[i] == g.nodes) w[i++] = 1;
    if (i == n) break;
    ++w[i];
  }
  return out;
}

}  // namespace

TEST_CASE("patterns validate as single cycles") {
  CHECK(parse_pattern("3 5 4 2 1").images() == std::vector<unsigned>{3, 5, 4, 2, 1});
  CHECK(to_string(parse_pattern(" 2  1 ")) == "2 1");
  CHECK_THROWS_AS(parse_pattern("1"), DomainError);
  CHECK_THROWS_AS(parse_pattern("2 1 3"), DomainError);
  CHECK_THROWS_AS(parse_pattern("2 2 1"), DomainError);
  CHECK_THROWS_AS(parse_pattern("2 x 1"), DomainError);
  CHECK_THROWS_AS(parse_pattern("2 4 1"), DomainError);
}

TEST_CASE("all_patterns counts (m - 1)! cycles") {
  CHECK(all_patterns(2).size() == 1);
  CHECK(all_patterns(3).size() == 2);
  CHECK(all_patterns(5).size() == 24);
  CHECK(all_patterns(7).size() == 720);
}

TEST_CASE("connect_the_dots examples") {
  const PLMap f2 = connect_the_dots(parse_pattern("3 5 4 2 1"));
  CHECK(f2 == make_fn(2));
  CHECK(f2.points().size() == 5);
  CHECK(f2(q(1, 4)) == 1);
  CHECK(f2(0) == q(1, 2));
  CHECK(connect_the_dots(parse_pattern("2 1")) == PLMap({{0, 1}, {1, 0}}));
  CHECK(connect_the_dots(parse_pattern("2 3 1")) == PLMap({{0, q(1, 2)}, {q(1, 2), 1}, {1, 0}}));
}

TEST_CASE("cover_digraph examples") {
  const CoverDigraph f2 = cover_digraph(parse_pattern("3 5 4 2 1"));
  CHECK(f2.nodes == 4);
  const std::vector<std::pair<unsigned, unsigned>> want{{1, 3}, {1, 4}, {2, 4}, {3, 2}, {3, 3}, {4, 1}};
  CHECK(f2.edges == want);
  const CoverDigraph two = cover_digraph(parse_pattern("2 1"));
  CHECK(two.nodes == 1);
  CHECK(two.edges == std::vector<std::pair<unsigned, unsigned>>{{1, 1}});
  const CoverDigraph three = cover_digraph(parse_pattern("2 3 1"));
  CHECK(three.edges == std::vector<std::pair<unsigned, unsigned>>{{1, 2}, {2, 1}, {2, 2}});
}

TEST_CASE("edges coincide with check_covering for every pattern up to 7 points") {
  std::size_t checked = 0;
  for (unsigned m = 2; m <= 7; ++m) {
    for (const auto& p : all_patterns(m)) {
      const PLMap f = connect_the_dots(p);
      const CoverDigraph g = cover_digraph(p);
      for (unsigned i = 1; i < m; ++i) {
        for (unsigned j = 1; j < m; ++j) {
          const auto gi = walk_intervals(p, {i});
          const auto gj = walk_intervals(p, {j});
          CHECK(g.has_edge(i, j) == check_covering(f, gi[0], gj[0]));
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("loops examples") {
  const CoverDigraph f2 = cover_digraph(parse_pattern("3 5 4 2 1"));
  CHECK(loops(f2, 1) == std::vector<Walk>{{3}});
  const auto five = loops(f2, 5);
  CHECK(std::find(five.begin(), five.end(), Walk{1, 3, 3, 2, 4}) != five.end());
  const CoverDigraph two = cover_digraph(parse_pattern("2 1"));
  for (unsigned n = 1; n <= 6; ++n) CHECK(loops(two, n).size() == 1);
}

TEST_CASE("loops agree with brute-force enumeration") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const unsigned m = std::uniform_int_distribution<unsigned>(2, 6)(rng);
    const CoverDigraph g = cover_digraph(oracle::random_pattern(rng, m));
    for (unsigned n = 1; n <= 5; ++n) {
      const auto got = loops(g, n);
      CHECK(std::is_sorted(got.begin(), got.end()));
      CHECK(std::set<Walk>(got.begin(), got.end()) == brute_loops(g, n));
    }
  }
}

TEST_CASE("loops honours its budget") {
  const CoverDigraph g = cover_digraph(parse_pattern("3 5 4 2 1"));
  CHECK_THROWS_AS(loops(g, 12, 10), ResourceError);
}

TEST_CASE("every loop is realised by a periodic point") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 15; ++trial) {
    const OrbitPattern p = oracle::random_pattern(rng, std::uniform_int_distribution<unsigned>(3, 6)(rng));
    const PLMap f = connect_the_dots(p);
    for (unsigned n = 1; n <= 4; ++n) {
      for (const auto& w : loops(cover_digraph(p), n)) {
        const IntervalCycle cyc{walk_intervals(p, w)};
        const LoopCertificate c = realize_loop(f, cyc);
        CHECK(validate_certificate(f, c).ok);
        CHECK(oracle::apply(f, c.witness, n) == c.witness);
      }
    }
  }
}

TEST_CASE("is_stefan examples") {
  CHECK(is_stefan(parse_pattern("3 5 4 2 1")));
  CHECK(is_stefan(parse_pattern("2 3 1")));
  CHECK(is_stefan(parse_pattern("3 1 2")));
  CHECK_FALSE(is_stefan(parse_pattern("2 3 4 5 1")));
  CHECK_FALSE(is_stefan(parse_pattern("2 1")));
  CHECK_FALSE(is_stefan(parse_pattern("2 3 4 1")));
  CHECK(is_stefan(fn_pattern(3)));
}

TEST_CASE("exactly two Stefan cycles per odd period, mirror images") {
  for (unsigned m = 3; m <= 9; m += 2) {
    std::vector<OrbitPattern> found;
    for (const auto& p : all_patterns(m))
      if (is_stefan(p)) found.push_back(p);
    REQUIRE(found.size() == 2);
    std::vector<unsigned> mirror(m);
    for (unsigned i = 1; i <= m; ++i) mirror[m - i] = m + 1 - found[0].image(i);
    CHECK(OrbitPattern(mirror) == found[1]);
  }
}

TEST_CASE("Stefan maps realise exactly the tail of their period") {
  for (unsigned m = 3; m <= 9; m += 2) {
    for (const auto& p : all_patterns(m)) {
      if (!is_stefan(p)) continue;
      const auto tail = shark_tail(SharkClass::finite(m), m + 4);
      CHECK(period_set(connect_the_dots(p), m + 4).periods() ==
            std::set<std::uint64_t>(tail.begin(), tail.end()));
    }
  }
}

TEST_CASE("digraph_to_dot examples") {
  CHECK(digraph_to_dot(cover_digraph(parse_pattern("2 1"))) == "digraph cover {\n  J1;\n  J1 -> J1;\n}\n");
  const std::string f2 = digraph_to_dot(cover_digraph(parse_pattern("3 5 4 2 1")));
  CHECK(std::count(f2.begin(), f2.end(), '>') == 6);
  CHECK(f2.find("  J4;\n") != std::string::npos);
  CHECK(f2.find("  J3 -> J3;\n") != std::string::npos);
}
