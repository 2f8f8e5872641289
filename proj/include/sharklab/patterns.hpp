#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sharklab/pl_map.hpp"

namespace sharklab {

// Order type of a period-m orbit x_1 < ... < x_m: image(i) is the index of
// f(x_i), 1-based. Always a single m-cycle.
class OrbitPattern {
 public:
  // Throws DomainError unless images is a cyclic permutation of 1..m, m >= 2.
  explicit OrbitPattern(std::vector<unsigned> images);

  std::size_t size() const { return images_.size(); }
  unsigned image(unsigned i) const { return images_[i - 1]; }
  const std::vector<unsigned>& images() const { return images_; }

  friend bool operator==(const OrbitPattern&, const OrbitPattern&) = default;

 private:
  std::vector<unsigned> images_;
};

// "3 5 4 2 1"
OrbitPattern parse_pattern(std::string_view text);
std::string to_string(const OrbitPattern& p);

// All cyclic permutations of 1..m in lexicographic order of image lists.
std::vector<OrbitPattern> all_patterns(unsigned m);

// PL map on [0, 1] through (x_i, x_image(i)) with x_i = (i - 1) / (m - 1).
PLMap connect_the_dots(const OrbitPattern& p);

// Node i (1-based) is the gap J_i = [x_i, x_{i+1}].
struct CoverDigraph {
  unsigned nodes = 0;
  // (from, to), sorted.
  std::vector<std::pair<unsigned, unsigned>> edges;

  bool has_edge(unsigned from, unsigned to) const;
  std::vector<unsigned> successors(unsigned from) const;
};

CoverDigraph cover_digraph(const OrbitPattern& p);

inline constexpr std::size_t kDefaultWalkBudget = 100'000;

// Closed walks of length n (node sequences j_0 .. j_{n-1} with edges
// j_k -> j_{k+1} and j_{n-1} -> j_0), one per rotation class, each given by
// its lexicographically least rotation; the list is sorted. Throws
// ResourceError when more than budget walks are found.
std::vector<std::vector<unsigned>> loops(const CoverDigraph& g, unsigned n,
                                         std::size_t budget = kDefaultWalkBudget);

// Gap intervals of connect_the_dots(p) along a walk.
std::vector<Interval> walk_intervals(const OrbitPattern& p, const std::vector<unsigned>& walk);

// Orbit of the centre point spirals outward alternately (either orientation):
//   f^{m-1}(x_s) < ... < f^2(x_s) < x_s < f(x_s) < f^3(x_s) < ... < f^{m-2}(x_s)
// Only odd m >= 3 can qualify.
bool is_stefan(const OrbitPattern& p);

std::string digraph_to_dot(const CoverDigraph& g);

}  // namespace sharklab
