#include "sharklab/patterns.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "sharklab/errors.hpp"

namespace sharklab {

namespace {

Rational node(unsigned i, std::size_t m) {
  return make_rational(static_cast<long>(i) - 1, static_cast<long>(m) - 1);
}

bool is_least_rotation(const std::vector<unsigned>& w) {
  const std::size_t n = w.size();
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      const unsigned a = w[(r + i) % n];
      if (a < w[i]) return false;
      if (a > w[i]) break;
    }
  }
  return true;
}

}  // namespace

OrbitPattern::OrbitPattern(std::vector<unsigned> images) : images_(std::move(images)) {
  const std::size_t m = images_.size();
  if (m < 2) throw DomainError("pattern: needs at least 2 points");
  std::vector<bool> hit(m + 1, false);
  for (const unsigned v : images_) {
    if (v < 1 || v > m || hit[v]) throw DomainError("pattern: not a permutation of 1.." + std::to_string(m));
    hit[v] = true;
  }
  unsigned i = 1;
  std::size_t len = 0;
  do {
    i = images_[i - 1];
    ++len;
  } while (i != 1);
  if (len != m) throw DomainError("pattern: permutation is not a single " + std::to_string(m) + "-cycle");
}

OrbitPattern parse_pattern(std::string_view text) {
  std::vector<unsigned> images;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == ',')) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && text[end] != ' ' && text[end] != '\t' && text[end] != ',') ++end;
    unsigned v = 0;
    const auto res = std::from_chars(text.data() + pos, text.data() + end, v);
    if (res.ec != std::errc{} || res.ptr != text.data() + end) {
      throw DomainError("pattern: '" + std::string(text.substr(pos, end - pos)) + "' is not an index");
    }
    images.push_back(v);
    pos = end;
  }
  return OrbitPattern(std::move(images));
}

std::string to_string(const OrbitPattern& p) {
  std::string out;
  for (const unsigned v : p.images()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

std::vector<OrbitPattern> all_patterns(unsigned m) {
  std::vector<OrbitPattern> out;
  if (m < 2) return out;
  std::vector<unsigned> perm(m);
  std::iota(perm.begin(), perm.end(), 1u);
  do {
    unsigned i = 1;
    std::size_t len = 0;
    do {
      i = perm[i - 1];
      ++len;
    } while (i != 1);
    if (len == m) out.emplace_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

PLMap connect_the_dots(const OrbitPattern& p) {
  const std::size_t m = p.size();
  std::vector<Breakpoint> pts;
  pts.reserve(m);
  for (unsigned i = 1; i <= m; ++i) pts.push_back({node(i, m), node(p.image(i), m)});
  return PLMap(std::move(pts));
}

bool CoverDigraph::has_edge(unsigned from, unsigned to) const {
  return std::binary_search(edges.begin(), edges.end(), std::pair{from, to});
}

std::vector<unsigned> CoverDigraph::successors(unsigned from) const {
  std::vector<unsigned> out;
  auto it = std::lower_bound(edges.begin(), edges.end(), std::pair{from, 0u});
  for (; it != edges.end() && it->first == from; ++it) out.push_back(it->second);
  return out;
}

CoverDigraph cover_digraph(const OrbitPattern& p) {
  const auto m = static_cast<unsigned>(p.size());
  CoverDigraph g;
  g.nodes = m - 1;
  for (unsigned i = 1; i < m; ++i) {
    const unsigned lo = std::min(p.image(i), p.image(i + 1));
    const unsigned hi = std::max(p.image(i), p.image(i + 1));
    for (unsigned j = lo; j < hi; ++j) g.edges.emplace_back(i, j);
  }
  return g;
}

std::vector<std::vector<unsigned>> loops(const CoverDigraph& g, unsigned n, std::size_t budget) {
  if (n == 0) throw DomainError("loops: length must be positive");
  std::vector<std::vector<unsigned>> out;
  std::vector<std::vector<unsigned>> succ(g.nodes + 1);
  for (unsigned v = 1; v <= g.nodes; ++v) succ[v] = g.successors(v);
  std::vector<unsigned> walk;
  walk.reserve(n);
  // A least rotation starts at its smallest node, so every later node is >= start.
  auto extend = [&](auto& self, unsigned start) -> void {
    if (walk.size() == n) {
      if (g.has_edge(walk.back(), start) && is_least_rotation(walk)) {
        out.push_back(walk);
        if (out.size() > budget) {
          throw ResourceError("loops: walk budget of " + std::to_string(budget) + " exceeded", budget);
        }
      }
      return;
    }
    for (const unsigned next : succ[walk.back()]) {
      if (next < start) continue;
      walk.push_back(next);
      self(self, start);
      walk.pop_back();
    }
  };
  for (unsigned s = 1; s <= g.nodes; ++s) {
    walk.assign(1, s);
    extend(extend, s);
  }
  return out;
}

std::vector<Interval> walk_intervals(const OrbitPattern& p, const std::vector<unsigned>& walk) {
  std::vector<Interval> out;
  out.reserve(walk.size());
  for (const unsigned j : walk) {
    if (j < 1 || j >= p.size()) throw DomainError("walk: node J" + std::to_string(j) + " does not exist");
    out.push_back({node(j, p.size()), node(j + 1, p.size())});
  }
  return out;
}

bool is_stefan(const OrbitPattern& p) {
  const auto m = static_cast<long>(p.size());
  if (m < 3 || m % 2 == 0) return false;
  for (long s = 1; s <= m; ++s) {
    for (const long dir : {1L, -1L}) {
      long pos = s;
      bool ok = true;
      for (long k = 1; k < m && ok; ++k) {
        pos = p.image(static_cast<unsigned>(pos));
        // f^(2j-1)(x_s) sits j places to one side, f^(2j)(x_s) j places to the other.
        const long j = (k + 1) / 2;
        const long expect = k % 2 == 1 ? s + dir * j : s - dir * j;
        ok = pos == expect;
      }
      if (ok) return true;
    }
  }
  return false;
}

std::string digraph_to_dot(const CoverDigraph& g) {
  std::ostringstream os;
  os << "digraph cover {\n";
  for (unsigned v = 1; v <= g.nodes; ++v) os << "  J" << v << ";\n";
  for (const auto& [a, b] : g.edges) os << "  J" << a << " -> J" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace sharklab
