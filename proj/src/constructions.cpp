#include "sharklab/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "sharklab/errors.hpp"
#include "sharklab/periodic.hpp"

namespace sharklab {

PLMap make_named(NamedMap kind) {
  const Rational half = make_rational(1, 2);
  switch (kind) {
    case NamedMap::tent:
      return PLMap({{0, 0}, {half, 1}, {1, 0}});
    case NamedMap::zero:
      return PLMap::constant({0, 1}, 0);
    case NamedMap::h:
      return PLMap({{0, half}, {make_rational(1, 4), 1}, {half, half}, {1, 0}});
  }
  throw ParameterError("unknown named map");
}

NamedMap parse_named_map(std::string_view name) {
  if (name == "tent") return NamedMap::tent;
  if (name == "g") return NamedMap::zero;
  if (name == "h") return NamedMap::h;
  throw ParameterError("unknown map name '" + std::string(name) + "' (expected tent, g or h)");
}

OrbitPattern fn_pattern(unsigned n) {
  if (n < 1) throw DomainError("fn_pattern: n must be >= 1");
  const unsigned m = 2 * n + 1;
  std::vector<unsigned> images(m);
  images[0] = n + 1;
  for (unsigned i = 2; i <= n + 1; ++i) images[i - 1] = 2 * n + 3 - i;
  for (unsigned j = n + 2; j <= m; ++j) images[j - 1] = 2 * n + 2 - j;
  return OrbitPattern(std::move(images));
}

PLMap make_fn(unsigned n) {
  if (n < 2) throw DomainError("make_fn: n must be >= 2");
  return connect_the_dots(fn_pattern(n));
}

TruncatedTent make_truncated_tent(unsigned n, std::size_t piece_budget) {
  if (n < 2) throw DomainError("make_truncated_tent: n must be >= 2");
  const PLMap tent = make_named(NamedMap::tent);
  const auto orbits = periodic_orbits(tent, n, piece_budget);
  const std::vector<Rational>* best = nullptr;
  for (const auto& p : orbits) {
    const bool empty_inside = std::none_of(orbits.begin(), orbits.end(), [&](const auto& q) {
      return &q != &p && q.front() > p.front() && q.back() < p.back();
    });
    if (!empty_inside) continue;
    if (!best || p.back() < best->back() || (p.back() == best->back() && p.front() < best->front())) {
      best = &p;
    }
  }
  if (!best) throw PreconditionError("make_truncated_tent: tent map has no period-" + std::to_string(n) + " orbit");
  const Rational& lo = best->front();
  const Rational& hi = best->back();
  std::vector<Breakpoint> pts{{0, 0}};
  if (hi > make_rational(1, 2)) pts.push_back({make_rational(1, 2), 1});
  pts.push_back({hi, tent(hi)});
  if (hi < 1) pts.push_back({1, lo});
  return {PLMap(std::move(pts)), *best};
}

DoublingKind parse_doubling_kind(std::string_view text) {
  if (text == "G") return DoublingKind::G;
  if (text == "H") return DoublingKind::H;
  if (text == "D") return DoublingKind::D;
  if (text == "E") return DoublingKind::E;
  throw ParameterError("unknown doubling operator '" + std::string(text) + "' (expected G, H, D or E)");
}

char to_char(DoublingKind k) {
  switch (k) {
    case DoublingKind::G: return 'G';
    case DoublingKind::H: return 'H';
    case DoublingKind::D: return 'D';
    case DoublingKind::E: return 'E';
  }
  return '?';
}

void validate(const DoublingSpec& spec) {
  if (!(spec.a > 0 && spec.a < make_rational(1, 2))) {
    throw ParameterError("doubling parameter a = " + to_string(spec.a) + " must lie in (0, 1/2)");
  }
}

PLMap double_map(const PLMap& f, const DoublingSpec& spec) {
  validate(spec);
  if (f.domain() != Interval{0, 1}) throw DomainError("double_map: map must act on [0, 1]");
  const Rational& a = spec.a;
  const Rational one_minus_a = 1 - a;
  const auto src = f.points();
  std::vector<Breakpoint> pts;
  pts.reserve(src.size() + 2);
  switch (spec.kind) {
    case DoublingKind::G:
      for (const auto& p : src) pts.push_back({a * p.x, 1 - a * p.y});
      break;
    case DoublingKind::H:
      for (const auto& p : src) pts.push_back({a * p.x, a * p.y + one_minus_a});
      break;
    case DoublingKind::D:
      for (auto it = src.rbegin(); it != src.rend(); ++it) pts.push_back({a * (1 - it->x), one_minus_a + a * it->y});
      break;
    case DoublingKind::E:
      for (auto it = src.rbegin(); it != src.rend(); ++it) pts.push_back({a * (1 - it->x), 1 - a * it->y});
      break;
  }
  const bool reflect_tail = spec.kind == DoublingKind::G || spec.kind == DoublingKind::D;
  if (reflect_tail) {
    pts.push_back({one_minus_a, a});
    pts.push_back({1, 0});
  } else {
    pts.push_back({one_minus_a, 0});
    pts.push_back({1, a});
  }
  return PLMap(std::move(pts));
}

int AlphaSequence::at(std::size_t i) const {
  if (i == 0) throw DomainError("alpha: indices start at 1");
  if (i <= prefix.size()) return prefix[i - 1];
  if (cycle.empty()) throw DomainError("alpha: sequence has no repeating part");
  return cycle[(i - 1 - prefix.size()) % cycle.size()];
}

AlphaSequence parse_alpha(std::string_view text) {
  auto bits = [&](std::string_view s) {
    std::vector<int> out;
    for (const char ch : s) {
      if (ch != '0' && ch != '1') throw ParameterError("alpha: '" + std::string(text) + "' must use only 0 and 1");
      out.push_back(ch - '0');
    }
    return out;
  };
  const auto open = text.find('(');
  AlphaSequence alpha;
  if (open == std::string_view::npos) {
    alpha.cycle = bits(text);
  } else {
    if (text.back() != ')') throw ParameterError("alpha: '" + std::string(text) + "' has an unterminated cycle");
    alpha.prefix = bits(text.substr(0, open));
    alpha.cycle = bits(text.substr(open + 1, text.size() - open - 2));
  }
  if (alpha.cycle.empty()) throw ParameterError("alpha: repeating part must be non-empty");
  return alpha;
}

std::string to_string(const AlphaSequence& alpha) {
  std::string out;
  for (const int b : alpha.prefix) out += static_cast<char>('0' + b);
  if (alpha.prefix.empty()) {
    for (const int b : alpha.cycle) out += static_cast<char>('0' + b);
    return out;
  }
  out += '(';
  for (const int b : alpha.cycle) out += static_cast<char>('0' + b);
  return out + ')';
}

Rational PhiSpec::c(std::size_t i) const {
  const auto& seq = alpha.at(i) == 0 ? a_seq : b_seq;
  if (seq.empty()) throw ParameterError("phi: parameter sequence is empty");
  return seq[(i - 1) % seq.size()];
}

PhiTruncation phi_truncation(const PhiSpec& spec, const PLMap& seed) {
  if (spec.depth == 0) throw ParameterError("phi: depth must be >= 1");
  for (const auto* seq : {&spec.a_seq, &spec.b_seq}) {
    if (seq->empty()) throw ParameterError("phi: parameter sequence is empty");
    for (const auto& v : *seq) validate(DoublingSpec{DoublingKind::G, v});
  }
  PLMap map = seed;
  for (std::size_t i = spec.depth; i >= 1; --i) {
    const DoublingKind kind = spec.alpha.at(i) == 0 ? DoublingKind::G : DoublingKind::H;
    map = double_map(map, {kind, spec.c(i)});
  }
  Rational prefix_product = 1;
  for (std::size_t i = 1; i < spec.depth; ++i) prefix_product *= spec.c(i);
  Rational threshold = prefix_product * (1 - spec.c(spec.depth));

  // sup c_i over one joint period of alpha and the two sequences.
  const std::size_t period =
      std::lcm(std::lcm(spec.alpha.cycle.size(), spec.a_seq.size()), spec.b_seq.size());
  Rational sup = 0;
  for (std::size_t i = 1; i <= spec.alpha.prefix.size() + period; ++i) sup = std::max(sup, spec.c(i));
  Rational tail_bound = prefix_product / (1 - sup);
  return {std::move(map), std::move(threshold), std::move(tail_bound)};
}

WitnessStrategy parse_witness_strategy(std::string_view text) {
  if (text == "stefan-doubling") return WitnessStrategy::stefan_doubling;
  if (text == "truncated-tent") return WitnessStrategy::truncated_tent;
  throw ParameterError("unknown strategy '" + std::string(text) +
                       "' (expected stefan-doubling or truncated-tent)");
}

WitnessMap witness(const SharkClass& c, const WitnessOptions& options) {
  validate(options.doubling);
  const std::string a_text = to_string(options.doubling.a);
  if (c.is_two_inf()) {
    if (!options.depth) throw ParameterError("witness: class 2^inf needs an explicit depth");
    PhiSpec spec{options.alpha, {options.doubling.a}, {options.doubling.a}, *options.depth};
    PhiTruncation phi = phi_truncation(spec, make_named(NamedMap::zero));
    std::string recipe = "class=2^inf strategy=phi alpha=" + to_string(options.alpha) + " a=" + a_text +
                         " b=" + a_text + " depth=" + std::to_string(*options.depth) +
                         " seed=g threshold=" + to_string(phi.threshold) +
                         " tail_bound=" + to_string(phi.tail_bound) +
                         " (finite truncation: periods are the powers of two up to 2^" +
                         std::to_string(*options.depth) + ")";
    return {std::move(phi.map), std::move(recipe)};
  }
  const std::uint64_t n = c.value();
  const std::string cls = "class=" + std::to_string(n);
  if (n == 1) return {make_named(NamedMap::zero), cls + " base=g"};
  if (options.strategy == WitnessStrategy::truncated_tent) {
    TruncatedTent tt = make_truncated_tent(static_cast<unsigned>(n), options.piece_budget);
    std::string recipe = cls + " strategy=truncated-tent orbit_min=" + to_string(tt.orbit.front()) +
                         " orbit_max=" + to_string(tt.orbit.back());
    return {std::move(tt.map), std::move(recipe)};
  }
  const DyadicDecomposition dec = decompose(n);
  PLMap map = make_named(NamedMap::zero);
  std::string base = "g";
  if (dec.odd_part >= 3) {
    const auto k = static_cast<unsigned>((dec.odd_part - 1) / 2);
    map = connect_the_dots(fn_pattern(k));
    base = "f_" + std::to_string(k) + " pattern \"" + to_string(fn_pattern(k)) + "\"";
  }
  std::string ops;
  for (unsigned i = 0; i < dec.valuation; ++i) {
    map = double_map(map, options.doubling);
    ops += (ops.empty() ? "" : ",") + std::string(1, to_char(options.doubling.kind)) + "(" + a_text + ")";
  }
  std::string recipe = cls + " strategy=stefan-doubling base=" + base;
  if (!ops.empty()) recipe += " ops=" + ops;
  return {std::move(map), std::move(recipe)};
}

}  // namespace sharklab
