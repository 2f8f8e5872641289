#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sharklab/order.hpp"
#include "sharklab/patterns.hpp"
#include "sharklab/pl_map.hpp"

namespace sharklab {

enum class NamedMap {
  tent,  // 1 - |2x - 1|
  zero,  // g(x) = 0
  h,     // 1/2 + 2x on [0, 1/4], 3/2 - 2x on [1/4, 1/2], 1 - x on [1/2, 1]
};

PLMap make_named(NamedMap kind);
// "tent", "g", "h"; throws ParameterError otherwise.
NamedMap parse_named_map(std::string_view name);

// Orbit pattern of f_n on 2n + 1 points: 1 -> n + 1, i -> 2n + 3 - i for
// 2 <= i <= n + 1, j -> 2n + 2 - j for n + 2 <= j <= 2n + 1. n = 1 gives the
// 3-cycle 1 -> 2 -> 3.
OrbitPattern fn_pattern(unsigned n);

// connect_the_dots(fn_pattern(n)); n >= 2.
PLMap make_fn(unsigned n);

struct TruncatedTent {
  PLMap map;
  // The retained period-n orbit, ascending.
  std::vector<Rational> orbit;
};

// Tent map cut off to the constant min P on [max P, 1], where P is a period-n
// orbit of the tent map with no other period-n orbit inside (min P, max P);
// ties go to the smallest max P, then the smallest min P.
TruncatedTent make_truncated_tent(unsigned n, std::size_t piece_budget = kDefaultPieceBudget);

enum class DoublingKind { G, H, D, E };

DoublingKind parse_doubling_kind(std::string_view text);
char to_char(DoublingKind k);

struct DoublingSpec {
  DoublingKind kind = DoublingKind::G;
  Rational a = make_rational(1, 3);
};

// Throws ParameterError unless 0 < a < 1/2.
void validate(const DoublingSpec& spec);

// Doubles every period of a self-map f of [0, 1]. With s(x) = a f(x / a) on
// [0, a]:
//   G: 1 - s(x)          H: s(x) + 1 - a
//   D: 1 - a + s(a - x)  E: 1 - s(a - x)
// on [0, a]; 1 - x (G, D) or x - (1 - a) (H, E) on [1 - a, 1]; and the
// straight segment joining the two on [a, 1 - a].
PLMap double_map(const PLMap& f, const DoublingSpec& spec);

// Bit sequence alpha_1 alpha_2 ...: prefix followed by cycle repeated.
struct AlphaSequence {
  std::vector<int> prefix;
  std::vector<int> cycle;

  int at(std::size_t i) const;  // 1-based
};

// "01" means 0101...; "1(01)" means 1 then 0101...
AlphaSequence parse_alpha(std::string_view text);
std::string to_string(const AlphaSequence& alpha);

struct PhiSpec {
  AlphaSequence alpha;
  // Used cyclically: a_i = a_seq[(i - 1) % size].
  std::vector<Rational> a_seq;
  std::vector<Rational> b_seq;
  unsigned depth = 6;

  // a_i where alpha_i = 0, b_i where alpha_i = 1.
  Rational c(std::size_t i) const;
};

struct PhiTruncation {
  PLMap map;
  // Truncations of depth k and k + 1 agree exactly on [threshold, 1].
  Rational threshold;
  // Sup-distance bound to the limit map: prod_{i < depth} c_i / (1 - sup c).
  Rational tail_bound;
};

// Phi_{alpha_1}(Phi_{alpha_2}(... Phi_{alpha_depth}(seed))) with Phi = G_{a_i}
// when alpha_i = 0 and H_{b_i} when alpha_i = 1.
PhiTruncation phi_truncation(const PhiSpec& spec, const PLMap& seed);

enum class WitnessStrategy { stefan_doubling, truncated_tent };

WitnessStrategy parse_witness_strategy(std::string_view text);

struct WitnessOptions {
  WitnessStrategy strategy = WitnessStrategy::stefan_doubling;
  DoublingSpec doubling{};
  // Required for 2^inf.
  std::optional<unsigned> depth;
  AlphaSequence alpha{{}, {0, 1}};
  std::size_t piece_budget = kDefaultPieceBudget;
};

struct WitnessMap {
  PLMap map;
  std::string recipe;
};

// A map whose period set is the tail of c. For 2^inf the result is the
// depth-k phi truncation seeded with g, whose periods are 1, 2, ..., 2^k.
WitnessMap witness(const SharkClass& c, const WitnessOptions& options = {});

}  // namespace sharklab
