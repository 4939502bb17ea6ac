#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace nonori {

using Rational = boost::rational<std::int64_t>;

enum class BaseSymbol { S2, RP2, T, K, D, Dbar, Ddot, Dddot, A, Abar, S };

// Underlying surface data of a base orbifold without cone points. Mirror
// circles contribute 0 to chi^orb; each mirror segment in a boundary circle
// contributes -1/2.
struct BaseInfo {
  BaseSymbol symbol;
  const char* name;
  int underlying_euler;
  bool orientable_surface;
  int true_boundary;
  int mirror_circles;
  int mirror_segments;
};

const BaseInfo& base_info(BaseSymbol s);
BaseSymbol parse_base(std::string_view name);
bool has_mirrors(BaseSymbol s);

struct Fiber {
  std::int64_t p;
  std::int64_t q;
  bool operator==(const Fiber&) const = default;
};

struct SeifertData {
  BaseSymbol base = BaseSymbol::S2;
  std::vector<Fiber> fibers;
  std::int64_t twist = 0;  // integer obstruction term b
  // The second S^1-bundle class over bases that carry two, i.e. fibers
  // reversed along orientation-reversing loops of an orientable base or kept
  // along those of a non-orientable one.
  bool twisted = false;

  bool closed() const;
  bool total_orientable() const;
  std::vector<std::int64_t> cone_orders() const;
  bool operator==(const SeifertData&) const = default;

  // "base; (p1,q1)(p2,q2); b" with base possibly suffixed by "~".
  std::string str() const;
  static SeifertData parse(std::string_view s);
};

Rational chi_orb(BaseSymbol base, const std::vector<std::int64_t>& cones);
Rational chi_orb(const SeifertData& sd);
// b + sum q_i/p_i for orientable total spaces and for blocks; nullopt for
// closed non-orientable total spaces, where e is 0 by structure.
std::optional<Rational> euler_number(const SeifertData& sd);

enum class Geometry { S3, S2xR, E3, Nil, H2xR, SL2R, Sol, Hyp };
std::string geometry_name(Geometry g);
Geometry parse_geometry(std::string_view s);
Geometry geometry_from_invariants(const Rational& chi, bool e_zero);
// Requires closed data.
Geometry classify_geometry(const SeifertData& sd);

// Closed base orbifold with cone orders p_1 <= ... <= p_{k-1} fixed and the
// last order ranging over [last_lo, last_hi]; last_hi < 0 means unbounded.
struct OrbifoldFamily {
  BaseSymbol base;
  std::vector<std::int64_t> prefix;
  std::int64_t last_lo = 0;
  std::int64_t last_hi = 0;

  bool bounded() const { return last_hi >= 0; }
  int cone_count() const { return static_cast<int>(prefix.size()) + 1; }
  std::string str() const;
  bool operator==(const OrbifoldFamily&) const = default;
};

// Hyperbolic closed bases S2, RP2, Dbar with threshold <= chi^orb < 0.
// Other closed bases without corner reflectors have underlying chi <= 0 and
// need a cone point to be hyperbolic, giving chi^orb <= -1/2; they are
// rejected for thresholds above -1/2.
std::vector<OrbifoldFamily> enumerate_small_orbifolds(const Rational& threshold);

struct EZeroResult {
  bool divisibility = false;
  bool realizable = false;
  std::vector<std::int64_t> witness_q;  // sum q_i/p_i is an integer
  std::string obstruction;
};
// Orientable total space over S2 with these cone orders: e = 0 for some
// choice of q_i coprime to p_i and integer b.
EZeroResult e_zero_realizable(const std::vector<std::int64_t>& ps);

struct FamilyScan {
  OrbifoldFamily family;
  std::vector<std::vector<std::int64_t>> divisible;  // members passing divisibility
  std::vector<std::vector<std::int64_t>> realizable;
};
// Applies the divisibility filter to every member of the family; unbounded
// families are cut at last <= product of the prefix, forced by divisibility.
FamilyScan scan_family(const OrbifoldFamily& f);

// Closed H2xR Seifert manifolds with threshold <= chi^orb: orientable ones
// over S2 with a realizable e = 0, non-orientable ones over RP2 and Dbar.
// Fibers of non-orientable data are normalized to 0 < q <= p/2.
std::vector<SeifertData> small_h2r_manifolds(const Rational& threshold);

// Orbits of H^1(X; Z/2) = {(alpha(a), alpha(b))} under the mapping class
// generators acting on H_1(X).
using Z2Pair = std::array<int, 2>;
std::vector<std::vector<Z2Pair>> ibundle_orbits(char surface);

struct IBundle {
  std::string name;
  char surface;
  Z2Pair cocycle;
  bool orientable;
  std::vector<char> boundary;  // 'T' or 'K' per component
  std::vector<SeifertData> fibrations;
};
std::vector<IBundle> ibundle_table();

// Glues a block with one boundary torus to the fibration `fiber_base` (S or
// Abar) of T~xI, matching fibers.
SeifertData glue_block_to_ibundle(const SeifertData& block, BaseSymbol fiber_base);

// Base RP2 or Dbar, non-orientable total space: the S2 cover with fibers
// (p_i, q_i) followed by (p_i, -q_i).
SeifertData seifert_double_cover(const SeifertData& sd);

// An orientation-preserving involution of T acts as +-I on H_1(T), so two
// slopes can be exchanged by it only if they agree up to sign.
bool slopes_match_under_involution(std::array<std::int64_t, 2> s1, std::array<std::int64_t, 2> s2);

}  // namespace nonori
