#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nonori/smith.hpp"
#include "nonori/triangulation.hpp"

namespace nonori {

// Finitely generated abelian group Z^rank + sum Z/t_i with t_1 | t_2 | ...
struct HomologyResult {
  int rank = 0;
  std::vector<std::int64_t> torsion;

  bool operator==(const HomologyResult&) const = default;
  std::string str() const;  // e.g. "Z^2 + Z/2"
  int z2_dimension() const;
};

// Builds the group from a relation matrix (rows = relations, cols = generators).
HomologyResult abelian_group_from_relations(const IntMatrix& relations);

// Boundary maps of the cellular chain complex after identifications.
// Column j of d1 is the boundary of edge class j; column k of d2 is the
// boundary of triangle class k, oriented by its representative slot.
IntMatrix boundary_d1(const Skeleton& sk);
IntMatrix boundary_d2(const Triangulation& t, const Skeleton& sk);

HomologyResult h1_integral(const Triangulation& t);
int h1_z2(const Triangulation& t);

// Rank of an integer matrix reduced mod 2.
int rank_mod2(const IntMatrix& m);

// One bit per gluing slot, symmetric under the involution.
struct W1Class {
  std::vector<std::array<std::uint8_t, 4>> bits;
  bool nonzero = false;

  // Sum of bits over a dual loop given as the (tet, face) exits it crosses.
  int evaluate(const std::vector<std::array<int, 2>>& crossings) const;
};

// The orientation cocycle reduced against a BFS spanning tree, so tree
// gluings carry 0 and the class is zero iff every bit is 0.
W1Class w1(const Triangulation& t);

struct Fingerprint {
  bool orientable = true;
  HomologyResult h1;
  std::optional<HomologyResult> h1_cover;

  bool operator==(const Fingerprint&) const = default;
  auto operator<=>(const Fingerprint& o) const { return str() <=> o.str(); }
  std::string str() const;
  static Fingerprint parse(std::string_view s);
};

Fingerprint fingerprint(const Triangulation& t);

}  // namespace nonori
