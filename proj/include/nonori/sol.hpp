#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nonori/gl2z.hpp"
#include "nonori/seifert.hpp"

namespace nonori {

// A^2 together with the check tr(A^2) = (tr A)^2 - 2 det A.
struct TraceSquare {
  GL2Z square;
  std::int64_t trace_square = 0;
  std::int64_t predicted = 0;
  bool holds() const { return trace_square == predicted; }
};
TraceSquare tr_square_identity(const GL2Z& a);

struct MonodromyClass {
  GL2Z rep;
  std::int64_t trace = 0;  // of rep; the orbit also holds -trace when det = -1
  std::int64_t det = 0;
  int visited = 0;
  int cap = 0;  // max entry size explored
  bool operator==(const MonodromyClass& o) const { return rep == o.rep; }
};

// Key order for representatives: max |entry|, then lexicographic (a,b,c,d).
bool rep_less(const GL2Z& x, const GL2Z& y);

// Canonical representative under conjugation by (1 0; +-1 1), (1 +-1; 0 1)
// and inversion. Greedy descent followed by a breadth-first search bounded
// by max |entry| <= cap; equal representatives prove the bundles agree,
// different ones prove nothing. No global sign change is used.
MonodromyClass normalize(const GL2Z& a, int extra_cap = 3);
bool same_class(const GL2Z& a, const GL2Z& b);

struct SolClass {
  Geometry geometry;
  bool orientable;
};
SolClass classify_sol(const GL2Z& a);

// Matrices A with det A = -1 and A^2 = b, from A^2 = (tr A) A + I.
// Empty when none exist; tr A = 0 forces b = I, which is reported as
// flat through classify_sol rather than listed here.
std::vector<GL2Z> det_minus_one_roots(const GL2Z& b);

}  // namespace nonori
