#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace nonori {

using BigInt = boost::multiprecision::cpp_int;

template <class Int>
struct Matrix {
  int rows = 0, cols = 0;
  std::vector<Int> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, Int(0)) {}
  Int& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const Int& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
  bool operator==(const Matrix&) const = default;
};

using IntMatrix = Matrix<std::int64_t>;
using BigMatrix = Matrix<BigInt>;

// B == U * D * V with U, V unimodular and D diagonal, d_1 | d_2 | ... , d_i >= 0.
struct SmithResult {
  BigMatrix U, D, V;
  std::vector<BigInt> diagonal;  // nonzero invariant factors
  int rank() const { return static_cast<int>(diagonal.size()); }
};

SmithResult smith_normal_form(const IntMatrix& b);

// Nonzero invariant factors only; runs in int64 and falls back to big
// integers on overflow.
std::vector<BigInt> invariant_factors(const IntMatrix& b);

BigMatrix to_big(const IntMatrix& m);
BigMatrix multiply(const BigMatrix& x, const BigMatrix& y);

}  // namespace nonori
