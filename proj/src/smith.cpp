#include "nonori/smith.hpp"

#include <utility>

namespace nonori {

namespace {

struct Overflow {};

std::int64_t add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw Overflow{};
  return r;
}
std::int64_t mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw Overflow{};
  return r;
}
std::int64_t neg(std::int64_t x) {
  if (x == INT64_MIN) throw Overflow{};
  return -x;
}
std::int64_t abs_of(std::int64_t x) { return x < 0 ? neg(x) : x; }
// Floor division keeps remainders non-negative, which the pivot loop relies on.
std::int64_t floor_div(std::int64_t x, std::int64_t y) {
  std::int64_t q = x / y;
  if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
  return q;
}

BigInt add(const BigInt& x, const BigInt& y) { return x + y; }
BigInt mul(const BigInt& x, const BigInt& y) { return x * y; }
BigInt neg(const BigInt& x) { return -x; }
BigInt abs_of(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }
BigInt floor_div(const BigInt& x, const BigInt& y) {
  BigInt q = x / y;
  if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
  return q;
}

template <class Int>
struct Smith {
  Matrix<Int>& D;
  Matrix<Int>* U;
  Matrix<Int>* V;

  // row i -= q * row k
  void row_sub(int i, int k, const Int& q) {
    for (int c = 0; c < D.cols; ++c) D(i, c) = add(D(i, c), neg(mul(q, D(k, c))));
    if (U)
      for (int r = 0; r < U->rows; ++r) (*U)(r, k) = add((*U)(r, k), mul(q, (*U)(r, i)));
  }
  // col j -= q * col k
  void col_sub(int j, int k, const Int& q) {
    for (int r = 0; r < D.rows; ++r) D(r, j) = add(D(r, j), neg(mul(q, D(r, k))));
    if (V)
      for (int c = 0; c < V->cols; ++c) (*V)(k, c) = add((*V)(k, c), mul(q, (*V)(j, c)));
  }
  void row_swap(int i, int k) {
    if (i == k) return;
    for (int c = 0; c < D.cols; ++c) std::swap(D(i, c), D(k, c));
    if (U)
      for (int r = 0; r < U->rows; ++r) std::swap((*U)(r, i), (*U)(r, k));
  }
  void col_swap(int j, int k) {
    if (j == k) return;
    for (int r = 0; r < D.rows; ++r) std::swap(D(r, j), D(r, k));
    if (V)
      for (int c = 0; c < V->cols; ++c) std::swap((*V)(j, c), (*V)(k, c));
  }
  void row_negate(int i) {
    for (int c = 0; c < D.cols; ++c) D(i, c) = neg(D(i, c));
    if (U)
      for (int r = 0; r < U->rows; ++r) (*U)(r, i) = neg((*U)(r, i));
  }

  void run() {
    int m = D.rows, n = D.cols;
    for (int k = 0; k < std::min(m, n); ++k) {
      while (true) {
        int pi = -1, pj = -1;
        Int best = 0;
        for (int i = k; i < m; ++i)
          for (int j = k; j < n; ++j)
            if (D(i, j) != 0 && (pi < 0 || abs_of(D(i, j)) < best)) {
              best = abs_of(D(i, j));
              pi = i;
              pj = j;
            }
        if (pi < 0) return;
        row_swap(k, pi);
        col_swap(k, pj);
        if (D(k, k) < 0) row_negate(k);
        bool clean = true;
        for (int i = k + 1; i < m; ++i)
          if (D(i, k) != 0) {
            row_sub(i, k, floor_div(D(i, k), D(k, k)));
            if (D(i, k) != 0) clean = false;
          }
        for (int j = k + 1; j < n; ++j)
          if (D(k, j) != 0) {
            col_sub(j, k, floor_div(D(k, j), D(k, k)));
            if (D(k, j) != 0) clean = false;
          }
        if (!clean) continue;
        // Enforce divisibility of the remaining block by the pivot.
        int bad = -1;
        for (int i = k + 1; i < m && bad < 0; ++i)
          for (int j = k + 1; j < n; ++j)
            if (D(i, j) % D(k, k) != 0) {
              bad = i;
              break;
            }
        if (bad < 0) break;
        row_sub(k, bad, Int(-1));
      }
    }
  }
};

template <class Int>
Matrix<Int> identity(int n) {
  Matrix<Int> m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

template <class Int>
std::vector<BigInt> diagonal_of(const Matrix<Int>& d) {
  std::vector<BigInt> out;
  for (int i = 0; i < std::min(d.rows, d.cols); ++i)
    if (d(i, i) != 0) out.emplace_back(d(i, i));
  return out;
}

}  // namespace

BigMatrix to_big(const IntMatrix& m) {
  BigMatrix b(m.rows, m.cols);
  for (std::size_t i = 0; i < m.a.size(); ++i) b.a[i] = m.a[i];
  return b;
}

BigMatrix multiply(const BigMatrix& x, const BigMatrix& y) {
  BigMatrix r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (x(i, k) == 0) continue;
      for (int j = 0; j < y.cols; ++j) r(i, j) += x(i, k) * y(k, j);
    }
  return r;
}

SmithResult smith_normal_form(const IntMatrix& b) {
  SmithResult r;
  r.D = to_big(b);
  r.U = identity<BigInt>(b.rows);
  r.V = identity<BigInt>(b.cols);
  Smith<BigInt>{r.D, &r.U, &r.V}.run();
  r.diagonal = diagonal_of(r.D);
  return r;
}

std::vector<BigInt> invariant_factors(const IntMatrix& b) {
  try {
    IntMatrix d = b;
    Smith<std::int64_t>{d, nullptr, nullptr}.run();
    return diagonal_of(d);
  } catch (const Overflow&) {
    BigMatrix d = to_big(b);
    Smith<BigInt>{d, nullptr, nullptr}.run();
    return diagonal_of(d);
  }
}

}  // namespace nonori
