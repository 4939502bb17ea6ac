#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace nonori {

// 2x2 integer matrix [[a, b], [c, d]]. Acts on column vectors.
struct GL2Z {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  std::int64_t det() const { return a * d - b * c; }
  std::int64_t trace() const { return a + d; }
  bool unimodular() const { return det() == 1 || det() == -1; }
  bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
  std::int64_t max_abs() const;

  GL2Z operator*(const GL2Z& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  GL2Z operator-() const { return {-a, -b, -c, -d}; }
  // Requires det = +-1.
  GL2Z inverse() const;

  bool operator==(const GL2Z&) const = default;
  auto operator<=>(const GL2Z&) const = default;

  std::string str() const;  // "[[a,b],[c,d]]"
  static GL2Z parse(std::string_view s);
};

}  // namespace nonori
