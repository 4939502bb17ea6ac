#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace nonori {

namespace detail {

struct PermTables {
  std::array<std::array<std::uint8_t, 4>, 24> image{};
  std::array<std::uint8_t, 256> code_of{};
  std::array<std::array<std::uint8_t, 24>, 24> compose{};
  std::array<std::uint8_t, 24> inverse{};
  std::array<std::int8_t, 24> sign{};
};

constexpr PermTables build_perm_tables() {
  PermTables t{};
  int k = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
          t.image[k] = {static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                        static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(d)};
          t.code_of[a * 64 + b * 16 + c * 4 + d] = static_cast<std::uint8_t>(k);
          ++k;
        }
  auto code = [&](const std::array<std::uint8_t, 4>& im) {
    return t.code_of[im[0] * 64 + im[1] * 16 + im[2] * 4 + im[3]];
  };
  for (int p = 0; p < 24; ++p) {
    int inv = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (t.image[p][i] > t.image[p][j]) ++inv;
    t.sign[p] = (inv % 2 == 0) ? 1 : -1;
    std::array<std::uint8_t, 4> iv{};
    for (int i = 0; i < 4; ++i) iv[t.image[p][i]] = static_cast<std::uint8_t>(i);
    t.inverse[p] = code(iv);
    for (int q = 0; q < 24; ++q) {
      std::array<std::uint8_t, 4> c{};
      for (int i = 0; i < 4; ++i) c[i] = t.image[p][t.image[q][i]];
      t.compose[p][q] = code(c);
    }
  }
  return t;
}

inline constexpr PermTables kPermTables = build_perm_tables();

}  // namespace detail

// Permutation of {0,1,2,3}, stored as its index in the lexicographic list of S4.
// Composition: (p * q)[i] == p[q[i]].
class Perm4 {
 public:
  constexpr Perm4() = default;

  static constexpr Perm4 from_code(int code) { return Perm4(static_cast<std::uint8_t>(code)); }
  static constexpr Perm4 from_images(int a, int b, int c, int d) {
    return Perm4(static_cast<std::uint8_t>(detail::kPermTables.code_of[a * 64 + b * 16 + c * 4 + d]));
  }
  // Transposition swapping a and b.
  static constexpr Perm4 swap(int a, int b) {
    std::array<int, 4> im{0, 1, 2, 3};
    im[a] = b;
    im[b] = a;
    return from_images(im[0], im[1], im[2], im[3]);
  }

  constexpr int operator[](int i) const { return detail::kPermTables.image[code_][i]; }
  constexpr Perm4 operator*(Perm4 q) const { return Perm4(detail::kPermTables.compose[code_][q.code_]); }
  constexpr Perm4 inverse() const { return Perm4(detail::kPermTables.inverse[code_]); }
  constexpr int sign() const { return detail::kPermTables.sign[code_]; }
  constexpr bool even() const { return sign() > 0; }
  constexpr int code() const { return code_; }
  constexpr bool is_identity() const { return code_ == 0; }

  constexpr bool operator==(const Perm4&) const = default;
  constexpr auto operator<=>(const Perm4&) const = default;

  std::string str() const {
    std::string s(4, '0');
    for (int i = 0; i < 4; ++i) s[i] = static_cast<char>('0' + (*this)[i]);
    return s;
  }
  static std::optional<Perm4> parse(std::string_view s) {
    if (s.size() != 4) return std::nullopt;
    int seen = 0;
    std::array<int, 4> im{};
    for (int i = 0; i < 4; ++i) {
      int v = s[i] - '0';
      if (v < 0 || v > 3 || (seen >> v & 1)) return std::nullopt;
      seen |= 1 << v;
      im[i] = v;
    }
    return from_images(im[0], im[1], im[2], im[3]);
  }

  static constexpr int kCount = 24;

 private:
  constexpr explicit Perm4(std::uint8_t c) : code_(c) {}

  std::uint8_t code_ = 0;
};

// Tetrahedron edges as vertex pairs; edge k and edge 5-k are opposite.
inline constexpr std::array<std::array<int, 2>, 6> kEdgeVertices{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

constexpr int edge_index(int a, int b) {
  if (a > b) std::swap(a, b);
  constexpr int table[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
  return table[a][b];
}

}  // namespace nonori
