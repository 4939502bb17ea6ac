#include "nonori/gl2z.hpp"

#include <cstdlib>
#include <regex>

#include "nonori/error.hpp"

namespace nonori {

std::int64_t GL2Z::max_abs() const {
  return std::max(std::max(std::llabs(a), std::llabs(b)), std::max(std::llabs(c), std::llabs(d)));
}

GL2Z GL2Z::inverse() const {
  std::int64_t D = det();
  if (D != 1 && D != -1) throw DomainError("GL2Z::inverse: determinant must be +-1");
  return {D * d, -D * b, -D * c, D * a};
}

std::string GL2Z::str() const {
  return "[[" + std::to_string(a) + "," + std::to_string(b) + "],[" + std::to_string(c) + "," +
         std::to_string(d) + "]]";
}

GL2Z GL2Z::parse(std::string_view s) {
  static const std::regex re(
      R"(^\s*\[\s*\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]\s*,\s*\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]\s*\]\s*$)");
  std::string str(s);
  std::smatch m;
  if (!std::regex_match(str, m, re)) throw ParseError("matrix literal: expected [[a,b],[c,d]], got '" + str + "'");
  try {
    return {std::stoll(m[1]), std::stoll(m[2]), std::stoll(m[3]), std::stoll(m[4])};
  } catch (const std::out_of_range&) {
    throw ParseError("matrix literal: entry out of range");
  }
}

}  // namespace nonori
