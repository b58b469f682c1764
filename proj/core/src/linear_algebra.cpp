#include <algorithm>

#include "tsj/error.hpp"
#include "tsj/numeric.hpp"

namespace tsj {

std::string to_string(const Rational& value) {
  const Natural num = boost::multiprecision::numerator(value);
  const Natural den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  auto parse_int = [&](const std::string& part) {
    const bool negative = !part.empty() && part[0] == '-';
    const std::size_t start = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    const std::string digits = part.substr(start);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                       [](char c) { return c >= '0' && c <= '9'; })) {
      throw InvalidArgument("not a rational number: '" + text + "'");
    }
    Natural value(digits);
    return negative ? Natural(-value) : value;
  };
  if (slash == std::string::npos) return Rational(parse_int(text));
  const Natural den = parse_int(text.substr(slash + 1));
  if (den == 0) throw InvalidArgument("zero denominator in '" + text + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

std::vector<std::size_t> row_reduce(RationalMatrix& matrix) {
  std::vector<std::size_t> pivots;
  if (matrix.empty()) return pivots;
  const std::size_t rows = matrix.size();
  const std::size_t cols = matrix.front().size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && matrix[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(matrix[row], matrix[pivot]);
    const Rational scale = matrix[row][col];
    for (auto& entry : matrix[row]) entry /= scale;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || matrix[r][col] == 0) continue;
      const Rational factor = matrix[r][col];
      for (std::size_t c = col; c < cols; ++c) matrix[r][c] -= factor * matrix[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(RationalMatrix matrix) { return row_reduce(matrix).size(); }

}  // namespace tsj
