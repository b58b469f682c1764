#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tsj {

using Natural = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Natural& value) { return value.str(); }

/// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_string(const Rational& value);

/// Parses "p" or "p/q" (optional leading '-'); throws InvalidArgument.
Rational parse_rational(const std::string& text);

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row, in row order.
std::vector<std::size_t> row_reduce(RationalMatrix& matrix);

/// Rank over the rationals. The argument is copied.
std::size_t rank(RationalMatrix matrix);

}  // namespace tsj
