#pragma once

// Polynomial input.
//
//   poly   := [sign] term (sign term)*
//   term   := factor ('*' factor)*
//   factor := natural ['/' natural] | variable ['^' natural]
//
// Variables are either single letters, indexed by order of first appearance,
// or a letter followed by a positive index (x1, x2, ...), in which case the
// index is the coordinate and n is the largest index used. The two styles
// cannot be mixed. Whitespace is ignored.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tsj/exponent.hpp"
#include "tsj/polynomial.hpp"

namespace tsj {

struct ParsedPolynomial {
  std::size_t n = 0;
  std::vector<std::string> variable_names;
  Polynomial polynomial;

  /// The support; valid because parsing rejects constants and zero.
  SupportSet support() const;
};

/// Throws ParseError on bad syntax, InvalidSupport for a nonzero constant
/// term or the zero polynomial.
ParsedPolynomial parse_polynomial(std::string_view text);

enum class MonomialityCertificate { Certified, Unknown };

std::string to_string(MonomialityCertificate certificate);

/// Certified when every partial derivative has at most one term, so the
/// Jacobian ideal is literally generated by monomials.
MonomialityCertificate syntactic_monomiality_certificate(const ParsedPolynomial& polynomial);

}  // namespace tsj
