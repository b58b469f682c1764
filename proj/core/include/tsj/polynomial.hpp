#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "tsj/exponent.hpp"
#include "tsj/numeric.hpp"

namespace tsj {

/// Sparse polynomial with exact rational coefficients in n variables.
/// Zero coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<Exponent, Rational>;

  explicit Polynomial(std::size_t n = 0) : n_(n) {}
  Polynomial(std::size_t n, Terms terms);

  static Polynomial monomial(const Exponent& alpha, const Rational& coefficient = 1);
  static Polynomial variable(std::size_t n, std::size_t i);
  static Polynomial constant(std::size_t n, const Rational& value);

  std::size_t dimension() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  void add_term(const Exponent& alpha, const Rational& coefficient);

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Rational& scalar) const;
  bool operator==(const Polynomial& other) const = default;

  Polynomial derivative(std::size_t i) const;
  Rational evaluate(std::span<const Rational> point) const;

  /// Exact membership in the principal ideal ⟨divisor⟩.
  bool is_multiple_of(const Polynomial& divisor) const;

  /// Leading term in graded-lex order (the largest exponent).
  const Terms::value_type& leading_term() const;

  /// Human-readable form; variable names default to x1..xn.
  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  std::size_t n_;
  Terms terms_;
};

std::vector<std::string> default_variable_names(std::size_t n);

/// "x1^2*x3" style rendering of a single monomial without coefficient.
std::string monomial_to_string(const Exponent& alpha, std::span<const std::string> names,
                               std::span<const std::size_t> variable_order = {});

}  // namespace tsj
