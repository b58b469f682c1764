#include "tsj/polynomial.hpp"

#include <numeric>
#include <sstream>

#include "tsj/error.hpp"

namespace tsj {

Polynomial::Polynomial(std::size_t n, Terms terms) : n_(n) {
  for (auto& [alpha, c] : terms) add_term(alpha, c);
}

Polynomial Polynomial::monomial(const Exponent& alpha, const Rational& coefficient) {
  Polynomial p(alpha.dimension());
  p.add_term(alpha, coefficient);
  return p;
}

Polynomial Polynomial::variable(std::size_t n, std::size_t i) {
  return monomial(Exponent::unit(n, i));
}

Polynomial Polynomial::constant(std::size_t n, const Rational& value) {
  return monomial(Exponent::zero(n), value);
}

void Polynomial::add_term(const Exponent& alpha, const Rational& coefficient) {
  if (alpha.dimension() != n_) throw InvalidArgument("term dimension mismatch");
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(alpha, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial sum = *this;
  for (const auto& [alpha, c] : other.terms_) sum.add_term(alpha, c);
  return sum;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  return *this + other * Rational(-1);
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (n_ != other.n_) throw InvalidArgument("polynomial dimension mismatch");
  Polynomial product(n_);
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : other.terms_) product.add_term(a + b, ca * cb);
  }
  return product;
}

Polynomial Polynomial::operator*(const Rational& scalar) const {
  Polynomial result(n_);
  if (scalar == 0) return result;
  for (const auto& [alpha, c] : terms_) result.terms_.emplace(alpha, c * scalar);
  return result;
}

Polynomial Polynomial::derivative(std::size_t i) const {
  if (i >= n_) throw InvalidArgument("derivative index out of range");
  Polynomial result(n_);
  for (const auto& [alpha, c] : terms_) {
    if (auto beta = partial(alpha, i)) result.add_term(*beta, c * Rational(alpha[i]));
  }
  return result;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != n_) throw InvalidArgument("evaluation point dimension mismatch");
  Rational total = 0;
  for (const auto& [alpha, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < n_ && term != 0; ++i) {
      if (alpha[i] == 0) continue;
      if (point[i] == 0) {
        term = 0;
        break;
      }
      const Rational& x = point[i];
      term *= Rational(boost::multiprecision::pow(numerator(x), alpha[i].convert_to<unsigned>()),
                       boost::multiprecision::pow(denominator(x), alpha[i].convert_to<unsigned>()));
    }
    total += term;
  }
  return total;
}

const Polynomial::Terms::value_type& Polynomial::leading_term() const {
  if (terms_.empty()) throw InvalidArgument("zero polynomial has no leading term");
  return *terms_.rbegin();
}

bool Polynomial::is_multiple_of(const Polynomial& divisor) const {
  if (divisor.is_zero()) return is_zero();
  // A single polynomial is a Gröbner basis of the ideal it generates, so the
  // division remainder vanishes exactly on members.
  const auto& [lead_exp, lead_coef] = divisor.leading_term();
  Polynomial rest = *this;
  while (!rest.is_zero()) {
    const auto [exp, coef] = rest.leading_term();
    if (!lead_exp.divides(exp)) return false;
    std::vector<Natural> quotient(exp.entries().begin(), exp.entries().end());
    for (std::size_t i = 0; i < n_; ++i) quotient[i] -= lead_exp[i];
    rest = rest - divisor * Polynomial::monomial(Exponent(std::move(quotient)), coef / lead_coef);
  }
  return true;
}

std::vector<std::string> default_variable_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

std::string monomial_to_string(const Exponent& alpha, std::span<const std::string> names,
                               std::span<const std::size_t> variable_order) {
  std::vector<std::string> fallback;
  if (names.size() != alpha.dimension()) {
    fallback = default_variable_names(alpha.dimension());
    names = fallback;
  }
  std::vector<std::size_t> identity;
  if (variable_order.size() != alpha.dimension()) {
    identity.resize(alpha.dimension());
    std::iota(identity.begin(), identity.end(), std::size_t{0});
    variable_order = identity;
  }
  std::string out;
  for (auto i : variable_order) {
    if (alpha[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (alpha[i] != 1) out += "^" + alpha[i].str();
  }
  return out.empty() ? "1" : out;
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string out;
  // Highest graded-lex term first, the usual reading order.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [alpha, c] = *it;
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool constant = alpha.is_zero();
    if (magnitude != 1 || constant) {
      out += tsj::to_string(magnitude);
      if (!constant) out += "*";
    }
    if (!constant) out += monomial_to_string(alpha, names);
  }
  return out;
}

}  // namespace tsj
