#include "tsj/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

#include "tsj/error.hpp"

namespace tsj {

namespace {

struct RawTerm {
  Rational coefficient = 1;
  std::vector<std::pair<std::string, Natural>> powers;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  std::size_t position() {
    skip_space();
    return pos_;
  }

  Natural natural() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected a natural number", start);
    return Natural(std::string(text_.substr(start, pos_ - start)));
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError("expected a variable", start);
    }
    ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

RawTerm parse_term(Lexer& lex) {
  RawTerm term;
  do {
    const char c = lex.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t at = lex.position();
      Natural num = lex.natural();
      Natural den = 1;
      if (lex.accept('/')) {
        den = lex.natural();
        if (den == 0) throw ParseError("zero denominator", at);
      }
      term.coefficient *= Rational(num, den);
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name = lex.identifier();
      Natural power = 1;
      if (lex.accept('^')) power = lex.natural();
      term.powers.emplace_back(std::move(name), std::move(power));
    } else {
      throw ParseError(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'",
                       lex.position());
    }
  } while (lex.accept('*'));
  return term;
}

}  // namespace

SupportSet ParsedPolynomial::support() const {
  ExponentSet elements;
  for (const auto& [alpha, c] : polynomial.terms()) elements.insert(alpha);
  return SupportSet(n, std::move(elements));
}

ParsedPolynomial parse_polynomial(std::string_view text) {
  Lexer lex(text);
  std::vector<RawTerm> terms;
  if (lex.at_end()) throw ParseError("empty input", 0);
  bool negative = false;
  if (lex.accept('-')) {
    negative = true;
  } else {
    lex.accept('+');
  }
  for (;;) {
    RawTerm term = parse_term(lex);
    if (negative) term.coefficient = -term.coefficient;
    terms.push_back(std::move(term));
    if (lex.at_end()) break;
    if (lex.accept('+')) {
      negative = false;
    } else if (lex.accept('-')) {
      negative = true;
    } else {
      throw ParseError(std::string("expected '+' or '-' but found '") + lex.peek() + "'",
                       lex.position());
    }
  }

  // Assign coordinates.
  std::vector<std::string> order;
  bool any_indexed = false;
  bool any_letter = false;
  for (const auto& term : terms) {
    for (const auto& [name, power] : term.powers) {
      (name.size() > 1 ? any_indexed : any_letter) = true;
      if (std::find(order.begin(), order.end(), name) == order.end()) order.push_back(name);
    }
  }
  if (any_indexed && any_letter) {
    throw ParseError("cannot mix single-letter and indexed variable names", 0);
  }

  ParsedPolynomial result;
  std::map<std::string, std::size_t> index;
  if (any_indexed) {
    const char prefix = order.front().front();
    std::size_t max_index = 0;
    for (const auto& name : order) {
      if (name.front() != prefix) {
        throw ParseError("indexed variables must share one letter prefix", 0);
      }
      const std::string digits = name.substr(1);
      if (digits.size() > 6 || digits.front() == '0') {
        throw ParseError("invalid variable index in '" + name + "'", 0);
      }
      const std::size_t k = std::stoul(digits);
      index[name] = k - 1;
      max_index = std::max(max_index, k);
    }
    result.n = max_index;
    for (std::size_t k = 1; k <= max_index; ++k) {
      result.variable_names.push_back(std::string(1, prefix) + std::to_string(k));
    }
  } else {
    for (std::size_t k = 0; k < order.size(); ++k) index[order[k]] = k;
    result.n = order.size();
    result.variable_names = order;
  }

  result.polynomial = Polynomial(result.n);
  for (const auto& term : terms) {
    std::vector<Natural> entries(result.n, Natural(0));
    for (const auto& [name, power] : term.powers) entries[index.at(name)] += power;
    result.polynomial.add_term(Exponent(std::move(entries)), term.coefficient);
  }

  if (result.n > 0) {
    const auto& terms_map = result.polynomial.terms();
    if (auto it = terms_map.find(Exponent::zero(result.n)); it != terms_map.end()) {
      throw InvalidSupport("constant term " + to_string(it->second) +
                           " present: the polynomial must vanish at the origin");
    }
  }
  if (result.n == 0) {
    // Only numbers: either zero or a nonzero constant.
    Rational total = 0;
    for (const auto& term : terms) total += term.coefficient;
    if (total != 0) {
      throw InvalidSupport("constant polynomial: the polynomial must vanish at the origin");
    }
    throw InvalidSupport("zero polynomial");
  }
  if (result.polynomial.is_zero()) throw InvalidSupport("zero polynomial");
  return result;
}

std::string to_string(MonomialityCertificate certificate) {
  return certificate == MonomialityCertificate::Certified ? "CERTIFIED" : "UNKNOWN";
}

MonomialityCertificate syntactic_monomiality_certificate(const ParsedPolynomial& polynomial) {
  for (std::size_t i = 0; i < polynomial.n; ++i) {
    if (polynomial.polynomial.derivative(i).term_count() > 1) return MonomialityCertificate::Unknown;
  }
  return MonomialityCertificate::Certified;
}

}  // namespace tsj
