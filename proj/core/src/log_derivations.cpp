#include "tsj/log_derivations.hpp"

#include <algorithm>

#include "tsj/classification.hpp"
#include "tsj/error.hpp"

namespace tsj {

std::string to_string(FieldKind kind) {
  switch (kind) {
    case FieldKind::Euler: return "euler";
    case FieldKind::EulerTerm: return "euler_term";
    case FieldKind::Plain: return "plain";
    case FieldKind::Koszul: return "koszul";
  }
  return "unknown";
}

std::string to_string(StratumLocation location) {
  switch (location) {
    case StratumLocation::Complement: return "COMPLEMENT";
    case StratumLocation::SmoothPart: return "SMOOTH_PART";
    case StratumLocation::Singular: return "SINGULAR";
  }
  return "UNKNOWN";
}

bool SymbolicField::is_zero() const {
  return std::all_of(components.begin(), components.end(),
                     [](const auto& c) { return c.second.is_zero(); });
}

std::string SymbolicField::to_string(std::span<const std::string> names) const {
  std::vector<std::string> fallback;
  std::size_t n = components.empty() ? 0 : components.begin()->second.dimension();
  if (names.size() != n) {
    fallback = default_variable_names(n);
    names = fallback;
  }
  std::string out;
  for (const auto& [i, c] : components) {
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string(names) + ")*D" + names[i];
  }
  return out.empty() ? "0" : out;
}

Polynomial apply(const SymbolicField& field, const Polynomial& g) {
  Polynomial result(g.dimension());
  for (const auto& [i, c] : field.components) result = result + c * g.derivative(i);
  return result;
}

SymbolicField euler_field(const WeightVector& weights) {
  const std::size_t n = weights.dimension();
  SymbolicField chi{FieldKind::Euler, "chi", {}};
  for (std::size_t i = 0; i < n; ++i) {
    chi.components.emplace(i, Polynomial::variable(n, i) * weights[i]);
  }
  return chi;
}

namespace {

SymbolicField plain_field(std::size_t n, std::size_t i) {
  SymbolicField field{FieldKind::Plain, "D" + std::to_string(i + 1), {}};
  field.components.emplace(i, Polynomial::constant(n, 1));
  return field;
}

// x_i ∂_i − a χ, where χ is supplied as a field.
SymbolicField euler_term(std::size_t n, std::size_t i, const Natural& a, const SymbolicField& chi,
                         const std::string& chi_label) {
  SymbolicField field{FieldKind::EulerTerm,
                      "x" + std::to_string(i + 1) + "*D" + std::to_string(i + 1) + " - " +
                          a.str() + "*" + chi_label,
                      {}};
  for (const auto& [k, c] : chi.components) {
    field.components.emplace(k, c * Rational(-Rational(a)));
  }
  auto& own = field.components.try_emplace(i, Polynomial(n)).first->second;
  own = own + Polynomial::variable(n, i);
  return field;
}

void drop_zero_components(SymbolicField& field) {
  std::erase_if(field.components, [](const auto& c) { return c.second.is_zero(); });
}

// Leading coefficient: lowest variable index, largest graded-lex term.
void make_monic(SymbolicField& field) {
  drop_zero_components(field);
  if (field.components.empty()) return;
  const Rational lead = field.components.begin()->second.leading_term().second;
  if (lead == 1) return;
  const Rational inverse = Rational(1) / lead;
  for (auto& [i, c] : field.components) c = c * inverse;
}

bool same_components(const SymbolicField& a, const SymbolicField& b) {
  return a.components == b.components;
}

void check_disjoint(const ExponentSet& f_prime, std::size_t n) {
  for (const auto& alpha : f_prime) {
    if (alpha.dimension() != n) throw InvalidSupport("exponent dimension mismatch");
    if (alpha.is_zero()) throw InvalidSupport("zero exponent in Thom-Sebastiani support");
  }
  if (f_prime.empty()) throw InvalidSupport("Thom-Sebastiani support is empty");
  if (!is_thom_sebastiani(f_prime)) throw InvalidSupport("supports are not pairwise disjoint");
}

}  // namespace

std::vector<SymbolicField> monomial_annihilator(const Exponent& alpha) {
  if (alpha.is_zero()) throw InvalidSupport("annihilator of a constant monomial requested");
  const std::size_t n = alpha.dimension();
  const SymbolicField chi = euler_field(ts_weights(ExponentSet{alpha}, n));
  std::vector<SymbolicField> result;
  for (std::size_t i = 0; i < n; ++i) {
    if (alpha[i] != 0) {
      SymbolicField field = euler_term(n, i, alpha[i], chi, "chi");
      drop_zero_components(field);
      result.push_back(std::move(field));
    } else {
      result.push_back(plain_field(n, i));
    }
  }
  return result;
}

Polynomial ts_sum(const ExponentSet& f_prime, std::size_t n) {
  Polynomial f(n);
  for (const auto& alpha : f_prime) f.add_term(alpha, 1);
  return f;
}

std::vector<SymbolicField> ts_log_generators(const ExponentSet& f_prime, std::size_t n) {
  check_disjoint(f_prime, n);
  std::vector<SymbolicField> result;
  result.push_back(euler_field(ts_weights(f_prime, n)));

  auto add = [&](SymbolicField field) {
    make_monic(field);
    if (field.is_zero()) return;
    for (const auto& existing : result) {
      if (same_components(existing, field)) return;
    }
    result.push_back(std::move(field));
  };

  std::vector<bool> used(n, false);
  std::size_t block_index = 0;
  for (const auto& alpha : f_prime) {
    ++block_index;
    const Rational w(Natural(1), alpha.degree());
    SymbolicField block_chi{FieldKind::Euler, "chi" + std::to_string(block_index), {}};
    for (auto i : alpha.support()) {
      used[i] = true;
      block_chi.components.emplace(i, Polynomial::variable(n, i) * w);
    }
    for (auto i : alpha.support()) add(euler_term(n, i, alpha[i], block_chi, block_chi.label));
  }

  const Polynomial f = ts_sum(f_prime, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!used[i]) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!used[j]) continue;
      SymbolicField koszul{FieldKind::Koszul,
                           "(df/dx" + std::to_string(j + 1) + ")*D" + std::to_string(i + 1) +
                               " - (df/dx" + std::to_string(i + 1) + ")*D" + std::to_string(j + 1),
                           {}};
      koszul.components.emplace(i, f.derivative(j));
      koszul.components.emplace(j, f.derivative(i) * Rational(-1));
      add(std::move(koszul));
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (!used[i]) add(plain_field(n, i));
  }
  return result;
}

bool block_pattern_is_singular(const Exponent& alpha, const VariableSet& zero_set) {
  for (const auto& [i, beta] : derivatives(alpha)) {
    const bool meets = std::any_of(zero_set.begin(), zero_set.end(),
                                   [&](std::size_t k) { return beta[k] != 0; });
    if (!meets) return false;
  }
  return true;
}

std::vector<StratumDescriptor> strata(const ExponentSet& f_prime, std::size_t n) {
  check_disjoint(f_prime, n);
  std::vector<std::size_t> used;
  for (const auto& alpha : f_prime) {
    for (auto i : alpha.support()) used.push_back(i);
  }
  std::sort(used.begin(), used.end());
  if (used.size() > 20) throw InvalidArgument("too many variables to enumerate strata");

  std::vector<StratumDescriptor> result;
  const std::size_t patterns = std::size_t{1} << used.size();
  for (std::size_t mask = 0; mask < patterns; ++mask) {
    StratumDescriptor d;
    for (std::size_t k = 0; k < used.size(); ++k) {
      if (mask >> k & 1) d.zero_set.push_back(used[k]);
    }
    std::size_t nonvanishing_blocks = 0;
    bool all_singular = true;
    for (const auto& alpha : f_prime) {
      VariableSet block_zero;
      for (auto i : alpha.support()) {
        if (std::binary_search(d.zero_set.begin(), d.zero_set.end(), i)) block_zero.push_back(i);
      }
      if (block_zero.empty()) ++nonvanishing_blocks;
      if (!block_pattern_is_singular(alpha, block_zero)) all_singular = false;
    }
    if (nonvanishing_blocks > 0) {
      d.location = StratumLocation::Complement;
      d.meets_hypersurface = nonvanishing_blocks >= 2;
    } else {
      d.location = all_singular ? StratumLocation::Singular : StratumLocation::SmoothPart;
    }
    result.push_back(std::move(d));
  }
  std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
    if (a.zero_set.size() != b.zero_set.size()) return a.zero_set.size() < b.zero_set.size();
    return a.zero_set < b.zero_set;
  });
  return result;
}

Holonomicity is_holonomic(const ExponentSet& f_prime, std::size_t n) {
  check_disjoint(f_prime, n);
  Holonomicity h{true, 1, 1};
  for (const auto& alpha : f_prime) {
    const auto s = alpha.support();
    if (s.size() > 20) throw InvalidArgument("block too large to enumerate patterns");
    Natural singular = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << s.size()); ++mask) {
      VariableSet zero;
      for (std::size_t k = 0; k < s.size(); ++k) {
        if (mask >> k & 1) zero.push_back(s[k]);
      }
      if (block_pattern_is_singular(alpha, zero)) ++singular;
    }
    h.stratum_count *= Natural(1) << s.size();
    h.singular_count *= singular;
  }
  return h;
}

namespace {

std::vector<unsigned> primes_from(std::size_t skip, std::size_t count) {
  std::vector<unsigned> result;
  for (unsigned candidate = 2; result.size() < skip + count; ++candidate) {
    bool prime = true;
    for (unsigned d = 2; d * d <= candidate; ++d) {
      if (candidate % d == 0) {
        prime = false;
        break;
      }
    }
    if (prime) result.push_back(candidate);
  }
  return {result.begin() + static_cast<std::ptrdiff_t>(skip), result.end()};
}

}  // namespace

std::size_t tangent_span_dimension(const std::vector<SymbolicField>& fields, std::size_t n,
                                   const VariableSet& zero_set, std::size_t attempt) {
  const auto primes = primes_from(attempt * n, n);
  std::vector<Rational> point(n);
  for (std::size_t i = 0; i < n; ++i) {
    const bool zero = std::binary_search(zero_set.begin(), zero_set.end(), i);
    point[i] = zero ? Rational(0) : Rational(primes[i]);
  }
  RationalMatrix vectors;
  for (const auto& field : fields) {
    std::vector<Rational> row(n);
    for (const auto& [i, c] : field.components) row[i] = c.evaluate(point);
    vectors.push_back(std::move(row));
  }
  return rank(std::move(vectors));
}

std::size_t expected_span_dimension(const StratumDescriptor& descriptor, std::size_t n) {
  switch (descriptor.location) {
    case StratumLocation::Complement: return n;
    case StratumLocation::SmoothPart: return n - 1;
    case StratumLocation::Singular: return n - descriptor.zero_set.size();
  }
  return 0;
}

}  // namespace tsj
