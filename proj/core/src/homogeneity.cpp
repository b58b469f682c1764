#include "tsj/homogeneity.hpp"

#include <algorithm>
#include <set>

#include "tsj/error.hpp"

namespace tsj {

WeightVector::WeightVector(std::vector<Rational> weights) : weights_(std::move(weights)) {
  for (const auto& w : weights_) {
    if (w <= 0) throw InvalidArgument("weights must be strictly positive");
  }
}

Rational weighted_degree(const WeightVector& weights, const Exponent& alpha) {
  if (weights.dimension() != alpha.dimension()) {
    throw InvalidArgument("weight vector and exponent have different lengths");
  }
  Rational total = 0;
  for (std::size_t i = 0; i < alpha.dimension(); ++i) {
    if (alpha[i] != 0) total += weights[i] * Rational(alpha[i]);
  }
  return total;
}

bool certifies(const WeightVector& weights, const ExponentSet& elements, const Rational& target) {
  return std::all_of(elements.begin(), elements.end(), [&](const Exponent& alpha) {
    return weighted_degree(weights, alpha) == target;
  });
}

WeightVector ts_weights(const ExponentSet& f_prime, std::size_t n) {
  std::vector<Rational> weights(n, Rational(1));
  std::vector<bool> used(n, false);
  for (const auto& alpha : f_prime) {
    if (alpha.dimension() != n) throw InvalidSupport("exponent dimension mismatch");
    if (alpha.is_zero()) throw InvalidSupport("zero exponent in Thom-Sebastiani support");
    const Rational w(Natural(1), alpha.degree());
    for (auto i : alpha.support()) {
      if (used[i]) throw InvalidSupport("supports overlap in x" + std::to_string(i + 1));
      used[i] = true;
      weights[i] = w;
    }
  }
  return WeightVector(std::move(weights));
}

namespace {

// a · t < b over the free parameters.
struct StrictInequality {
  std::vector<Rational> a;
  Rational b;

  // Scale so the first nonzero coefficient has magnitude one; makes
  // duplicate constraints compare equal.
  void normalize() {
    auto it = std::find_if(a.begin(), a.end(), [](const Rational& x) { return x != 0; });
    if (it == a.end()) return;
    const Rational scale = *it < 0 ? Rational(-*it) : *it;
    for (auto& x : a) x /= scale;
    b /= scale;
  }

  bool operator<(const StrictInequality& other) const {
    if (a != other.a) return a < other.a;
    return b < other.b;
  }
};

using System = std::set<StrictInequality>;

System eliminate(const System& system, std::size_t var) {
  System result;
  std::vector<const StrictInequality*> upper, lower;
  for (const auto& c : system) {
    if (c.a[var] > 0) {
      upper.push_back(&c);
    } else if (c.a[var] < 0) {
      lower.push_back(&c);
    } else {
      result.insert(c);
    }
  }
  // Positive combination cancelling `var`; strictness is preserved.
  for (const auto* u : upper) {
    for (const auto* l : lower) {
      const Rational pu = u->a[var];
      const Rational pl = -l->a[var];
      StrictInequality combined{std::vector<Rational>(u->a.size()), pl * u->b + pu * l->b};
      for (std::size_t j = 0; j < combined.a.size(); ++j) {
        combined.a[j] = pl * u->a[j] + pu * l->a[j];
      }
      combined.a[var] = 0;
      combined.normalize();
      result.insert(std::move(combined));
    }
  }
  return result;
}

}  // namespace

std::optional<WeightVector> solve_weights(const SupportSet& support, const Rational& target) {
  if (target <= 0) throw InvalidArgument("target weighted degree must be positive");
  const std::size_t n = support.dimension();

  RationalMatrix system;
  for (const auto& alpha : support) {
    std::vector<Rational> row(n + 1);
    for (std::size_t i = 0; i < n; ++i) row[i] = Rational(alpha[i]);
    row[n] = target;
    system.push_back(std::move(row));
  }
  const auto pivots = row_reduce(system);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;  // 0 = nonzero

  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_columns;
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_pivot[i]) free_columns.push_back(i);
  }
  const std::size_t k = free_columns.size();

  // w_p = rhs - Σ_q R[p][q] t_q for pivots, w_q = t_q for free columns.
  System constraints;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    StrictInequality c{std::vector<Rational>(k), system[r][n]};
    for (std::size_t j = 0; j < k; ++j) c.a[j] = system[r][free_columns[j]];
    c.normalize();
    constraints.insert(std::move(c));
  }
  for (std::size_t j = 0; j < k; ++j) {
    StrictInequality c{std::vector<Rational>(k), 0};
    c.a[j] = -1;
    constraints.insert(std::move(c));
  }

  // levels[l] only involves t_0 .. t_{l-1}.
  std::vector<System> levels(k + 1);
  levels[k] = std::move(constraints);
  for (std::size_t l = k; l > 0; --l) levels[l - 1] = eliminate(levels[l], l - 1);
  for (const auto& c : levels[0]) {
    if (!(c.b > 0)) return std::nullopt;
  }

  std::vector<Rational> t(k);
  for (std::size_t l = 1; l <= k; ++l) {
    const std::size_t var = l - 1;
    std::optional<Rational> lo, hi;
    for (const auto& c : levels[l]) {
      if (c.a[var] == 0) continue;
      Rational slack = c.b;
      for (std::size_t j = 0; j < var; ++j) slack -= c.a[j] * t[j];
      const Rational bound = slack / c.a[var];
      if (c.a[var] > 0) {
        if (!hi || bound < *hi) hi = bound;
      } else {
        if (!lo || bound > *lo) lo = bound;
      }
    }
    if (!lo) throw InternalError("free weight parameter without positivity bound");
    if (hi) {
      if (!(*lo < *hi)) throw InternalError("Fourier-Motzkin back-substitution found empty interval");
      t[var] = (*lo + *hi) / 2;
    } else {
      t[var] = *lo + target;
    }
  }

  std::vector<Rational> weights(n);
  for (std::size_t j = 0; j < k; ++j) weights[free_columns[j]] = t[j];
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    Rational value = system[r][n];
    for (std::size_t j = 0; j < k; ++j) value -= system[r][free_columns[j]] * t[j];
    weights[pivots[r]] = value;
  }
  WeightVector result(std::move(weights));
  if (!certifies(result, support.elements(), target)) {
    throw InternalError("weight solution fails its own certificate");
  }
  return result;
}

IntegerWeights clear_denominators(const WeightVector& weights) {
  Natural common = 1;
  for (const auto& w : weights.values()) {
    common = boost::multiprecision::lcm(common, Natural(boost::multiprecision::denominator(w)));
  }
  IntegerWeights result{{}, common};
  for (const auto& w : weights.values()) {
    result.weights.push_back(Natural(boost::multiprecision::numerator(w * Rational(common))));
  }
  return result;
}

}  // namespace tsj
