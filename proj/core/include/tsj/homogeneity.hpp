#pragma once

// Quasihomogeneity weights: w ∈ Q_{>0}^n with ⟨w, α⟩ = 1 for every α of a
// support, so that χ = Σ w_i x_i ∂_i satisfies χ(f) = f.

#include <cstddef>
#include <optional>
#include <vector>

#include "tsj/exponent.hpp"
#include "tsj/numeric.hpp"

namespace tsj {

class WeightVector {
 public:
  /// Throws InvalidArgument unless every weight is strictly positive.
  explicit WeightVector(std::vector<Rational> weights);

  std::size_t dimension() const noexcept { return weights_.size(); }
  const Rational& operator[](std::size_t i) const { return weights_[i]; }
  const std::vector<Rational>& values() const noexcept { return weights_; }
  bool operator==(const WeightVector&) const = default;

 private:
  std::vector<Rational> weights_;
};

/// ⟨w, α⟩ = Σ w_i α_i.
Rational weighted_degree(const WeightVector& weights, const Exponent& alpha);

/// Exact check that ⟨w, α⟩ = target for all α.
bool certifies(const WeightVector& weights, const ExponentSet& elements, const Rational& target = 1);

/// Closed form for pairwise disjoint supports: w_i = 1/|α| for i ∈ [α], and
/// 1 on variables outside [F']. Throws InvalidSupport on overlapping supports
/// or a zero element.
WeightVector ts_weights(const ExponentSet& f_prime, std::size_t n);

/// Some positive solution of ⟨w, α⟩ = target over all α ∈ F, or nullopt.
///
/// The affine solution space is parametrized by Gaussian elimination; the
/// positivity constraints become strict inequalities in the free parameters,
/// which are decided by Fourier–Motzkin elimination. The returned point is
/// chosen by back-substitution, taking each parameter at the midpoint of its
/// open feasible interval (lower bound + target when unbounded above), so
/// scaling the target scales the answer.
std::optional<WeightVector> solve_weights(const SupportSet& support, const Rational& target = 1);

/// Integer weights with common weighted degree, obtained by clearing
/// denominators: ⟨integer weights, α⟩ = degree whenever ⟨w, α⟩ = 1.
struct IntegerWeights {
  std::vector<Natural> weights;
  Natural degree;
};

IntegerWeights clear_denominators(const WeightVector& weights);

}  // namespace tsj
