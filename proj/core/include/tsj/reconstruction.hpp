#pragma once

// Reconstruction of a Thom–Sebastiani support F' ⊆ F with J_{F'} = J_F from
// a support whose semigroup ideal is Jacobian.
//
// Minimal generators are enumerated by increasing degree. Each step commits
// an element α ∈ F whose support avoids the variables committed so far and
// whose derivatives δ(α) are all new, still unassigned minimal generators of
// the current minimal degree; ψ is extended by i ↦ δ_i(α). A step is only
// taken if the enlarged ψ still extends to a full transversal of the
// Jacobian matroid. Dead ends are undone by chronological backtracking.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tsj/exponent.hpp"
#include "tsj/matroid.hpp"

namespace tsj {

struct ReconstructionStep {
  Exponent chosen;
  /// The committed variables [α], ascending.
  VariableSet variables;
  /// δ(α), all of degree |α| − 1.
  ExponentSet new_generators;
  Natural generator_degree;
};

struct TSWitness {
  std::size_t n = 0;
  /// F' in commit order.
  std::vector<Exponent> f_prime;
  /// ψ: variable ↦ minimal generator.
  std::map<std::size_t, Exponent> psi;
  /// σ as a sequence: position p of the reordered coordinates holds the
  /// original variable order[p]. Committed supports come first.
  std::vector<std::size_t> order;
  std::vector<ReconstructionStep> steps;
  /// Number of undone commits during the search.
  std::size_t backtracks = 0;

  ExponentSet f_prime_set() const { return ExponentSet(f_prime.begin(), f_prime.end()); }
};

/// Throws PreconditionViolated when J_F is not Jacobian, InternalError when
/// the search exhausts all choices. The rank test does not rule that out:
/// F = {xy, xz, yz} has rank = mu = 3 but no subset with disjoint supports.
TSWitness reconstruct(const SupportSet& support);

/// The first violated witness invariant, or nullopt when the witness is valid.
std::optional<std::string> witness_defect(const SupportSet& support, const TSWitness& witness);
bool verify_witness(const SupportSet& support, const TSWitness& witness);

/// Σ_{α∈F'} x^α with unit coefficients, terms and variables listed in σ order.
std::string ts_polynomial(const TSWitness& witness, std::span<const std::string> names = {});

}  // namespace tsj
