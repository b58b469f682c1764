#pragma once

// Logarithmic derivations and the logarithmic stratification of
// Thom–Sebastiani hypersurfaces f = Σ_j x^{α_j} with disjoint supports.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "tsj/exponent.hpp"
#include "tsj/homogeneity.hpp"
#include "tsj/polynomial.hpp"

namespace tsj {

enum class FieldKind {
  Euler,       // χ = Σ w_i x_i ∂_i
  EulerTerm,   // x_i ∂_i − α_i χ
  Plain,       // ∂_i
  Koszul,      // (∂_j f) ∂_i − (∂_i f) ∂_j
};

std::string to_string(FieldKind kind);

/// A vector field Σ_i c_i ∂_i with polynomial coefficients.
struct SymbolicField {
  FieldKind kind;
  std::string label;
  std::map<std::size_t, Polynomial> components;

  bool is_zero() const;
  std::string to_string(std::span<const std::string> names = {}) const;
};

/// Applies the field to g: Σ_i c_i ∂g/∂x_i.
Polynomial apply(const SymbolicField& field, const Polynomial& g);

/// The Euler field for weights w.
SymbolicField euler_field(const WeightVector& weights);

/// Generators of ann(x^α): x_i ∂_i − α_i χ for i ∈ [α] and ∂_i otherwise,
/// with χ the Euler field of the single-block weights (1 on unused variables).
std::vector<SymbolicField> monomial_annihilator(const Exponent& alpha);

/// The global Euler field, per-block annihilator generators, Koszul fields
/// for all pairs of used variables and ∂_i for unused variables. Non-Euler
/// fields are scaled to a leading coefficient of one and deduplicated.
std::vector<SymbolicField> ts_log_generators(const ExponentSet& f_prime, std::size_t n);

/// Σ_{α∈F'} x^α.
Polynomial ts_sum(const ExponentSet& f_prime, std::size_t n);

enum class StratumLocation { Complement, SmoothPart, Singular };

std::string to_string(StratumLocation location);

/// The locus {x_i = 0 for i ∈ zero_set, x_i ≠ 0 for i ∈ [F'] \ zero_set};
/// coordinates outside [F'] are unconstrained.
struct StratumDescriptor {
  VariableSet zero_set;
  StratumLocation location;
  /// Set on Complement loci on which f does not vanish identically but
  /// still has zeros (two or more blocks are nowhere zero on the locus).
  bool meets_hypersurface = false;
  /// Connected components of the locus; (C*)^k is connected.
  std::size_t components = 1;

  bool operator==(const StratumDescriptor&) const = default;
};

/// All 2^|[F']| zero patterns, ordered by size of zero_set then
/// lexicographically. Throws InvalidSupport unless supports are disjoint,
/// InvalidArgument when |[F']| > 20.
std::vector<StratumDescriptor> strata(const ExponentSet& f_prime, std::size_t n);

/// Whether a block pattern S ⊆ [α] lies in Sing V(x^α): every δ_i(α) meets S.
bool block_pattern_is_singular(const Exponent& alpha, const VariableSet& zero_set);

struct Holonomicity {
  bool holonomic = false;
  Natural stratum_count;
  Natural singular_count;
};

/// Counts from the block structure: Π_j 2^|[α_j]| descriptors, and the
/// product of per-block singular pattern counts.
Holonomicity is_holonomic(const ExponentSet& f_prime, std::size_t n);

/// Dimension of the span of the fields evaluated at a point of the locus:
/// zero on zero_set, distinct primes elsewhere (shifted by `attempt`).
std::size_t tangent_span_dimension(const std::vector<SymbolicField>& fields, std::size_t n,
                                   const VariableSet& zero_set, std::size_t attempt = 0);

/// Expected dimension of the logarithmic stratum through a generic point of
/// the descriptor: n off the hypersurface, n − 1 on its smooth part,
/// n − |S| inside the singular locus.
std::size_t expected_span_dimension(const StratumDescriptor& descriptor, std::size_t n);

}  // namespace tsj
