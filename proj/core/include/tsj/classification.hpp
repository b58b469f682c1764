#pragma once

// Structural classification of a support, its Jacobian ideal and its
// Thom–Sebastiani representative.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tsj/exponent.hpp"
#include "tsj/reconstruction.hpp"

namespace tsj {

/// Pairwise disjoint supports.
bool is_thom_sebastiani(const SupportSet& support);
bool is_thom_sebastiani(const ExponentSet& elements);

/// F = { m_i e_i : i ∈ [n] } with every m_i ≥ 1.
bool is_brieskorn_pham(const SupportSet& support);

struct QuadraticNormalization {
  /// Zero-based pairs (i, j), i < j, whose x_i x_j became x_i^2 + x_j^2.
  std::set<std::pair<std::size_t, std::size_t>> replaced_pairs;
  ExponentSet new_support;
};

/// Replaces every e_i + e_j (i ≠ j) by 2e_i and 2e_j. Throws
/// PreconditionViolated for a support that is not Thom–Sebastiani.
QuadraticNormalization normalize_quadratics(const SupportSet& support);
QuadraticNormalization normalize_quadratics(std::size_t n, const ExponentSet& elements);

/// m-primary: every variable has a pure power m e_i (m ≥ 1) among the
/// generators. The unit and zero ideals are not isolated.
bool is_isolated(const MonomialIdeal& ideal);

/// All minimal generators squarefree.
bool is_radical(const MonomialIdeal& ideal);

/// √I: the minimal squarefree generators x^[β].
MonomialIdeal radical(const MonomialIdeal& ideal);

/// Minimum number of variables meeting every generator support. Throws
/// InvalidArgument for the unit or the zero ideal.
std::size_t height(const MonomialIdeal& ideal);

/// Inclusion-minimal variable covers of the generator supports, i.e. the
/// minimal primes ⟨x_i : i ∈ S⟩. Throws PreconditionViolated unless radical.
std::vector<VariableSet> minimal_primes(const MonomialIdeal& ideal);

struct ClassificationReport {
  bool is_thom_sebastiani = false;       // input support
  bool is_brieskorn_pham = false;        // input support
  bool is_monomial_single = false;       // representative is one monomial
  bool bp_after_quadratic_normalization = false;
  bool is_isolated = false;
  bool is_radical = false;
  std::optional<std::size_t> height;     // absent for the unit ideal
  std::vector<VariableSet> minimal_primes;
  bool minimal_primes_equidimensional_per_block = false;
  bool is_reduced_normal_crossing = false;
  bool representative_is_squarefree = false;
  std::string squarefree_part_note;
  ExponentSet representative;
  QuadraticNormalization normalized;
  /// Named rules that produced conclusions, in evaluation order.
  std::vector<std::string> rules;
  std::vector<std::string> notes;
};

/// Throws PreconditionViolated when J_F is not Jacobian.
ClassificationReport classify(const SupportSet& support);
ClassificationReport classify(const SupportSet& support, const TSWitness& witness);

}  // namespace tsj
