#pragma once

// Exponent vectors in N^n, finite supports and monomial (semigroup) ideals.
//
// Variable indices are zero-based throughout the library; printed output
// uses x1..xn.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "tsj/numeric.hpp"

namespace tsj {

using VariableSet = std::vector<std::size_t>;  // sorted, zero-based

class Exponent {
 public:
  Exponent() = default;
  explicit Exponent(std::vector<Natural> entries);
  Exponent(std::initializer_list<unsigned long long> entries);

  static Exponent zero(std::size_t n);
  static Exponent unit(std::size_t n, std::size_t i);

  std::size_t dimension() const noexcept { return entries_.size(); }
  const Natural& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Natural> entries() const noexcept { return entries_; }

  /// Indices with nonzero entry.
  VariableSet support() const;
  Natural degree() const;
  bool is_zero() const;
  bool is_squarefree() const;

  /// Componentwise <=, i.e. x^this divides x^other.
  bool divides(const Exponent& other) const;

  Exponent operator+(const Exponent& other) const;

  /// Graded lexicographic: total degree first, then entries left to right.
  std::strong_ordering operator<=>(const Exponent& other) const;
  bool operator==(const Exponent& other) const = default;

 private:
  std::vector<Natural> entries_;
};

/// Exponent sets are kept sorted in graded-lex order.
using ExponentSet = std::set<Exponent>;

std::string to_string(const Exponent& alpha);
std::string to_string(const ExponentSet& set);

/// Applies a variable relabeling: result[perm[i]] = alpha[i].
Exponent permute(const Exponent& alpha, std::span<const std::size_t> perm);

/// F: a nonempty finite set of nonzero exponents of a common dimension n >= 1.
class SupportSet {
 public:
  /// Throws InvalidSupport when empty, when 0 ∈ F or on a dimension mismatch.
  SupportSet(std::size_t n, ExponentSet elements);
  SupportSet(std::size_t n, std::initializer_list<Exponent> elements);

  std::size_t dimension() const noexcept { return n_; }
  const ExponentSet& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }
  bool contains(const Exponent& alpha) const { return elements_.contains(alpha); }

  /// [F], the union of the supports of the elements.
  VariableSet variables() const;

 private:
  std::size_t n_;
  ExponentSet elements_;
};

/// A semigroup ideal of (N^n, +) held by its minimal generators Min(I).
class MonomialIdeal {
 public:
  /// Reduces `generators` to its minimal antichain.
  MonomialIdeal(std::size_t n, const ExponentSet& generators);

  std::size_t dimension() const noexcept { return n_; }
  const ExponentSet& generators() const noexcept { return min_gens_; }
  /// μ(I)
  std::size_t mu() const noexcept { return min_gens_.size(); }
  bool is_unit() const;
  bool is_zero() const noexcept { return min_gens_.empty(); }

  bool operator==(const MonomialIdeal& other) const = default;

 private:
  std::size_t n_;
  ExponentSet min_gens_;
};

/// δ_i(α) = α − e_i, or nullopt when α_i = 0.
std::optional<Exponent> partial(const Exponent& alpha, std::size_t i);

/// δ(α) as the map i ↦ δ_i(α) over i ∈ [α].
std::vector<std::pair<std::size_t, Exponent>> derivatives(const Exponent& alpha);

/// δ(F) = ⋃_i δ_i(F).
ExponentSet derive_all(const SupportSet& support);
ExponentSet derive_all(std::size_t n, const ExponentSet& elements);

/// Min(⟨G⟩) by Dickson filtering.
MonomialIdeal minimal_generators(std::size_t n, const ExponentSet& generators);

/// α ∈ I.
bool contains(const MonomialIdeal& ideal, const Exponent& alpha);

/// J_F = ⟨δ(F)⟩.
MonomialIdeal jacobian_ideal(const SupportSet& support);

/// Min(⟨δ(F) ∪ F⟩); equals jacobian_ideal(F) since α = e_i + δ_i(α).
MonomialIdeal extended_generators(const SupportSet& support);

}  // namespace tsj
