#pragma once

// The Jacobian matroid of a support F: the transversal matroid of the
// covering {Min(J_F) ∩ δ_i(F) : i ∈ [n]}, with rank computed as a maximum
// bipartite matching between variables and minimal generators.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "tsj/exponent.hpp"

namespace tsj {

/// Variable i may be assigned generator b, i.e. Min(J_F)[b] + e_i ∈ F.
struct CoverEdge {
  std::size_t variable;
  std::size_t generator;
  auto operator<=>(const CoverEdge&) const = default;
};

class TransversalCover {
 public:
  /// Generators must be distinct; edges must reference valid indices.
  TransversalCover(std::size_t n, std::vector<Exponent> generators, std::vector<CoverEdge> edges);

  std::size_t dimension() const noexcept { return n_; }
  std::size_t mu() const noexcept { return generators_.size(); }
  const std::vector<Exponent>& generators() const noexcept { return generators_; }
  const std::vector<CoverEdge>& edges() const noexcept { return edges_; }

  /// Generator indices adjacent to variable i, ascending.
  const std::vector<std::size_t>& generators_of(std::size_t variable) const;
  bool has_edge(std::size_t variable, std::size_t generator) const;
  std::optional<std::size_t> index_of(const Exponent& generator) const;

 private:
  std::size_t n_;
  std::vector<Exponent> generators_;
  std::vector<CoverEdge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

/// Injective partial map variable → generator index (ψ).
struct PartialTransversal {
  std::map<std::size_t, std::size_t> assignment;

  std::size_t rank() const noexcept { return assignment.size(); }
  /// Injective and edge-respecting for `cover`.
  bool is_valid_for(const TransversalCover& cover) const;
  bool operator==(const PartialTransversal&) const = default;
};

/// Requires F such that J_F is built from δ(F); generators in graded-lex order.
TransversalCover build_cover(const SupportSet& support);

/// Deterministic maximum matching (augmenting paths, variables in index
/// order, generators in graded-lex order).
PartialTransversal maximum_matching(const TransversalCover& cover);

/// rk M_F.
std::size_t rank(const TransversalCover& cover);

struct JacobianTest {
  TransversalCover cover;
  PartialTransversal matching;
  std::size_t rank;
  std::size_t mu;
  bool is_jacobian;
};

/// rk M_F = μ(J_F), with the cover and a maximum matching as evidence.
JacobianTest test_jacobian(const SupportSet& support);
bool is_jacobian(const SupportSet& support);

/// Extends ψ to a transversal of size μ if one exists. Throws
/// InvalidArgument when ψ itself is not a partial transversal of `cover`.
std::optional<PartialTransversal> extend_matching(const TransversalCover& cover,
                                                  const PartialTransversal& psi);

}  // namespace tsj
