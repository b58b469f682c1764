#pragma once

// Brute-force reference implementations. Nothing here calls the matching,
// reconstruction, hitting-set or Dickson code of the main path; the
// duplication is intentional so the two can be compared.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tsj/analysis.hpp"
#include "tsj/exponent.hpp"
#include "tsj/matroid.hpp"

namespace tsj::oracle {

/// Largest injective, edge-respecting partial map variable → generator, by
/// full enumeration. Throws InvalidArgument when μ > 8 or n > 8.
std::size_t brute_rank(const TransversalCover& cover);

struct CoverEnumeration {
  std::size_t minimum = 0;
  std::vector<VariableSet> minimal_covers;  // sorted by size, then lexicographically
};

/// Every subset of {0..n-1} tried by increasing cardinality. Throws
/// InvalidArgument when n > 12 or an edge is empty or out of range.
CoverEnumeration brute_min_cover(const std::vector<VariableSet>& edges, std::size_t n);

/// Min(⟨δ(G)⟩) recomputed by pairwise comparison.
ExponentSet brute_min_generators(std::size_t n, const ExponentSet& elements);

/// Min(⟨δ(F1)⟩) == Min(⟨δ(F2)⟩).
bool brute_min_equality(const SupportSet& f1, const SupportSet& f2);

struct CheckResult {
  std::string name;
  bool passed = false;
  bool skipped = false;
  std::string detail;
};

/// Cross-checks every claim of `report` that fits the size guards.
/// `seed` drives the sampled permutation checks.
std::vector<CheckResult> cross_check(const AnalysisReport& report, std::uint64_t seed,
                                     std::size_t permutation_samples = 8);

}  // namespace tsj::oracle
