#pragma once

// The end-to-end pipeline: support → Jacobian matroid → reconstruction →
// weights → classification → logarithmic strata, with every reported claim
// re-checked before it is included.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tsj/classification.hpp"
#include "tsj/exponent.hpp"
#include "tsj/homogeneity.hpp"
#include "tsj/log_derivations.hpp"
#include "tsj/matroid.hpp"
#include "tsj/parser.hpp"
#include "tsj/reconstruction.hpp"

namespace tsj {

struct AnalysisInput {
  std::string source;
  std::vector<std::string> variable_names;
  std::optional<ParsedPolynomial> polynomial;  // absent for JSON supports
  SupportSet support;

  std::size_t dimension() const { return support.dimension(); }
};

AnalysisInput input_from_polynomial(std::string_view text);

/// {"n": 3, "support": [[2,0,0],[0,2,1]]}; entries may be integers or
/// decimal strings. Throws ParseError / InvalidSupport.
AnalysisInput input_from_json(std::string_view json_text);

struct Certificate {
  std::string claim;
  std::string status;  // "verified", "skipped: ...", "support-level", ...
};

struct StrataSummary {
  Holonomicity holonomicity;
  std::vector<StratumDescriptor> descriptors;  // empty when too large to list
  std::vector<SymbolicField> generators;
};

struct AnalysisReport {
  AnalysisInput input;
  std::optional<MonomialityCertificate> monomiality;
  MonomialIdeal ideal;
  TransversalCover cover;
  PartialTransversal matching;
  std::size_t mu = 0;
  std::size_t rank = 0;
  bool is_jacobian = false;

  std::optional<TSWitness> witness;
  std::optional<std::string> ts_polynomial;
  std::optional<WeightVector> weights;
  std::optional<IntegerWeights> integer_weights;
  /// Weights for the original support, when it is quasihomogeneous.
  std::optional<WeightVector> input_weights;
  std::optional<ClassificationReport> classification;
  std::optional<StrataSummary> strata;

  std::vector<Certificate> certificates;
};

/// Runs the pipeline. Errors from a stage are rethrown with the stage name
/// prefixed; a failed self-check raises InternalError.
AnalysisReport analyze(AnalysisInput input);

}  // namespace tsj
