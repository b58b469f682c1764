#include "tsj/analysis.hpp"

#include <algorithm>
#include <functional>

#include <json.hpp>

#include "tsj/error.hpp"

namespace tsj {

AnalysisInput input_from_polynomial(std::string_view text) {
  ParsedPolynomial parsed = parse_polynomial(text);
  SupportSet support = parsed.support();
  std::vector<std::string> names = parsed.variable_names;
  return AnalysisInput{std::string(text), std::move(names), std::move(parsed), std::move(support)};
}

AnalysisInput input_from_json(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("support")) {
    throw ParseError("JSON input must be an object with \"n\" and \"support\"", 0);
  }
  if (!doc["n"].is_number_unsigned() || doc["n"].get<std::uint64_t>() == 0 ||
      doc["n"].get<std::uint64_t>() > 4096) {
    throw ParseError("\"n\" must be a positive integer", 0);
  }
  const std::size_t n = doc["n"].get<std::size_t>();
  if (!doc["support"].is_array()) throw ParseError("\"support\" must be an array", 0);

  auto natural = [](const nlohmann::json& v) {
    if (v.is_number_unsigned()) return Natural(v.get<std::uint64_t>());
    if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return Natural(v.get<std::int64_t>());
    if (v.is_string()) {
      const auto s = v.get<std::string>();
      if (!s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        return Natural(s);
      }
    }
    throw ParseError("exponent entries must be natural numbers", 0);
  };

  ExponentSet elements;
  for (const auto& row : doc["support"]) {
    if (!row.is_array() || row.size() != n) {
      throw InvalidSupport("every support element must be an array of length n = " + std::to_string(n));
    }
    std::vector<Natural> entries;
    for (const auto& v : row) entries.push_back(natural(v));
    if (!elements.insert(Exponent(std::move(entries))).second) {
      throw InvalidSupport("duplicate support element");
    }
  }
  SupportSet support(n, std::move(elements));
  const auto last = json_text.find_last_not_of(" \t\r\n");
  return AnalysisInput{std::string(json_text.substr(0, last == std::string_view::npos ? 0 : last + 1)), default_variable_names(n), std::nullopt,
                       std::move(support)};
}

namespace {

// Strata are listed up to 2^12 patterns; tangent spans are rechecked up to 2^8.
constexpr std::size_t kDescriptorLimit = 12;
constexpr std::size_t kSpanCheckLimit = 8;

template <class F>
auto stage(const char* name, F&& body) -> decltype(body()) {
  const std::string prefix = std::string("[") + name + "] ";
  try {
    return body();
  } catch (const InternalError& e) {
    throw InternalError(prefix + e.what());
  } catch (const PreconditionViolated& e) {
    throw PreconditionViolated(prefix + e.what());
  } catch (const InvalidSupport& e) {
    throw InvalidSupport(prefix + e.what());
  } catch (const InvalidArgument& e) {
    throw InvalidArgument(prefix + e.what());
  }
}

void require(bool condition, const std::string& claim, std::vector<Certificate>& certificates) {
  if (!condition) throw InternalError("self-check failed: " + claim);
  certificates.push_back({claim, "verified"});
}

bool is_antichain(const ExponentSet& set) {
  for (const auto& a : set) {
    for (const auto& b : set) {
      if (a != b && a.divides(b)) return false;
    }
  }
  return true;
}

}  // namespace

AnalysisReport analyze(AnalysisInput input) {
  const SupportSet& F = input.support;
  const std::size_t n = F.dimension();

  JacobianTest test = stage("jacobian_matroid", [&] { return test_jacobian(F); });
  MonomialIdeal ideal = stage("exponent_core", [&] { return jacobian_ideal(F); });

  AnalysisReport report{.input = std::move(input),
                        .monomiality = std::nullopt,
                        .ideal = std::move(ideal),
                        .cover = std::move(test.cover),
                        .matching = std::move(test.matching),
                        .mu = test.mu,
                        .rank = test.rank,
                        .is_jacobian = test.is_jacobian,
                        .witness = {},
                        .ts_polynomial = {},
                        .weights = {},
                        .integer_weights = {},
                        .input_weights = {},
                        .classification = {},
                        .strata = {},
                        .certificates = {}};
  auto& certs = report.certificates;

  if (report.input.polynomial) {
    report.monomiality = syntactic_monomiality_certificate(*report.input.polynomial);
    certs.push_back({"Jacobian ideal generated by monomials in the given coordinates",
                     *report.monomiality == MonomialityCertificate::Certified
                         ? "verified"
                         : "unknown: results are support-level only"});
  } else {
    certs.push_back({"Jacobian ideal generated by monomials in the given coordinates",
                     "support-level: no coefficients given"});
  }

  const SupportSet& support = report.input.support;
  const ExponentSet derived = derive_all(support);
  require(is_antichain(report.ideal.generators()) &&
              std::all_of(derived.begin(), derived.end(),
                          [&](const Exponent& g) { return contains(report.ideal, g); }),
          "Min(J_F) is an antichain generating delta(F)", certs);
  require(extended_generators(support) == report.ideal,
          "extended Jacobian ideal has the same minimal generators", certs);
  require(report.matching.is_valid_for(report.cover) && report.rank <= std::min(n, report.mu),
          "maximum matching is a partial transversal with rank <= min(n, mu)", certs);

  if (auto w = stage("homogeneity", [&] { return solve_weights(support); })) {
    require(certifies(*w, support.elements()), "input weights give weighted degree 1 on F", certs);
    report.input_weights = std::move(w);
  }

  if (!report.is_jacobian) return report;

  TSWitness witness = stage("ts_reconstruction", [&] { return reconstruct(support); });
  if (auto defect = witness_defect(support, witness)) {
    throw InternalError("[ts_reconstruction] invalid witness: " + *defect);
  }
  certs.push_back({"F' has disjoint supports, delta(F') is in Min(J_F), Min(J_F') = Min(J_F)",
                   "verified"});
  Natural last_degree = -1;
  for (const auto& step : witness.steps) {
    if (step.generator_degree < last_degree) {
      throw InternalError("[ts_reconstruction] generator degrees decreased");
    }
    last_degree = step.generator_degree;
  }
  const ExponentSet f_prime = witness.f_prime_set();
  report.ts_polynomial = ts_polynomial(witness, report.input.variable_names);

  WeightVector weights = stage("homogeneity", [&] { return ts_weights(f_prime, n); });
  require(certifies(weights, f_prime), "Euler weights give weighted degree 1 on F'", certs);
  report.integer_weights = clear_denominators(weights);
  report.weights = std::move(weights);

  report.classification = stage("classification", [&] { return classify(support, witness); });
  const auto& c = *report.classification;
  require(!c.is_brieskorn_pham || c.is_thom_sebastiani, "Brieskorn-Pham implies Thom-Sebastiani",
          certs);
  require(!c.is_reduced_normal_crossing || (c.is_radical && c.height == std::size_t{2}),
          "reduced normal crossing implies radical of height 2", certs);
  if (c.is_radical && c.height == std::size_t{2}) {
    require(c.is_reduced_normal_crossing,
            "radical of height 2 yields x_i^2 + x_j^2 or a squarefree monomial", certs);
  }
  if (c.is_isolated) {
    require(c.bp_after_quadratic_normalization,
            "isolated singularity is Brieskorn-Pham after quadratic normalization", certs);
  }

  StrataSummary summary = stage("log_derivations", [&] {
    StrataSummary s;
    s.holonomicity = is_holonomic(f_prime, n);
    s.generators = ts_log_generators(f_prime, n);
    std::size_t used = 0;
    for (const auto& alpha : f_prime) used += alpha.support().size();
    if (used <= kDescriptorLimit) s.descriptors = strata(f_prime, n);
    return s;
  });

  const Polynomial f = ts_sum(f_prime, n);
  bool preserved = true;
  bool koszul_on_singular_locus = true;
  for (const auto& field : summary.generators) {
    const Polynomial image = apply(field, f);
    if (field.kind == FieldKind::Euler) {
      preserved = preserved && image == f;
    } else {
      preserved = preserved && image.is_zero();
    }
    if (field.kind == FieldKind::Koszul) {
      for (const auto& [i, coefficient] : field.components) {
        for (const auto& [alpha, value] : coefficient.terms()) {
          koszul_on_singular_locus = koszul_on_singular_locus && contains(report.ideal, alpha);
        }
      }
    }
  }
  require(preserved, "chi(f') = f' and every other generator annihilates f'", certs);
  require(koszul_on_singular_locus, "Koszul fields vanish on the singular locus", certs);

  std::size_t used = 0;
  for (const auto& alpha : f_prime) used += alpha.support().size();
  if (!summary.descriptors.empty()) {
    Natural singular = 0;
    for (const auto& d : summary.descriptors) {
      if (d.location == StratumLocation::Singular) ++singular;
    }
    require(Natural(summary.descriptors.size()) == summary.holonomicity.stratum_count &&
                singular == summary.holonomicity.singular_count,
            "descriptor counts match the blockwise product", certs);
  } else {
    certs.push_back({"descriptor counts match the blockwise product",
                     "skipped: more than " + std::to_string(kDescriptorLimit) + " variables in [F']"});
  }
  if (!summary.descriptors.empty() && used <= kSpanCheckLimit) {
    bool spans_match = true;
    for (const auto& d : summary.descriptors) {
      const std::size_t expected = expected_span_dimension(d, n);
      std::size_t best = 0;
      for (std::size_t attempt = 0; attempt < 3 && best != expected; ++attempt) {
        best = std::max(best, tangent_span_dimension(summary.generators, n, d.zero_set, attempt));
      }
      spans_match = spans_match && best == expected;
    }
    require(spans_match, "tangent spans of logarithmic generators match stratum dimensions", certs);
  } else {
    certs.push_back({"tangent spans of logarithmic generators match stratum dimensions",
                     "skipped: more than " + std::to_string(kSpanCheckLimit) + " variables in [F']"});
  }
  require(summary.holonomicity.holonomic, "finitely many logarithmic strata", certs);
  report.strata = std::move(summary);
  report.witness = std::move(witness);
  return report;
}

}  // namespace tsj
