#include <limits>
#include <sstream>

#include <json.hpp>

#include "tsj/report.hpp"

namespace tsj {

namespace {

using Json = nlohmann::ordered_json;

Json natural_json(const Natural& value) {
  if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max()) {
    return Json(value.convert_to<std::uint64_t>());
  }
  return Json(value.str());
}

Json exponent_json(const Exponent& alpha) {
  Json row = Json::array();
  for (const auto& e : alpha.entries()) row.push_back(natural_json(e));
  return row;
}

template <class Range>
Json exponents_json(const Range& range) {
  Json out = Json::array();
  for (const auto& alpha : range) out.push_back(exponent_json(alpha));
  return out;
}

Json variables_json(const VariableSet& vars) {
  Json out = Json::array();
  for (auto v : vars) out.push_back(v + 1);
  return out;
}

Json weights_json(const WeightVector& w) {
  Json out = Json::array();
  for (const auto& x : w.values()) out.push_back(to_string(x));
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string weights_text(const WeightVector& w) {
  std::vector<std::string> parts;
  for (const auto& x : w.values()) parts.push_back(to_string(x));
  return "(" + join(parts, ", ") + ")";
}

std::string variables_text(const VariableSet& vars, const std::vector<std::string>& names) {
  std::vector<std::string> parts;
  for (auto v : vars) parts.push_back(names[v]);
  return "{" + join(parts, ", ") + "}";
}

Json input_json(const AnalysisReport& r) {
  Json in;
  in["source"] = r.input.source;
  in["n"] = r.input.dimension();
  in["variables"] = r.input.variable_names;
  in["support"] = exponents_json(r.input.support.elements());
  if (r.input.polynomial) {
    Json coefficients = Json::array();
    for (const auto& [alpha, c] : r.input.polynomial->polynomial.terms()) {
      coefficients.push_back(Json{{"exponent", exponent_json(alpha)}, {"coefficient", to_string(c)}});
    }
    in["terms"] = std::move(coefficients);
  }
  return in;
}

Json witness_json(const AnalysisReport& r, bool trace) {
  const TSWitness& w = *r.witness;
  Json out;
  out["f_prime"] = exponents_json(w.f_prime);
  Json psi = Json::array();
  for (const auto& [variable, generator] : w.psi) {
    psi.push_back(Json{{"variable", variable + 1}, {"generator", exponent_json(generator)}});
  }
  out["psi"] = std::move(psi);
  Json order = Json::array();
  for (auto v : w.order) order.push_back(v + 1);
  out["sigma"] = std::move(order);
  out["polynomial"] = *r.ts_polynomial;
  out["backtracks"] = w.backtracks;
  if (trace) {
    Json steps = Json::array();
    for (const auto& s : w.steps) {
      steps.push_back(Json{{"chosen", exponent_json(s.chosen)},
                           {"variables", variables_json(s.variables)},
                           {"new_generators", exponents_json(s.new_generators)},
                           {"generator_degree", natural_json(s.generator_degree)}});
    }
    out["steps"] = std::move(steps);
  }
  return out;
}

Json classification_object(const ClassificationReport& c) {
  Json out;
  out["is_thom_sebastiani"] = c.is_thom_sebastiani;
  out["is_brieskorn_pham"] = c.is_brieskorn_pham;
  out["is_monomial_single"] = c.is_monomial_single;
  out["bp_after_quadratic_normalization"] = c.bp_after_quadratic_normalization;
  out["is_isolated"] = c.is_isolated;
  out["is_radical"] = c.is_radical;
  out["height"] = c.height ? Json(*c.height) : Json(nullptr);
  Json primes = Json::array();
  for (const auto& p : c.minimal_primes) primes.push_back(variables_json(p));
  out["minimal_primes"] = std::move(primes);
  out["minimal_primes_equidimensional_per_block"] = c.minimal_primes_equidimensional_per_block;
  out["is_reduced_normal_crossing"] = c.is_reduced_normal_crossing;
  out["representative"] = exponents_json(c.representative);
  Json pairs = Json::array();
  for (const auto& [i, j] : c.normalized.replaced_pairs) pairs.push_back(Json::array({i + 1, j + 1}));
  out["normalization"] = Json{{"replaced_pairs", std::move(pairs)},
                              {"new_support", exponents_json(c.normalized.new_support)}};
  out["representative_is_squarefree"] = c.representative_is_squarefree;
  out["squarefree_part_note"] = c.squarefree_part_note;
  out["rules"] = c.rules;
  out["notes"] = c.notes;
  return out;
}

Json strata_object(const AnalysisReport& r, bool detail) {
  const StrataSummary& s = *r.strata;
  Json out;
  out["holonomic"] = s.holonomicity.holonomic;
  out["stratum_count"] = natural_json(s.holonomicity.stratum_count);
  out["singular_count"] = natural_json(s.holonomicity.singular_count);
  if (detail) {
    Json descriptors = Json::array();
    for (const auto& d : s.descriptors) {
      Json entry;
      entry["zero_set"] = variables_json(d.zero_set);
      entry["location"] = to_string(d.location);
      entry["meets_hypersurface"] = d.meets_hypersurface;
      entry["components"] = d.components;
      descriptors.push_back(std::move(entry));
    }
    out["descriptors"] = std::move(descriptors);
    Json generators = Json::array();
    for (const auto& g : s.generators) {
      generators.push_back(Json{{"kind", to_string(g.kind)},
                                {"label", g.label},
                                {"field", g.to_string(r.input.variable_names)}});
    }
    out["generators"] = std::move(generators);
  }
  return out;
}

Json header(const AnalysisReport& r) {
  Json doc;
  doc["schema"] = "tsj/1";
  doc["input"] = input_json(r);
  doc["min_gens"] = exponents_json(r.ideal.generators());
  doc["mu"] = r.mu;
  doc["rank"] = r.rank;
  doc["is_jacobian"] = r.is_jacobian;
  return doc;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

std::string header_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "input:          " << r.input.source << "\n"
      << "variables:      " << join(r.input.variable_names, ", ") << "\n"
      << "support F:      " << to_string(r.input.support.elements()) << "\n"
      << "Min(J_F):       " << to_string(r.ideal.generators()) << "\n"
      << "mu:             " << r.mu << "\n"
      << "rank:           " << r.rank << "\n"
      << "jacobian:       " << (r.is_jacobian ? "yes" : "no") << "\n";
  return out.str();
}

std::string witness_text(const AnalysisReport& r, bool trace) {
  const TSWitness& w = *r.witness;
  const auto& names = r.input.variable_names;
  std::ostringstream out;
  out << "representative: " << *r.ts_polynomial << "\n"
      << "F':             " << to_string(w.f_prime_set()) << "\n"
      << "psi:            ";
  bool first = true;
  for (const auto& [variable, generator] : w.psi) {
    out << (first ? "" : ", ") << names[variable] << " -> " << to_string(generator);
    first = false;
  }
  std::vector<std::string> order;
  for (auto v : w.order) order.push_back(names[v]);
  out << "\nsigma:          " << join(order, ", ") << "\n";
  if (trace) {
    std::size_t k = 0;
    for (const auto& s : w.steps) {
      out << "  step " << ++k << ": alpha = " << to_string(s.chosen) << " on "
          << variables_text(s.variables, names) << ", new generators "
          << to_string(s.new_generators) << " (degree " << s.generator_degree << ")\n";
    }
    out << "  backtracks: " << w.backtracks << "\n";
  }
  return out.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string classification_body(const AnalysisReport& r) {
  const auto& c = *r.classification;
  const auto& names = r.input.variable_names;
  std::ostringstream out;
  std::vector<std::string> primes;
  for (const auto& p : c.minimal_primes) primes.push_back(variables_text(p, names));
  out << "thom-sebastiani:     " << yes_no(c.is_thom_sebastiani) << "\n"
      << "brieskorn-pham:      " << yes_no(c.is_brieskorn_pham) << "\n"
      << "single monomial:     " << yes_no(c.is_monomial_single) << "\n"
      << "bp after quadratics: " << yes_no(c.bp_after_quadratic_normalization) << "\n"
      << "isolated:            " << yes_no(c.is_isolated) << "\n"
      << "radical:             " << yes_no(c.is_radical) << "\n"
      << "height:              " << (c.height ? std::to_string(*c.height) : "undefined") << "\n"
      << "minimal primes:      " << join(primes, " ") << "\n"
      << "reduced normal cr.:  " << yes_no(c.is_reduced_normal_crossing) << "\n"
      << "squarefree:          " << c.squarefree_part_note << "\n";
  for (const auto& rule : c.rules) out << "rule:                " << rule << "\n";
  for (const auto& note : c.notes) out << "note:                " << note << "\n";
  return out.str();
}

std::string strata_body(const AnalysisReport& r, bool detail) {
  const auto& s = *r.strata;
  const auto& names = r.input.variable_names;
  std::ostringstream out;
  out << "strata:         " << s.holonomicity.stratum_count << " (" << s.holonomicity.singular_count
      << " singular)\n"
      << "holonomic:      " << yes_no(s.holonomicity.holonomic) << "\n";
  if (detail) {
    for (const auto& d : s.descriptors) {
      out << "  " << to_string(d.location) << "  zero on " << variables_text(d.zero_set, names)
          << (d.meets_hypersurface ? "  (meets the hypersurface)" : "") << "\n";
    }
    for (const auto& g : s.generators) {
      out << "  [" << to_string(g.kind) << "] " << g.to_string(names) << "\n";
    }
  }
  return out.str();
}

}  // namespace

std::string analysis_json(const AnalysisReport& r, const RenderOptions& options) {
  Json doc = header(r);
  if (r.monomiality) doc["monomiality"] = to_string(*r.monomiality);
  doc["input_weights"] = r.input_weights ? weights_json(*r.input_weights) : Json(nullptr);
  if (r.is_jacobian) {
    doc["ts_witness"] = witness_json(r, options.trace);
    doc["ts_polynomial"] = *r.ts_polynomial;
    doc["weights"] = weights_json(*r.weights);
    if (options.integer_weights) {
      Json ints = Json::array();
      for (const auto& w : r.integer_weights->weights) ints.push_back(natural_json(w));
      doc["integer_weights"] = Json{{"weights", std::move(ints)},
                                    {"degree", natural_json(r.integer_weights->degree)}};
    }
    doc["classification"] = classification_object(*r.classification);
    doc["strata"] = strata_object(r, options.strata_detail);
  }
  Json certs = Json::array();
  for (const auto& c : r.certificates) certs.push_back(Json{{"claim", c.claim}, {"status", c.status}});
  doc["certificates"] = std::move(certs);
  return dump(doc);
}

std::string analysis_text(const AnalysisReport& r, const RenderOptions& options) {
  std::ostringstream out;
  out << header_text(r);
  if (r.monomiality) out << "monomiality:    " << to_string(*r.monomiality) << "\n";
  out << "input weights:  " << (r.input_weights ? weights_text(*r.input_weights) : "none (not quasihomogeneous)")
      << "\n";
  if (r.is_jacobian) {
    out << witness_text(r, options.trace);
    out << "weights:        " << weights_text(*r.weights) << "\n";
    if (options.integer_weights) {
      std::vector<std::string> ints;
      for (const auto& w : r.integer_weights->weights) ints.push_back(w.str());
      out << "integer weights: (" << join(ints, ", ") << ") of degree " << r.integer_weights->degree
          << "\n";
    }
    out << classification_body(r);
    out << strata_body(r, options.strata_detail);
  }
  for (const auto& c : r.certificates) out << "check: " << c.claim << ": " << c.status << "\n";
  return out.str();
}

std::string reconstruction_json(const AnalysisReport& r, const RenderOptions& options) {
  Json doc = header(r);
  doc["ts_witness"] = witness_json(r, options.trace);
  doc["ts_polynomial"] = *r.ts_polynomial;
  return dump(doc);
}

std::string reconstruction_text(const AnalysisReport& r, const RenderOptions& options) {
  return header_text(r) + witness_text(r, options.trace);
}

std::string classification_json(const AnalysisReport& r) {
  Json doc = header(r);
  doc["ts_polynomial"] = *r.ts_polynomial;
  doc["classification"] = classification_object(*r.classification);
  return dump(doc);
}

std::string classification_text(const AnalysisReport& r) {
  return header_text(r) + "representative: " + *r.ts_polynomial + "\n" + classification_body(r);
}

std::string strata_json(const AnalysisReport& r) {
  Json doc = header(r);
  doc["ts_polynomial"] = *r.ts_polynomial;
  doc["weights"] = weights_json(*r.weights);
  doc["strata"] = strata_object(r, true);
  return dump(doc);
}

std::string strata_text(const AnalysisReport& r) {
  return header_text(r) + "representative: " + *r.ts_polynomial + "\n" + strata_body(r, true);
}

}  // namespace tsj
