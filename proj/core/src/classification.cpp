#include "tsj/classification.hpp"

#include <algorithm>
#include <map>
#include <functional>
#include <numeric>

#include "tsj/error.hpp"
#include "tsj/hitting_sets.hpp"
#include "tsj/polynomial.hpp"

namespace tsj {

bool is_thom_sebastiani(const ExponentSet& elements) {
  std::vector<bool> seen;
  for (const auto& alpha : elements) {
    if (seen.empty()) seen.assign(alpha.dimension(), false);
    for (auto i : alpha.support()) {
      if (seen[i]) return false;
      seen[i] = true;
    }
  }
  return true;
}

bool is_thom_sebastiani(const SupportSet& support) {
  return is_thom_sebastiani(support.elements());
}

bool is_brieskorn_pham(const SupportSet& support) {
  if (support.size() != support.dimension()) return false;
  std::vector<bool> seen(support.dimension(), false);
  for (const auto& alpha : support) {
    const auto s = alpha.support();
    if (s.size() != 1 || seen[s[0]]) return false;
    seen[s[0]] = true;
  }
  return true;
}

QuadraticNormalization normalize_quadratics(std::size_t n, const ExponentSet& elements) {
  if (!is_thom_sebastiani(elements)) {
    throw PreconditionViolated("quadratic normalization needs a Thom-Sebastiani support");
  }
  QuadraticNormalization result;
  for (const auto& alpha : elements) {
    const auto s = alpha.support();
    if (s.size() == 2 && alpha.degree() == 2) {
      result.replaced_pairs.emplace(s[0], s[1]);
      result.new_support.insert(Exponent::unit(n, s[0]) + Exponent::unit(n, s[0]));
      result.new_support.insert(Exponent::unit(n, s[1]) + Exponent::unit(n, s[1]));
    } else {
      result.new_support.insert(alpha);
    }
  }
  return result;
}

QuadraticNormalization normalize_quadratics(const SupportSet& support) {
  return normalize_quadratics(support.dimension(), support.elements());
}

bool is_isolated(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit() || ideal.dimension() == 0) return false;
  std::vector<bool> pure(ideal.dimension(), false);
  for (const auto& g : ideal.generators()) {
    const auto s = g.support();
    if (s.size() == 1) pure[s[0]] = true;
  }
  return std::all_of(pure.begin(), pure.end(), [](bool b) { return b; });
}

bool is_radical(const MonomialIdeal& ideal) {
  return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                     [](const Exponent& g) { return g.is_squarefree(); });
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
  ExponentSet squarefree;
  for (const auto& g : ideal.generators()) {
    std::vector<Natural> entries(g.dimension(), Natural(0));
    for (auto i : g.support()) entries[i] = 1;
    squarefree.insert(Exponent(std::move(entries)));
  }
  return MonomialIdeal(ideal.dimension(), squarefree);
}

std::size_t height(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw InvalidArgument("height of the zero ideal is undefined here");
  if (ideal.is_unit()) throw InvalidArgument("height of the unit ideal is undefined");
  return minimum_cover_size(support_hypergraph(ideal));
}

std::vector<VariableSet> minimal_primes(const MonomialIdeal& ideal) {
  if (!is_radical(ideal)) throw PreconditionViolated("minimal_primes expects a radical ideal");
  if (ideal.is_unit()) return {};
  return minimal_covers(support_hypergraph(ideal));
}

namespace {

// Connected components of variables linked by shared generator supports.
std::vector<VariableSet> variable_blocks(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.dimension();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  std::vector<bool> used(n, false);
  for (const auto& g : ideal.generators()) {
    const auto s = g.support();
    for (auto v : s) used[v] = true;
    for (std::size_t k = 1; k < s.size(); ++k) parent[find(s[k])] = find(s[0]);
  }
  std::map<std::size_t, VariableSet> blocks;
  for (std::size_t v = 0; v < n; ++v) {
    if (used[v]) blocks[find(v)].push_back(v);
  }
  std::vector<VariableSet> result;
  for (auto& [root, block] : blocks) result.push_back(std::move(block));
  return result;
}

bool equidimensional_per_block(const MonomialIdeal& squarefree) {
  for (const auto& block : variable_blocks(squarefree)) {
    Hypergraph sub{squarefree.dimension(), {}};
    for (const auto& g : squarefree.generators()) {
      const auto s = g.support();
      if (std::binary_search(block.begin(), block.end(), s.front())) sub.edges.push_back(s);
    }
    const auto covers = minimal_covers(sub);
    for (const auto& c : covers) {
      if (c.size() != covers.front().size()) return false;
    }
  }
  return true;
}

bool is_pair_of_squares(const ExponentSet& support) {
  if (support.size() != 2) return false;
  for (const auto& alpha : support) {
    if (alpha.support().size() != 1 || alpha.degree() != 2) return false;
  }
  return true;
}

}  // namespace

ClassificationReport classify(const SupportSet& support, const TSWitness& witness) {
  const std::size_t n = support.dimension();
  const MonomialIdeal ideal = jacobian_ideal(support);
  ClassificationReport report;
  report.is_thom_sebastiani = is_thom_sebastiani(support);
  report.is_brieskorn_pham = is_brieskorn_pham(support);
  report.representative = witness.f_prime_set();
  report.is_monomial_single = report.representative.size() == 1;
  report.is_isolated = is_isolated(ideal);
  report.is_radical = is_radical(ideal);

  if (ideal.is_unit()) {
    report.notes.push_back("J_F is the unit ideal: the hypersurface is smooth at the origin");
  } else {
    report.height = height(ideal);
    const MonomialIdeal root = radical(ideal);
    report.minimal_primes = minimal_covers(support_hypergraph(root));
    report.minimal_primes_equidimensional_per_block = equidimensional_per_block(root);
  }

  report.normalized = normalize_quadratics(n, report.representative);
  if (!report.normalized.replaced_pairs.empty()) report.rules.push_back("quadratic-normalization");

  if (report.is_isolated) {
    if (is_brieskorn_pham(SupportSet(n, report.normalized.new_support))) {
      report.bp_after_quadratic_normalization = true;
      report.rules.push_back("isolated-implies-brieskorn-pham");
    } else {
      report.notes.push_back(
          "isolated, but a mixed block x_i^m*x_j with m >= 2 survives normalization");
    }
  } else {
    report.notes.push_back("not isolated: Brieskorn-Pham normal form not applicable");
  }

  const auto& normalized = report.normalized.new_support;
  if (is_pair_of_squares(normalized)) {
    report.is_reduced_normal_crossing = true;
    report.rules.push_back("radical-height-two: x_i^2 + x_j^2 ~ x_i*x_j");
  } else if (normalized.size() == 1 && normalized.begin()->is_squarefree() &&
             normalized.begin()->degree() >= 3) {
    report.is_reduced_normal_crossing = true;
    report.rules.push_back("radical-height-two: squarefree monomial of degree >= 3");
  }

  if (report.representative.size() >= 2) {
    report.representative_is_squarefree = true;
    report.squarefree_part_note = "representative has several monomials, hence is squarefree";
  } else {
    const Exponent& alpha = *report.representative.begin();
    report.representative_is_squarefree = alpha.is_squarefree();
    if (report.representative_is_squarefree) {
      report.squarefree_part_note = "representative is a squarefree monomial";
    } else {
      std::vector<Natural> reduced(n, Natural(0));
      for (auto i : alpha.support()) reduced[i] = 1;
      report.squarefree_part_note = "representative is a monomial with repeated factors; squarefree part " +
                                    monomial_to_string(Exponent(std::move(reduced)), {});
    }
  }
  return report;
}

ClassificationReport classify(const SupportSet& support) {
  return classify(support, reconstruct(support));
}

}  // namespace tsj
