#include "tsj/reconstruction.hpp"

#include <algorithm>

#include "tsj/error.hpp"
#include "tsj/polynomial.hpp"

namespace tsj {

namespace {

struct Candidate {
  Exponent alpha;
  std::vector<std::pair<std::size_t, std::size_t>> assignment;  // variable, generator
};

class Search {
 public:
  Search(const SupportSet& support, TransversalCover cover)
      : support_(support),
        cover_(std::move(cover)),
        committed_variables_(support.dimension(), false),
        assigned_generators_(cover_.mu(), false) {}

  bool run() { return descend(); }

  TSWitness witness() const {
    TSWitness w;
    w.n = support_.dimension();
    w.f_prime = chosen_;
    for (const auto& [variable, generator] : psi_.assignment) {
      w.psi.emplace(variable, cover_.generators()[generator]);
    }
    for (const auto& step : steps_) {
      w.order.insert(w.order.end(), step.variables.begin(), step.variables.end());
    }
    for (std::size_t i = 0; i < w.n; ++i) {
      if (!committed_variables_[i]) w.order.push_back(i);
    }
    w.steps = steps_;
    w.backtracks = backtracks_;
    return w;
  }

 private:
  bool descend() {
    if (psi_.rank() == cover_.mu()) return true;

    std::optional<Natural> min_degree;
    for (std::size_t b = 0; b < cover_.mu(); ++b) {
      if (assigned_generators_[b]) continue;
      Natural d = cover_.generators()[b].degree();
      if (!min_degree || d < *min_degree) min_degree = std::move(d);
    }

    for (auto& candidate : candidates(*min_degree)) {
      commit(candidate, *min_degree);
      if (descend()) return true;
      undo(candidate);
      ++backtracks_;
    }
    return false;
  }

  // Elements α of degree d + 1 with [α] disjoint from the committed variables
  // and δ(α) consisting of unassigned minimal generators, such that ψ
  // extended by δ(α) is still part of a basis. Larger supports first, then
  // graded-lex on α.
  std::vector<Candidate> candidates(const Natural& generator_degree) const {
    std::vector<Candidate> result;
    for (const auto& alpha : support_) {
      if (alpha.degree() != generator_degree + 1) continue;
      Candidate c{alpha, {}};
      bool admissible = true;
      for (const auto& [i, beta] : derivatives(alpha)) {
        auto b = cover_.index_of(beta);
        if (committed_variables_[i] || !b || assigned_generators_[*b]) {
          admissible = false;
          break;
        }
        c.assignment.emplace_back(i, *b);
      }
      if (!admissible) continue;
      PartialTransversal extended = psi_;
      for (auto [i, b] : c.assignment) extended.assignment.emplace(i, b);
      if (!extend_matching(cover_, extended)) continue;
      result.push_back(std::move(c));
    }
    std::stable_sort(result.begin(), result.end(), [](const Candidate& a, const Candidate& b) {
      return a.assignment.size() > b.assignment.size();
    });
    return result;
  }

  void commit(const Candidate& c, const Natural& generator_degree) {
    ReconstructionStep step{c.alpha, {}, {}, generator_degree};
    for (auto [i, b] : c.assignment) {
      committed_variables_[i] = true;
      assigned_generators_[b] = true;
      psi_.assignment.emplace(i, b);
      step.variables.push_back(i);
      step.new_generators.insert(cover_.generators()[b]);
    }
    chosen_.push_back(c.alpha);
    steps_.push_back(std::move(step));
  }

  void undo(const Candidate& c) {
    for (auto [i, b] : c.assignment) {
      committed_variables_[i] = false;
      assigned_generators_[b] = false;
      psi_.assignment.erase(i);
    }
    chosen_.pop_back();
    steps_.pop_back();
  }

  const SupportSet& support_;
  TransversalCover cover_;
  std::vector<bool> committed_variables_;
  std::vector<bool> assigned_generators_;
  PartialTransversal psi_;
  std::vector<Exponent> chosen_;
  std::vector<ReconstructionStep> steps_;
  std::size_t backtracks_ = 0;
};

}  // namespace

TSWitness reconstruct(const SupportSet& support) {
  JacobianTest test = test_jacobian(support);
  if (!test.is_jacobian) {
    throw PreconditionViolated("semigroup ideal is not Jacobian: mu = " +
                               std::to_string(test.mu) + ", rank = " + std::to_string(test.rank));
  }
  Search search(support, std::move(test.cover));
  if (!search.run()) {
    throw InternalError("no Thom-Sebastiani subset with the same minimal generators exists for " +
                        to_string(support.elements()));
  }
  return search.witness();
}

std::optional<std::string> witness_defect(const SupportSet& support, const TSWitness& witness) {
  if (witness.n != support.dimension()) return "witness dimension differs from support";
  for (const auto& alpha : witness.f_prime) {
    if (alpha.dimension() != support.dimension()) return "F' element has wrong dimension";
    if (!support.contains(alpha)) return "F' element " + to_string(alpha) + " is not in F";
    if (alpha.is_zero()) return "F' contains the zero exponent";
  }
  if (witness.f_prime_set().size() != witness.f_prime.size()) return "F' has repeated elements";

  std::vector<bool> seen(support.dimension(), false);
  for (const auto& alpha : witness.f_prime) {
    for (auto i : alpha.support()) {
      if (seen[i]) return "supports of F' elements overlap in x" + std::to_string(i + 1);
      seen[i] = true;
    }
  }

  const MonomialIdeal target = jacobian_ideal(support);
  for (const auto& alpha : witness.f_prime) {
    for (const auto& [i, beta] : derivatives(alpha)) {
      if (!target.generators().contains(beta)) {
        return "derivative " + to_string(beta) + " of " + to_string(alpha) +
               " is not a minimal generator of J_F";
      }
    }
  }

  const MonomialIdeal reduced =
      minimal_generators(support.dimension(), derive_all(support.dimension(), witness.f_prime_set()));
  if (!(reduced == target)) {
    return "Min(J_F') = " + to_string(reduced.generators()) + " differs from Min(J_F) = " +
           to_string(target.generators());
  }
  return std::nullopt;
}

bool verify_witness(const SupportSet& support, const TSWitness& witness) {
  return !witness_defect(support, witness).has_value();
}

std::string ts_polynomial(const TSWitness& witness, std::span<const std::string> names) {
  std::string out;
  for (const auto& alpha : witness.f_prime) {
    if (!out.empty()) out += " + ";
    out += monomial_to_string(alpha, names, witness.order);
  }
  return out.empty() ? "0" : out;
}

}  // namespace tsj
