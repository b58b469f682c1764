#include "tsj/matroid.hpp"

#include <algorithm>
#include <set>

#include "tsj/error.hpp"

namespace tsj {

TransversalCover::TransversalCover(std::size_t n, std::vector<Exponent> generators,
                                   std::vector<CoverEdge> edges)
    : n_(n), generators_(std::move(generators)), edges_(std::move(edges)), adjacency_(n) {
  if (std::set<Exponent>(generators_.begin(), generators_.end()).size() != generators_.size()) {
    throw InvalidArgument("cover generators must be distinct");
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const auto& e : edges_) {
    if (e.variable >= n_ || e.generator >= generators_.size()) {
      throw InvalidArgument("cover edge out of range");
    }
    adjacency_[e.variable].push_back(e.generator);
  }
}

const std::vector<std::size_t>& TransversalCover::generators_of(std::size_t variable) const {
  if (variable >= n_) throw InvalidArgument("variable index out of range");
  return adjacency_[variable];
}

bool TransversalCover::has_edge(std::size_t variable, std::size_t generator) const {
  if (variable >= n_) return false;
  const auto& adj = adjacency_[variable];
  return std::binary_search(adj.begin(), adj.end(), generator);
}

std::optional<std::size_t> TransversalCover::index_of(const Exponent& generator) const {
  for (std::size_t b = 0; b < generators_.size(); ++b) {
    if (generators_[b] == generator) return b;
  }
  return std::nullopt;
}

bool PartialTransversal::is_valid_for(const TransversalCover& cover) const {
  std::set<std::size_t> used;
  for (const auto& [variable, generator] : assignment) {
    if (!cover.has_edge(variable, generator)) return false;
    if (!used.insert(generator).second) return false;
  }
  return true;
}

TransversalCover build_cover(const SupportSet& support) {
  const std::size_t n = support.dimension();
  const MonomialIdeal ideal = jacobian_ideal(support);
  std::vector<Exponent> generators(ideal.generators().begin(), ideal.generators().end());
  std::vector<CoverEdge> edges;
  for (const auto& alpha : support) {
    for (const auto& [i, beta] : derivatives(alpha)) {
      auto it = std::lower_bound(generators.begin(), generators.end(), beta);
      if (it != generators.end() && *it == beta) {
        edges.push_back({i, static_cast<std::size_t>(it - generators.begin())});
      }
    }
  }
  return TransversalCover(n, std::move(generators), std::move(edges));
}

namespace {

// Kuhn's augmenting path search restricted to the unblocked vertices.
class Matcher {
 public:
  Matcher(const TransversalCover& cover, const std::vector<bool>& blocked_variables,
          const std::vector<bool>& blocked_generators)
      : cover_(cover),
        blocked_variables_(blocked_variables),
        blocked_generators_(blocked_generators),
        owner_(cover.mu(), kNone) {}

  std::map<std::size_t, std::size_t> run() {
    for (std::size_t v = 0; v < cover_.dimension(); ++v) {
      if (blocked_variables_[v]) continue;
      visited_.assign(cover_.mu(), false);
      augment(v);
    }
    std::map<std::size_t, std::size_t> result;
    for (std::size_t b = 0; b < owner_.size(); ++b) {
      if (owner_[b] != kNone) result.emplace(owner_[b], b);
    }
    return result;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool augment(std::size_t v) {
    for (auto b : cover_.generators_of(v)) {
      if (blocked_generators_[b] || visited_[b]) continue;
      visited_[b] = true;
      if (owner_[b] == kNone || augment(owner_[b])) {
        owner_[b] = v;
        return true;
      }
    }
    return false;
  }

  const TransversalCover& cover_;
  const std::vector<bool>& blocked_variables_;
  const std::vector<bool>& blocked_generators_;
  std::vector<std::size_t> owner_;
  std::vector<bool> visited_;
};

}  // namespace

PartialTransversal maximum_matching(const TransversalCover& cover) {
  const std::vector<bool> no_variables(cover.dimension(), false);
  const std::vector<bool> no_generators(cover.mu(), false);
  return PartialTransversal{Matcher(cover, no_variables, no_generators).run()};
}

std::size_t rank(const TransversalCover& cover) { return maximum_matching(cover).rank(); }

JacobianTest test_jacobian(const SupportSet& support) {
  TransversalCover cover = build_cover(support);
  PartialTransversal matching = maximum_matching(cover);
  const std::size_t r = matching.rank();
  const std::size_t mu = cover.mu();
  return JacobianTest{std::move(cover), std::move(matching), r, mu, r == mu};
}

bool is_jacobian(const SupportSet& support) { return test_jacobian(support).is_jacobian; }

std::optional<PartialTransversal> extend_matching(const TransversalCover& cover,
                                                  const PartialTransversal& psi) {
  if (!psi.is_valid_for(cover)) {
    throw InvalidArgument("partial transversal is not injective or uses a non-edge");
  }
  std::vector<bool> blocked_variables(cover.dimension(), false);
  std::vector<bool> blocked_generators(cover.mu(), false);
  for (const auto& [variable, generator] : psi.assignment) {
    blocked_variables[variable] = true;
    blocked_generators[generator] = true;
  }
  auto rest = Matcher(cover, blocked_variables, blocked_generators).run();
  if (psi.rank() + rest.size() != cover.mu()) return std::nullopt;
  PartialTransversal full = psi;
  full.assignment.insert(rest.begin(), rest.end());
  return full;
}

}  // namespace tsj
