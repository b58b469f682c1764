#include "tsj/hitting_sets.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "tsj/error.hpp"

namespace tsj {

namespace {

using Mask = std::uint64_t;

std::vector<Mask> to_masks(const Hypergraph& graph) {
  if (graph.vertices > 64) throw InvalidArgument("hitting sets support at most 64 variables");
  std::vector<Mask> masks;
  for (const auto& edge : graph.edges) {
    Mask m = 0;
    for (auto v : edge) {
      if (v >= graph.vertices) throw InvalidArgument("hyperedge vertex out of range");
      m |= Mask{1} << v;
    }
    if (m == 0) throw InvalidArgument("empty hyperedge cannot be hit");
    masks.push_back(m);
  }
  // Supersets of other edges are hit whenever the smaller edge is.
  std::sort(masks.begin(), masks.end(),
            [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b) || (std::popcount(a) == std::popcount(b) && a < b); });
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<Mask> reduced;
  for (auto m : masks) {
    if (std::none_of(reduced.begin(), reduced.end(), [&](Mask r) { return (r & m) == r; })) {
      reduced.push_back(m);
    }
  }
  return reduced;
}

VariableSet to_set(Mask m) {
  VariableSet result;
  for (std::size_t v = 0; m; ++v, m >>= 1) {
    if (m & 1) result.push_back(v);
  }
  return result;
}

class MinCoverSearch {
 public:
  explicit MinCoverSearch(std::vector<Mask> edges) : edges_(std::move(edges)) {}

  std::size_t run() {
    best_ = greedy_bound();
    branch(0, 0);
    return best_;
  }

 private:
  std::size_t greedy_bound() const {
    Mask chosen = 0;
    std::size_t size = 0;
    for (;;) {
      std::vector<int> degree(64, 0);
      bool open = false;
      for (auto e : edges_) {
        if (e & chosen) continue;
        open = true;
        for (Mask m = e; m; m &= m - 1) ++degree[std::countr_zero(m)];
      }
      if (!open) return size;
      const auto best = std::max_element(degree.begin(), degree.end()) - degree.begin();
      chosen |= Mask{1} << best;
      ++size;
    }
  }

  // Pairwise disjoint uncovered edges each need their own vertex.
  std::size_t packing_bound(Mask chosen) const {
    Mask used = 0;
    std::size_t count = 0;
    for (auto e : edges_) {
      if ((e & chosen) || (e & used)) continue;
      used |= e;
      ++count;
    }
    return count;
  }

  void branch(Mask chosen, std::size_t size) {
    // Smallest uncovered edge; vertices ordered by uncovered degree.
    Mask pick = 0;
    for (auto e : edges_) {
      if (e & chosen) continue;
      if (!pick || std::popcount(e) < std::popcount(pick)) pick = e;
    }
    if (!pick) {
      best_ = std::min(best_, size);
      return;
    }
    if (size + packing_bound(chosen) >= best_) return;
    std::vector<std::pair<int, int>> order;
    for (Mask m = pick; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      int degree = 0;
      for (auto e : edges_) {
        if (!(e & chosen) && (e >> v & 1)) ++degree;
      }
      order.emplace_back(-degree, v);
    }
    std::sort(order.begin(), order.end());
    for (auto [neg_degree, v] : order) branch(chosen | Mask{1} << v, size + 1);
  }

  std::vector<Mask> edges_;
  std::size_t best_ = 0;
};

class MinimalCoverEnumeration {
 public:
  explicit MinimalCoverEnumeration(std::vector<Mask> edges) : edges_(std::move(edges)) {}

  std::vector<Mask> run() {
    branch(0);
    std::sort(found_.begin(), found_.end(), [](Mask a, Mask b) {
      if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
      return to_set(a) < to_set(b);
    });
    found_.erase(std::unique(found_.begin(), found_.end()), found_.end());
    std::vector<Mask> minimal;
    for (auto m : found_) {
      if (std::none_of(minimal.begin(), minimal.end(), [&](Mask r) { return (r & m) == r; })) {
        minimal.push_back(m);
      }
    }
    return minimal;
  }

 private:
  void branch(Mask chosen) {
    for (auto f : found_) {
      if ((f & chosen) == f) return;
    }
    Mask pick = 0;
    for (auto e : edges_) {
      if (e & chosen) continue;
      if (!pick || std::popcount(e) < std::popcount(pick)) pick = e;
    }
    if (!pick) {
      if (is_minimal(chosen)) found_.push_back(chosen);
      return;
    }
    for (Mask m = pick; m; m &= m - 1) branch(chosen | (m & -m));
  }

  // Every chosen vertex is the only one hitting some edge.
  bool is_minimal(Mask cover) const {
    for (Mask m = cover; m; m &= m - 1) {
      const Mask without = cover & ~(m & -m);
      bool still_covers = true;
      for (auto e : edges_) {
        if (!(e & without)) {
          still_covers = false;
          break;
        }
      }
      if (still_covers) return false;
    }
    return true;
  }

  std::vector<Mask> edges_;
  std::vector<Mask> found_;
};

}  // namespace

Hypergraph support_hypergraph(const MonomialIdeal& ideal) {
  Hypergraph graph{ideal.dimension(), {}};
  for (const auto& g : ideal.generators()) graph.edges.push_back(g.support());
  return graph;
}

std::size_t minimum_cover_size(const Hypergraph& graph) {
  auto edges = to_masks(graph);
  if (edges.empty()) return 0;
  return MinCoverSearch(std::move(edges)).run();
}

std::vector<VariableSet> minimal_covers(const Hypergraph& graph) {
  auto edges = to_masks(graph);
  std::vector<VariableSet> result;
  for (auto m : MinimalCoverEnumeration(std::move(edges)).run()) result.push_back(to_set(m));
  return result;
}

}  // namespace tsj
