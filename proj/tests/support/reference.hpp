#pragma once

// Test-only reference computations on small inputs. They work on plain
// integer vectors and are written independently of both the library and the
// library's oracle module.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <vector>

#include "tsj/exponent.hpp"
#include "tsj/homogeneity.hpp"

namespace ref {

using Vec = std::vector<long>;

inline Vec vec(const tsj::Exponent& a) {
  Vec v;
  for (const auto& e : a.entries()) v.push_back(e.convert_to<long>());
  return v;
}

inline tsj::Exponent exponent(const Vec& v) {
  std::vector<tsj::Natural> e;
  for (long x : v) e.emplace_back(x);
  return tsj::Exponent(std::move(e));
}

inline std::set<Vec> vecs(const tsj::ExponentSet& s) {
  std::set<Vec> out;
  for (const auto& a : s) out.insert(vec(a));
  return out;
}

inline tsj::ExponentSet exponents(const std::set<Vec>& s) {
  tsj::ExponentSet out;
  for (const auto& v : s) out.insert(exponent(v));
  return out;
}

inline bool leq(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

/// δ(F): every α − e_i with α_i > 0.
inline std::set<Vec> derivatives(const std::set<Vec>& f) {
  std::set<Vec> out;
  for (const auto& a : f) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      Vec d = a;
      --d[i];
      out.insert(d);
    }
  }
  return out;
}

/// Minimal elements under componentwise order, by sorting on degree first.
inline std::set<Vec> minimal(const std::set<Vec>& g) {
  std::vector<Vec> sorted(g.begin(), g.end());
  auto deg = [](const Vec& v) {
    long s = 0;
    for (long x : v) s += x;
    return s;
  };
  std::stable_sort(sorted.begin(), sorted.end(), [&](const Vec& a, const Vec& b) { return deg(a) < deg(b); });
  std::vector<Vec> kept;
  for (const auto& v : sorted) {
    if (std::none_of(kept.begin(), kept.end(), [&](const Vec& k) { return leq(k, v); })) kept.push_back(v);
  }
  return std::set<Vec>(kept.begin(), kept.end());
}

inline std::set<Vec> jacobian_min(const std::set<Vec>& f) { return minimal(derivatives(f)); }

inline bool in_ideal(const std::set<Vec>& min_gens, const Vec& a) {
  return std::any_of(min_gens.begin(), min_gens.end(), [&](const Vec& g) { return leq(g, a); });
}

/// Rank of the transversal system by assigning variables generator by
/// generator (generator-side recursion).
inline std::size_t transversal_rank(const std::set<Vec>& f) {
  const std::set<Vec> m = jacobian_min(f);
  const std::vector<Vec> gens(m.begin(), m.end());
  if (gens.empty()) return 0;
  const std::size_t n = gens.front().size();
  std::vector<bool> taken(n, false);
  std::size_t best = 0;
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t k, std::size_t size) {
    best = std::max(best, size);
    if (k == gens.size()) return;
    go(k + 1, size);
    for (std::size_t i = 0; i < n; ++i) {
      if (taken[i]) continue;
      Vec up = gens[k];
      ++up[i];
      if (!f.contains(up)) continue;
      taken[i] = true;
      go(k + 1, size + 1);
      taken[i] = false;
    }
  };
  go(0, 0);
  return best;
}

/// All inclusion-minimal vertex sets meeting every edge, built by branching on
/// the first unmet edge and filtering non-minimal results.
inline std::vector<std::set<std::size_t>> minimal_covers(const std::vector<std::set<std::size_t>>& edges) {
  std::set<std::set<std::size_t>> found;
  std::function<void(std::set<std::size_t>)> go = [&](std::set<std::size_t> chosen) {
    for (const auto& e : edges) {
      bool met = std::any_of(e.begin(), e.end(), [&](std::size_t v) { return chosen.contains(v); });
      if (met) continue;
      for (auto v : e) {
        auto next = chosen;
        next.insert(v);
        go(next);
      }
      return;
    }
    found.insert(chosen);
  };
  go({});
  std::vector<std::set<std::size_t>> out;
  for (const auto& c : found) {
    bool minimal = std::none_of(found.begin(), found.end(), [&](const auto& d) {
      return d != c && std::includes(c.begin(), c.end(), d.begin(), d.end());
    });
    if (minimal) out.push_back(c);
  }
  return out;
}

inline std::size_t minimum_cover(const std::vector<std::set<std::size_t>>& edges) {
  std::size_t best = static_cast<std::size_t>(-1);
  for (const auto& c : minimal_covers(edges)) best = std::min(best, c.size());
  return best;
}

inline std::vector<std::set<std::size_t>> support_edges(const std::set<Vec>& gens) {
  std::vector<std::set<std::size_t>> edges;
  for (const auto& g : gens) {
    std::set<std::size_t> e;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] != 0) e.insert(i);
    }
    edges.push_back(e);
  }
  return edges;
}

inline tsj::Rational weighted_degree(const std::vector<tsj::Rational>& w, const Vec& a) {
  tsj::Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += w[i] * a[i];
  return s;
}

inline bool weights_certify(const tsj::WeightVector& w, const std::set<Vec>& f) {
  for (const auto& x : w.values()) {
    if (x <= 0) return false;
  }
  return std::all_of(f.begin(), f.end(), [&](const Vec& a) { return weighted_degree(w.values(), a) == 1; });
}

/// w_i = 1/|α| for i ∈ [α], 1 for variables outside every support.
inline std::vector<tsj::Rational> closed_form_weights(const std::set<Vec>& f_prime, std::size_t n) {
  std::vector<tsj::Rational> w(n, tsj::Rational(1));
  for (const auto& a : f_prime) {
    long deg = 0;
    for (long x : a) deg += x;
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] != 0) w[i] = tsj::Rational(1, deg);
    }
  }
  return w;
}

inline bool disjoint_supports(const std::set<Vec>& f) {
  std::vector<int> seen;
  for (const auto& a : f) {
    if (seen.empty()) seen.assign(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != 0 && seen[i]++) return false;
    }
  }
  return true;
}

/// Whether some F' ⊆ F has disjoint supports, δ(F') ⊆ Min(J_F) and the same
/// minimal generators as F. Plain subset enumeration, |F| ≤ 16.
inline bool ts_subset_exists(const std::set<Vec>& f) {
  const std::vector<Vec> elems(f.begin(), f.end());
  const auto target = jacobian_min(f);
  for (unsigned mask = 1; mask < (1u << elems.size()); ++mask) {
    std::set<Vec> sub;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (mask >> i & 1u) sub.insert(elems[i]);
    }
    if (!disjoint_supports(sub)) continue;
    const auto ds = derivatives(sub);
    if (!std::includes(target.begin(), target.end(), ds.begin(), ds.end())) continue;
    if (minimal(ds) == target) return true;
  }
  return false;
}

}  // namespace ref
