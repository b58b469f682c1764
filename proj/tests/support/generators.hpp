#pragma once

// Random inputs for property and acceptance tests. All generators take the
// engine by reference so a single seed reproduces a whole suite.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "reference.hpp"
#include "tsj/matroid.hpp"

namespace gen {

using Rng = std::mt19937_64;
using ref::Vec;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline std::vector<std::size_t> shuffled(Rng& rng, std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

/// A Thom-Sebastiani support: up to `max_blocks` monomials on disjoint random
/// variable sets, entries in 1..max_entry. Some variables may stay unused.
inline std::set<Vec> ts_support(Rng& rng, std::size_t n, std::size_t max_blocks, long max_entry) {
  const auto order = shuffled(rng, n);
  const std::size_t blocks = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(std::min(max_blocks, n))));
  std::set<Vec> f;
  std::size_t next = 0;
  for (std::size_t b = 0; b < blocks && next < n; ++b) {
    const std::size_t remaining_blocks = blocks - b - 1;
    const std::size_t room = n - next - remaining_blocks;
    const std::size_t size = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(std::min<std::size_t>(room, 3))));
    Vec a(n, 0);
    for (std::size_t k = 0; k < size; ++k) a[order[next++]] = uniform(rng, 1, max_entry);
    f.insert(a);
  }
  return f;
}

/// Adds up to `count` exponents β ∉ F with δ(β) inside J_F, keeping rk = μ.
inline std::set<Vec> with_noise(Rng& rng, std::set<Vec> f, std::size_t count) {
  const std::size_t n = f.begin()->size();
  const std::set<Vec> min_gens = ref::jacobian_min(f);
  const std::vector<Vec> gens(min_gens.begin(), min_gens.end());
  std::size_t added = 0;
  for (std::size_t attempt = 0; attempt < 40 * count && added < count; ++attempt) {
    Vec beta = gens[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(gens.size()) - 1))];
    const long steps = uniform(rng, 1, 2);
    for (long s = 0; s < steps; ++s) ++beta[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1))];
    if (f.contains(beta)) continue;
    const auto ds = ref::derivatives({beta});
    if (!std::all_of(ds.begin(), ds.end(), [&](const Vec& d) { return ref::in_ideal(min_gens, d); })) continue;
    auto candidate = f;
    candidate.insert(beta);
    if (!tsj::is_jacobian(tsj::SupportSet(n, ref::exponents(candidate)))) continue;
    f = std::move(candidate);
    ++added;
  }
  return f;
}

/// Random small support, not necessarily Jacobian. May hold fewer than
/// `size` elements when the box is small.
inline std::set<Vec> random_support(Rng& rng, std::size_t n, std::size_t size, long max_entry) {
  std::set<Vec> f;
  for (int attempt = 0; attempt < 1000 && f.size() < size; ++attempt) {
    Vec a(n);
    for (auto& x : a) x = uniform(rng, 0, max_entry);
    if (std::any_of(a.begin(), a.end(), [](long x) { return x != 0; })) f.insert(a);
  }
  return f;
}

/// A Brieskorn-Pham support: x_i^{a_i} for every i with a_i >= 2.
inline std::set<Vec> bp_support(Rng& rng, std::size_t n, long max_entry) {
  std::set<Vec> f;
  for (std::size_t i = 0; i < n; ++i) {
    Vec a(n, 0);
    a[i] = uniform(rng, 2, max_entry);
    f.insert(a);
  }
  return f;
}

/// Random monomial ideal from up to `gens` nonzero exponents.
inline tsj::MonomialIdeal random_ideal(Rng& rng, std::size_t n, std::size_t gens, long max_entry) {
  std::set<Vec> g;
  for (int attempt = 0; attempt < 1000 && g.size() < gens; ++attempt) {
    Vec a(n, 0);
    const long nonzero = uniform(rng, 1, std::min<long>(3, static_cast<long>(n)));
    for (long k = 0; k < nonzero; ++k) a[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1))] = uniform(rng, 1, max_entry);
    g.insert(a);
  }
  return tsj::MonomialIdeal(n, ref::exponents(g));
}

/// Random transversal cover with mu <= 8 generators on n variables.
inline tsj::TransversalCover random_cover(Rng& rng, std::size_t n, std::size_t mu) {
  std::set<Vec> g;
  while (g.size() < mu) {
    Vec a(n);
    for (auto& x : a) x = uniform(rng, 0, 7);
    g.insert(a);
  }
  std::vector<tsj::Exponent> gens;
  for (const auto& v : g) gens.push_back(ref::exponent(v));
  std::sort(gens.begin(), gens.end());
  std::vector<tsj::CoverEdge> edges;
  const double density = std::uniform_real_distribution<double>(0.05, 0.7)(rng);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t b = 0; b < mu; ++b) {
      if (std::bernoulli_distribution(density)(rng)) edges.push_back({i, b});
    }
  }
  return tsj::TransversalCover(n, std::move(gens), std::move(edges));
}

inline tsj::SupportSet support(const std::set<Vec>& f) { return tsj::SupportSet(f.begin()->size(), ref::exponents(f)); }

}  // namespace gen
