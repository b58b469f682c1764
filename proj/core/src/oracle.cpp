#include "tsj/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "tsj/error.hpp"

namespace tsj::oracle {

namespace {

using Raw = std::vector<Natural>;

Raw raw(const Exponent& alpha) { return Raw(alpha.entries().begin(), alpha.entries().end()); }

bool raw_divides(const Raw& a, const Raw& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

std::set<Raw> naive_derivatives(const ExponentSet& elements) {
  std::set<Raw> out;
  for (const auto& alpha : elements) {
    Raw r = raw(alpha);
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (r[i] == 0) continue;
      Raw d = r;
      d[i] -= 1;
      out.insert(std::move(d));
    }
  }
  return out;
}

// Keeps g unless some other element divides it.
std::set<Raw> naive_minimal(const std::set<Raw>& gens) {
  std::set<Raw> out;
  for (const auto& g : gens) {
    bool minimal = true;
    for (const auto& h : gens) {
      if (h != g && raw_divides(h, g)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.insert(g);
  }
  return out;
}

ExponentSet to_exponents(const std::set<Raw>& gens) {
  ExponentSet out;
  for (const auto& g : gens) out.insert(Exponent(g));
  return out;
}

class RankEnumerator {
 public:
  explicit RankEnumerator(const TransversalCover& cover)
      : cover_(cover), used_(cover.mu(), false) {}

  std::size_t run() {
    visit(0, 0);
    return best_;
  }

 private:
  void visit(std::size_t variable, std::size_t size) {
    if (variable == cover_.dimension()) {
      best_ = std::max(best_, size);
      return;
    }
    visit(variable + 1, size);
    for (std::size_t b = 0; b < cover_.mu(); ++b) {
      if (used_[b] || !cover_.has_edge(variable, b)) continue;
      used_[b] = true;
      visit(variable + 1, size + 1);
      used_[b] = false;
    }
  }

  const TransversalCover& cover_;
  std::vector<bool> used_;
  std::size_t best_ = 0;
};

VariableSet bits_to_set(std::uint32_t mask, std::size_t n) {
  VariableSet out;
  for (std::size_t i = 0; i < n; ++i) {
    if (mask & (1u << i)) out.push_back(i);
  }
  return out;
}

std::string vars_text(const VariableSet& s) {
  std::ostringstream out;
  out << "{";
  for (std::size_t k = 0; k < s.size(); ++k) out << (k ? "," : "") << "x" << s[k] + 1;
  out << "}";
  return out.str();
}

CheckResult pass(std::string name, std::string detail = {}) {
  return {std::move(name), true, false, std::move(detail)};
}
CheckResult fail(std::string name, std::string detail) {
  return {std::move(name), false, false, std::move(detail)};
}
CheckResult skip(std::string name, std::string detail) {
  return {std::move(name), true, true, std::move(detail)};
}
CheckResult expect(std::string name, bool ok, std::string detail) {
  return ok ? pass(std::move(name), std::move(detail)) : fail(std::move(name), std::move(detail));
}

Rational dot(const WeightVector& w, const Exponent& alpha) {
  Rational total = 0;
  for (std::size_t i = 0; i < alpha.dimension(); ++i) total += w[i] * Rational(alpha[i]);
  return total;
}

}  // namespace

std::size_t brute_rank(const TransversalCover& cover) {
  if (cover.mu() > 8 || cover.dimension() > 8) {
    throw InvalidArgument("brute_rank guard exceeded: needs mu <= 8 and n <= 8");
  }
  return RankEnumerator(cover).run();
}

CoverEnumeration brute_min_cover(const std::vector<VariableSet>& edges, std::size_t n) {
  if (n > 12) throw InvalidArgument("brute_min_cover guard exceeded: needs n <= 12");
  std::vector<std::uint32_t> masks;
  for (const auto& e : edges) {
    if (e.empty()) throw InvalidArgument("brute_min_cover: empty edge cannot be covered");
    std::uint32_t m = 0;
    for (auto v : e) {
      if (v >= n) throw InvalidArgument("brute_min_cover: vertex out of range");
      m |= 1u << v;
    }
    masks.push_back(m);
  }
  const std::uint32_t total = 1u << n;
  auto covers = [&](std::uint32_t s) {
    return std::all_of(masks.begin(), masks.end(), [&](std::uint32_t m) { return (m & s) != 0; });
  };

  CoverEnumeration result;
  bool found = false;
  for (std::size_t size = 0; size <= n; ++size) {
    std::vector<VariableSet> level;
    for (std::uint32_t s = 0; s < total; ++s) {
      if (static_cast<std::size_t>(std::popcount(s)) != size || !covers(s)) continue;
      bool minimal = true;
      for (std::size_t i = 0; i < n && minimal; ++i) {
        if ((s & (1u << i)) && covers(s & ~(1u << i))) minimal = false;
      }
      if (minimal) level.push_back(bits_to_set(s, n));
    }
    if (!level.empty() && !found) {
      result.minimum = size;
      found = true;
    }
    std::sort(level.begin(), level.end());
    result.minimal_covers.insert(result.minimal_covers.end(), level.begin(), level.end());
  }
  return result;
}

ExponentSet brute_min_generators(std::size_t n, const ExponentSet& elements) {
  for (const auto& alpha : elements) {
    if (alpha.dimension() != n) throw InvalidArgument("brute_min_generators: dimension mismatch");
  }
  return to_exponents(naive_minimal(naive_derivatives(elements)));
}

bool brute_min_equality(const SupportSet& f1, const SupportSet& f2) {
  if (f1.dimension() != f2.dimension()) return false;
  return naive_minimal(naive_derivatives(f1.elements())) ==
         naive_minimal(naive_derivatives(f2.elements()));
}

std::vector<CheckResult> cross_check(const AnalysisReport& report, std::uint64_t seed,
                                     std::size_t permutation_samples) {
  std::vector<CheckResult> out;
  const SupportSet& F = report.input.support;
  const std::size_t n = F.dimension();
  const ExponentSet min_gens = brute_min_generators(n, F.elements());

  out.push_back(expect("Min(J_F) by pairwise comparison", min_gens == report.ideal.generators(),
                       to_string(min_gens)));
  out.push_back(expect("mu", min_gens.size() == report.mu, std::to_string(min_gens.size())));

  bool edges_ok = report.cover.generators() == std::vector<Exponent>(min_gens.begin(), min_gens.end());
  for (std::size_t i = 0; i < n && edges_ok; ++i) {
    std::size_t b = 0;
    for (const auto& g : min_gens) {
      const bool expected = F.contains(g + Exponent::unit(n, i));
      edges_ok = edges_ok && expected == report.cover.has_edge(i, b);
      ++b;
    }
  }
  out.push_back(expect("cover edges: (i, g) iff g + e_i in F", edges_ok, ""));

  if (report.mu <= 8 && n <= 8) {
    const std::size_t r = brute_rank(report.cover);
    out.push_back(expect("rank by exhaustive enumeration", r == report.rank, std::to_string(r)));
    out.push_back(expect("is_jacobian iff rank = mu", (r == min_gens.size()) == report.is_jacobian,
                         report.is_jacobian ? "true" : "false"));
  } else {
    out.push_back(skip("rank by exhaustive enumeration", "needs mu <= 8 and n <= 8"));
  }

  if (report.input_weights) {
    bool ok = true;
    for (const auto& alpha : F) ok = ok && dot(*report.input_weights, alpha) == 1;
    out.push_back(expect("input weights give degree 1 on F", ok, ""));
  }

  if (report.witness) {
    const TSWitness& w = *report.witness;
    std::vector<int> owner(n, -1);
    bool disjoint = true;
    bool derivatives_minimal = true;
    for (std::size_t k = 0; k < w.f_prime.size(); ++k) {
      Raw r = raw(w.f_prime[k]);
      for (std::size_t i = 0; i < n; ++i) {
        if (r[i] == 0) continue;
        disjoint = disjoint && owner[i] < 0;
        owner[i] = static_cast<int>(k);
        Raw d = r;
        d[i] -= 1;
        derivatives_minimal = derivatives_minimal && min_gens.contains(Exponent(d));
      }
    }
    out.push_back(expect("F' has pairwise disjoint supports", disjoint, ""));
    out.push_back(expect("delta(F') lies in Min(J_F)", derivatives_minimal, ""));
    const SupportSet f_prime(n, w.f_prime_set());
    out.push_back(expect("Min(J_F') = Min(J_F) by pairwise comparison",
                         brute_min_equality(F, f_prime), to_string(w.f_prime_set())));

    if (report.weights) {
      bool ok = true;
      for (const auto& alpha : w.f_prime) ok = ok && dot(*report.weights, alpha) == 1;
      for (std::size_t i = 0; i < n; ++i) ok = ok && (owner[i] >= 0 || (*report.weights)[i] == 1);
      out.push_back(expect("weights give degree 1 on F'", ok, ""));
    }
  }

  if (report.classification) {
    const auto& c = *report.classification;
    bool all_squarefree = true;
    std::vector<bool> pure(n, false);
    std::vector<VariableSet> edges;
    for (const auto& g : min_gens) {
      VariableSet s;
      for (std::size_t i = 0; i < n; ++i) {
        if (g[i] != 0) s.push_back(i);
        if (g[i] > 1) all_squarefree = false;
      }
      if (s.size() == 1) pure[s[0]] = true;
      edges.push_back(std::move(s));
    }
    const bool unit = min_gens.size() == 1 && min_gens.begin()->degree() == 0;
    const bool isolated = !unit && std::all_of(pure.begin(), pure.end(), [](bool b) { return b; });
    out.push_back(expect("radical iff all minimal generators squarefree", all_squarefree == c.is_radical, ""));
    out.push_back(expect("isolated iff a pure power of every variable", isolated == c.is_isolated, ""));

    if (unit) {
      out.push_back(expect("height undefined for the unit ideal", !c.height, ""));
    } else if (n <= 12) {
      const CoverEnumeration e = brute_min_cover(edges, n);
      out.push_back(expect("height by subset enumeration", c.height == e.minimum,
                           std::to_string(e.minimum)));
      if (c.is_radical) {
        std::string listed;
        for (const auto& p : e.minimal_covers) listed += vars_text(p);
        out.push_back(expect("minimal primes by subset enumeration", c.minimal_primes == e.minimal_covers,
                             listed));
      }
    } else {
      out.push_back(skip("height by subset enumeration", "needs n <= 12"));
    }
  }

  if (report.strata && report.witness) {
    std::vector<std::size_t> used;
    for (const auto& alpha : report.witness->f_prime) {
      for (std::size_t i = 0; i < n; ++i) {
        if (alpha[i] != 0) used.push_back(i);
      }
    }
    if (used.size() <= 12) {
      std::size_t singular = 0;
      const std::uint32_t total = 1u << used.size();
      for (std::uint32_t s = 0; s < total; ++s) {
        std::vector<bool> zero(n, false);
        for (std::size_t k = 0; k < used.size(); ++k) zero[used[k]] = (s >> k) & 1u;
        // Every partial derivative monomial must vanish on the pattern.
        bool all_vanish = true;
        for (const auto& alpha : report.witness->f_prime) {
          for (std::size_t i = 0; i < n && all_vanish; ++i) {
            if (alpha[i] == 0) continue;
            bool vanishes = false;
            for (std::size_t j = 0; j < n; ++j) {
              const Natural e = alpha[j] - (i == j ? 1 : 0);
              if (e != 0 && zero[j]) vanishes = true;
            }
            all_vanish = all_vanish && vanishes;
          }
        }
        if (all_vanish) ++singular;
      }
      const auto& h = report.strata->holonomicity;
      out.push_back(expect("stratum count by zero-pattern enumeration", h.stratum_count == Natural(total),
                           std::to_string(total)));
      out.push_back(expect("singular strata by zero-pattern enumeration", h.singular_count == Natural(singular),
                           std::to_string(singular)));
    } else {
      out.push_back(skip("strata by zero-pattern enumeration", "needs at most 12 used variables"));
    }
  }

  std::mt19937_64 rng(seed);
  bool equivariant = true;
  std::string detail;
  for (std::size_t sample = 0; sample < permutation_samples && equivariant; ++sample) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    ExponentSet moved;
    for (const auto& alpha : F) moved.insert(permute(alpha, perm));
    const SupportSet permuted(n, std::move(moved));
    const JacobianTest t = test_jacobian(permuted);
    ExponentSet expected;
    for (const auto& g : min_gens) expected.insert(permute(g, perm));
    const ExponentSet got = brute_min_generators(n, permuted.elements());
    if (t.rank != report.rank || t.mu != report.mu || t.is_jacobian != report.is_jacobian ||
        got != expected) {
      equivariant = false;
      std::ostringstream s;
      s << "permutation";
      for (auto p : perm) s << " " << p + 1;
      detail = s.str();
    }
  }
  out.push_back(expect("invariance under variable permutations (seed " + std::to_string(seed) + ")",
                       equivariant, detail));
  return out;
}

}  // namespace tsj::oracle
