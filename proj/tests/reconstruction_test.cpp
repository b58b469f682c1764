#include <doctest.h>

#include "support/generators.hpp"
#include "support/reference.hpp"
#include "tsj/error.hpp"
#include "tsj/reconstruction.hpp"

using tsj::Exponent;
using tsj::ExponentSet;
using tsj::SupportSet;

TEST_CASE("reconstruct the Whitney umbrella") {
  const SupportSet f(3, {Exponent{2, 0, 0}, Exponent{0, 2, 1}});
  const auto w = tsj::reconstruct(f);
  CHECK(w.f_prime_set() == f.elements());
  CHECK(w.psi == std::map<std::size_t, Exponent>{{0, {1, 0, 0}}, {1, {0, 1, 1}}, {2, {0, 2, 0}}});
  CHECK(tsj::verify_witness(f, w));
  CHECK(tsj::ts_polynomial(w) == "x1^2 + x2^2*x3");
  CHECK(w.backtracks == 0);
  REQUIRE(w.steps.size() == 2);
  CHECK(w.steps[0].generator_degree == 1);
  CHECK(w.steps[1].generator_degree == 2);
}

TEST_CASE("reconstruct single mixed monomials") {
  const SupportSet xy(2, {Exponent{1, 1}});
  const auto w = tsj::reconstruct(xy);
  CHECK(w.f_prime_set() == ExponentSet{{1, 1}});
  CHECK(tsj::ts_polynomial(w) == "x1*x2");

  const SupportSet quad(2, {Exponent{2, 0}, Exponent{1, 1}, Exponent{0, 2}});
  const auto q = tsj::reconstruct(quad);
  CHECK(q.f_prime_set() == ExponentSet{{1, 1}});
  CHECK(ref::jacobian_min(ref::vecs(q.f_prime_set())) == ref::jacobian_min(ref::vecs(quad.elements())));
  CHECK(tsj::verify_witness(quad, q));
}

TEST_CASE("verify_witness rejects bad witnesses") {
  const SupportSet whitney(3, {Exponent{2, 0, 0}, Exponent{0, 2, 1}});
  tsj::TSWitness empty;
  empty.n = 3;
  CHECK_FALSE(tsj::verify_witness(whitney, empty));

  const SupportSet quad(2, {Exponent{2, 0}, Exponent{1, 1}, Exponent{0, 2}});
  tsj::TSWitness partial;
  partial.n = 2;
  partial.f_prime = {Exponent{2, 0}};
  partial.psi = {{0, Exponent{1, 0}}};
  partial.order = {0, 1};
  CHECK(ref::jacobian_min({{2, 0}}) != ref::jacobian_min(ref::vecs(quad.elements())));
  CHECK_FALSE(tsj::verify_witness(quad, partial));
  CHECK(tsj::witness_defect(quad, partial).has_value());

  tsj::TSWitness overlapping = tsj::reconstruct(quad);
  overlapping.f_prime.push_back(Exponent{2, 0});
  CHECK_FALSE(tsj::verify_witness(quad, overlapping));
}

TEST_CASE("ts_polynomial") {
  tsj::TSWitness w;
  w.n = 3;
  w.f_prime = {Exponent{3, 0, 0}, Exponent{0, 2, 2}};
  w.order = {0, 1, 2};
  CHECK(tsj::ts_polynomial(w) == "x1^3 + x2^2*x3^2");
  const std::vector<std::string> names{"x", "y", "z"};
  CHECK(tsj::ts_polynomial(w, names) == "x^3 + y^2*z^2");
}

TEST_CASE("reconstruct rejects non-Jacobian supports") {
  CHECK_THROWS_AS(tsj::reconstruct(SupportSet(2, {Exponent{2, 1}, Exponent{1, 2}})), tsj::PreconditionViolated);
}

TEST_CASE("Jacobian support without a Thom-Sebastiani subset") {
  // xy + xz + yz: every variable reaches two of e1, e2, e3, so rank = mu = 3,
  // yet no subset of F has disjoint supports and all three generators.
  const std::set<ref::Vec> f{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
  const auto support = gen::support(f);
  CHECK(tsj::is_jacobian(support));
  CHECK(ref::transversal_rank(f) == 3);
  CHECK_FALSE(ref::ts_subset_exists(f));
  CHECK_THROWS_AS(tsj::reconstruct(support), tsj::InternalError);
}

TEST_CASE("reconstruction agrees with subset enumeration") {
  gen::Rng rng(17);
  int jacobian = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 1, 4));
    const auto f = gen::random_support(rng, n, static_cast<std::size_t>(gen::uniform(rng, 1, 6)), 3);
    const auto support = gen::support(f);
    if (!tsj::is_jacobian(support)) continue;
    ++jacobian;
    const bool exists = ref::ts_subset_exists(f);
    if (exists) {
      CHECK(tsj::verify_witness(support, tsj::reconstruct(support)));
    } else {
      CHECK_THROWS_AS(tsj::reconstruct(support), tsj::InternalError);
    }
  }
  CHECK(jacobian > 100);
}

TEST_CASE("reconstruction with noise and unused variables") {
  // x^3 + y^2 with noise x^2*y, which lies over J = <x^2, y>.
  const SupportSet f(3, {Exponent{3, 0, 0}, Exponent{0, 2, 0}, Exponent{2, 1, 0}});
  const auto w = tsj::reconstruct(f);
  CHECK(tsj::verify_witness(f, w));
  CHECK(w.f_prime_set() == ExponentSet{{3, 0, 0}, {0, 2, 0}});
  CHECK(w.order.size() == 3);
  CHECK(w.order.back() == 2);
}

TEST_CASE("random Thom-Sebastiani supports reconstruct") {
  gen::Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 1, 6));
    auto f = gen::ts_support(rng, n, 3, 4);
    f = gen::with_noise(rng, f, static_cast<std::size_t>(gen::uniform(rng, 0, 2)));
    const auto support = gen::support(f);
    const auto w = tsj::reconstruct(support);
    CHECK(tsj::verify_witness(support, w));
    const auto fp = ref::vecs(w.f_prime_set());
    CHECK(ref::disjoint_supports(fp));
    CHECK(ref::jacobian_min(fp) == ref::jacobian_min(f));
  }
}
