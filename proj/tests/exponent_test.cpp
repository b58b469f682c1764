#include <doctest.h>

#include <random>

#include "support/generators.hpp"
#include "support/reference.hpp"
#include "tsj/error.hpp"
#include "tsj/exponent.hpp"

using tsj::Exponent;
using tsj::ExponentSet;
using tsj::SupportSet;

namespace {

SupportSet whitney() { return SupportSet(3, {Exponent{2, 0, 0}, Exponent{0, 2, 1}}); }

}  // namespace

TEST_CASE("graded-lex order compares degree first") {
  CHECK(Exponent{1, 0, 0} < Exponent{0, 1, 1});
  CHECK(Exponent{0, 1, 1} < Exponent{0, 2, 0});
  CHECK(Exponent{0, 0, 3} < Exponent{1, 1, 1});
  CHECK(Exponent{1, 0} != Exponent{0, 1});
  CHECK(to_string(ExponentSet{{0, 2, 0}, {1, 0, 0}, {0, 1, 1}}) == "{(1,0,0), (0,1,1), (0,2,0)}");
}

TEST_CASE("exponent basics") {
  const Exponent a{0, 2, 1};
  CHECK(a.degree() == 3);
  CHECK(a.support() == tsj::VariableSet{1, 2});
  CHECK_FALSE(a.is_squarefree());
  CHECK(Exponent{1, 0, 1}.is_squarefree());
  CHECK(Exponent::zero(2).is_zero());
  CHECK(Exponent::unit(3, 1) == Exponent{0, 1, 0});
  CHECK(Exponent{0, 1, 1}.divides(Exponent{1, 2, 3}));
  CHECK_FALSE(Exponent{0, 2, 0}.divides(Exponent{1, 1, 3}));
  CHECK(a + Exponent{1, 0, 0} == Exponent{1, 2, 1});
  const std::vector<std::size_t> perm{2, 0, 1};
  CHECK(tsj::permute(a, perm) == Exponent{2, 1, 0});
}

TEST_CASE("partial") {
  CHECK(tsj::partial(Exponent{2, 0, 0}, 0) == Exponent{1, 0, 0});
  CHECK_FALSE(tsj::partial(Exponent{0, 2, 1}, 0).has_value());
  CHECK(tsj::partial(Exponent{0, 2, 1}, 2) == Exponent{0, 2, 0});
  CHECK_THROWS_AS(tsj::partial(Exponent{1, 0}, 2), tsj::InvalidArgument);
}

TEST_CASE("derive_all") {
  CHECK(tsj::derive_all(whitney()) == ExponentSet{{1, 0, 0}, {0, 1, 1}, {0, 2, 0}});
  CHECK(tsj::derive_all(SupportSet(2, {Exponent{1, 0}})) == ExponentSet{{0, 0}});
  const SupportSet f(2, {Exponent{2, 1}, Exponent{1, 2}});
  CHECK(tsj::derive_all(f) == ref::exponents(ref::derivatives(ref::vecs(f.elements()))));
  CHECK(tsj::derive_all(f) == ExponentSet{{1, 1}, {2, 0}, {0, 2}});
}

TEST_CASE("minimal_generators") {
  CHECK(tsj::minimal_generators(3, {{1, 0, 0}, {0, 1, 1}, {0, 2, 0}}).generators() ==
        ExponentSet{{1, 0, 0}, {0, 1, 1}, {0, 2, 0}});
  CHECK(tsj::minimal_generators(2, {{1, 0}, {2, 0}, {1, 1}}).generators() == ExponentSet{{1, 0}});
  const ExponentSet g{{2, 0}, {0, 1}, {1, 1}};
  CHECK(tsj::minimal_generators(2, g).generators() == ref::exponents(ref::minimal(ref::vecs(g))));
  CHECK(tsj::minimal_generators(2, g).mu() == 2);
}

TEST_CASE("contains") {
  const auto ideal = tsj::minimal_generators(3, {{1, 0, 0}, {0, 1, 1}, {0, 2, 0}});
  CHECK(tsj::contains(ideal, Exponent{1, 2, 3}));
  CHECK_FALSE(tsj::contains(ideal, Exponent{0, 1, 0}));
  const auto unit = tsj::minimal_generators(2, {{0, 0}});
  CHECK(unit.is_unit());
  CHECK(tsj::contains(unit, Exponent{0, 0}));
  CHECK(tsj::contains(unit, Exponent{5, 7}));
}

TEST_CASE("extended_generators agrees with the Jacobian ideal") {
  CHECK(tsj::extended_generators(whitney()).generators() == ExponentSet{{1, 0, 0}, {0, 1, 1}, {0, 2, 0}});
  CHECK(tsj::extended_generators(SupportSet(2, {Exponent{1, 1}})).generators() == ExponentSet{{1, 0}, {0, 1}});
  const SupportSet f(2, {Exponent{3, 0}, Exponent{1, 1}});
  CHECK(tsj::extended_generators(f).generators() == ref::exponents(ref::jacobian_min(ref::vecs(f.elements()))));
  CHECK(tsj::extended_generators(f).generators() == ExponentSet{{1, 0}, {0, 1}});
}

TEST_CASE("support validation") {
  CHECK_THROWS_AS(SupportSet(2, ExponentSet{}), tsj::InvalidSupport);
  CHECK_THROWS_AS(SupportSet(2, {Exponent{0, 0}}), tsj::InvalidSupport);
  CHECK_THROWS_AS(SupportSet(2, {Exponent{1, 0, 0}}), tsj::InvalidSupport);
  CHECK_THROWS_AS(SupportSet(0, {Exponent{}}), tsj::InvalidSupport);
  CHECK(whitney().variables() == tsj::VariableSet{0, 1, 2});
}

TEST_CASE("large exponents stay exact") {
  const tsj::Natural big = tsj::Natural(1) << 100;
  const Exponent a(std::vector<tsj::Natural>{big, 1});
  const SupportSet f(2, {a});
  const auto gens = tsj::jacobian_ideal(f).generators();
  CHECK(gens.size() == 2);
  CHECK(gens.contains(Exponent(std::vector<tsj::Natural>{big - 1, 1})));
  CHECK(gens.contains(Exponent(std::vector<tsj::Natural>{big, 0})));
}

TEST_CASE("Jacobian ideal matches the reference on random supports") {
  gen::Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 1, 5));
    const auto f = gen::random_support(rng, n, static_cast<std::size_t>(gen::uniform(rng, 1, 6)), 4);
    const auto support = gen::support(f);
    const auto ideal = tsj::jacobian_ideal(support);
    REQUIRE(ideal.generators() == ref::exponents(ref::jacobian_min(f)));
    CHECK(tsj::extended_generators(support) == ideal);
    for (const auto& d : ref::derivatives(f)) CHECK(tsj::contains(ideal, ref::exponent(d)));
  }
}
