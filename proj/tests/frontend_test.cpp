#include <doctest.h>

#include <json.hpp>

#include "support/generators.hpp"
#include "tsj/analysis.hpp"
#include "tsj/error.hpp"
#include "tsj/parser.hpp"
#include "tsj/report.hpp"

using tsj::Exponent;
using tsj::Rational;

namespace {

tsj::Polynomial::Terms terms(std::initializer_list<std::pair<const Exponent, Rational>> list) { return list; }

}  // namespace

TEST_CASE("parse letters in order of appearance") {
  const auto p = tsj::parse_polynomial("x^2 + y^2*z");
  CHECK(p.n == 3);
  CHECK(p.variable_names == std::vector<std::string>{"x", "y", "z"});
  CHECK(p.polynomial.terms() == terms({{{2, 0, 0}, 1}, {{0, 2, 1}, 1}}));
  const auto q = tsj::parse_polynomial("z*y - y^3");
  CHECK(q.variable_names == std::vector<std::string>{"z", "y"});
  CHECK(q.polynomial.terms() == terms({{{1, 1}, 1}, {{0, 3}, -1}}));
}

TEST_CASE("parse indexed variables and coefficients") {
  const auto p = tsj::parse_polynomial("3*x1");
  CHECK(p.n == 1);
  CHECK(p.polynomial.terms() == terms({{{1}, 3}}));
  const auto q = tsj::parse_polynomial(" 3/2 * x3^2 -x1*x1 ");
  CHECK(q.n == 3);
  CHECK(q.variable_names == std::vector<std::string>{"x1", "x2", "x3"});
  CHECK(q.polynomial.terms() == terms({{{0, 0, 2}, Rational(3, 2)}, {{2, 0, 0}, -1}}));
  const auto r = tsj::parse_polynomial("x^2 + 2*x*y + y^2");
  CHECK(r.polynomial.term_count() == 3);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(tsj::parse_polynomial(""), tsj::ParseError);
  CHECK_THROWS_AS(tsj::parse_polynomial("x^"), tsj::ParseError);
  CHECK_THROWS_AS(tsj::parse_polynomial("x + + y"), tsj::ParseError);
  CHECK_THROWS_AS(tsj::parse_polynomial("x y"), tsj::ParseError);
  CHECK_THROWS_AS(tsj::parse_polynomial("x + x1"), tsj::ParseError);
  CHECK_THROWS_AS(tsj::parse_polynomial("x1 + y2"), tsj::ParseError);
  CHECK_THROWS_AS(tsj::parse_polynomial("x0"), tsj::ParseError);
  CHECK_THROWS_AS(tsj::parse_polynomial("1/0*x"), tsj::ParseError);
  CHECK_THROWS_AS(tsj::parse_polynomial("x + 1"), tsj::InvalidSupport);
  CHECK_THROWS_AS(tsj::parse_polynomial("x - x"), tsj::InvalidSupport);
  CHECK_THROWS_AS(tsj::parse_polynomial("0"), tsj::InvalidSupport);
  CHECK_THROWS_AS(tsj::parse_polynomial("5"), tsj::InvalidSupport);
  try {
    tsj::parse_polynomial("x + $");
    FAIL("expected ParseError");
  } catch (const tsj::ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("monomiality certificate") {
  using tsj::MonomialityCertificate;
  CHECK(tsj::syntactic_monomiality_certificate(tsj::parse_polynomial("x^2 + y^2*z")) == MonomialityCertificate::Certified);
  CHECK(tsj::syntactic_monomiality_certificate(tsj::parse_polynomial("x^2 + 2*x*y + y^2")) == MonomialityCertificate::Unknown);
  CHECK(tsj::syntactic_monomiality_certificate(tsj::parse_polynomial("x^3")) == MonomialityCertificate::Certified);
}

TEST_CASE("JSON input") {
  const auto in = tsj::input_from_json(R"({"n":3,"support":[[2,0,0],[0,2,"1"]]})");
  CHECK(in.dimension() == 3);
  CHECK(in.support.elements() == tsj::ExponentSet{{2, 0, 0}, {0, 2, 1}});
  CHECK_FALSE(in.polynomial.has_value());
  CHECK_THROWS_AS(tsj::input_from_json("{"), tsj::ParseError);
  CHECK_THROWS_AS(tsj::input_from_json(R"({"n":0,"support":[]})"), tsj::ParseError);
  CHECK_THROWS_AS(tsj::input_from_json(R"({"n":2,"support":[[1]]})"), tsj::InvalidSupport);
  CHECK_THROWS_AS(tsj::input_from_json(R"({"n":2,"support":[[1,-1]]})"), tsj::ParseError);
  CHECK_THROWS_AS(tsj::input_from_json(R"({"n":2,"support":[[1,0],[1,0]]})"), tsj::InvalidSupport);
  CHECK_THROWS_AS(tsj::input_from_json(R"({"n":2,"support":[[0,0]]})"), tsj::InvalidSupport);
}

TEST_CASE("analyze x*y") {
  const auto r = tsj::analyze(tsj::input_from_polynomial("x*y"));
  CHECK(r.is_jacobian);
  CHECK(*r.ts_polynomial == "x*y");
  CHECK(*r.weights == tsj::WeightVector({Rational(1, 2), Rational(1, 2)}));
  CHECK(r.classification->is_reduced_normal_crossing);
}

TEST_CASE("analyze a non-Jacobian support") {
  const auto r = tsj::analyze(tsj::input_from_polynomial("x^2*y + x*y^2"));
  CHECK_FALSE(r.is_jacobian);
  CHECK(r.mu == 3);
  CHECK(r.rank == 2);
  CHECK_FALSE(r.witness.has_value());
  CHECK_FALSE(r.strata.has_value());
  const auto doc = nlohmann::json::parse(tsj::analysis_json(r));
  CHECK_FALSE(doc.contains("ts_witness"));
  CHECK(doc["is_jacobian"] == false);
}

TEST_CASE("analysis JSON report") {
  const auto r = tsj::analyze(tsj::input_from_polynomial("x^2 + y^2*z"));
  const auto doc = nlohmann::json::parse(tsj::analysis_json(r, {.strata_detail = true, .integer_weights = true}));
  CHECK(doc["schema"] == "tsj/1");
  CHECK(doc["min_gens"] == nlohmann::json::parse("[[1,0,0],[0,1,1],[0,2,0]]"));
  CHECK(doc["weights"] == nlohmann::json::parse(R"(["1/2","1/3","1/3"])"));
  CHECK(doc["integer_weights"]["degree"] == 6);
  CHECK(doc["ts_witness"]["psi"][0]["variable"] == 1);
  CHECK(doc["strata"]["descriptors"].size() == 8);
  CHECK(doc["classification"]["height"] == 2);
  for (const auto& c : doc["certificates"]) CHECK(c["status"] != "failed");
  CHECK(tsj::analysis_json(r) == tsj::analysis_json(tsj::analyze(tsj::input_from_polynomial("x^2 + y^2*z"))));
}

TEST_CASE("large exponents render as strings") {
  const auto r = tsj::analyze(tsj::input_from_json(R"({"n":1,"support":[["100000000000000000000000"]]})"));
  const auto doc = nlohmann::json::parse(tsj::analysis_json(r));
  CHECK(doc["min_gens"][0][0] == "99999999999999999999999");
  CHECK(r.is_jacobian);
}

TEST_CASE("ts_polynomial round trip") {
  gen::Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 1, 6));
    auto f = gen::ts_support(rng, n, 3, 4);
    const auto r = tsj::analyze(tsj::input_from_json([&] {
      nlohmann::json doc{{"n", n}, {"support", nlohmann::json::array()}};
      for (const auto& a : f) doc["support"].push_back(a);
      return doc.dump();
    }()));
    REQUIRE(r.is_jacobian);
    // Pad with the last variable so unused trailing coordinates survive.
    const std::string text = *r.ts_polynomial + " + x" + std::to_string(n) + "^9";
    const auto parsed = tsj::parse_polynomial(text);
    tsj::Polynomial expected(n);
    for (const auto& a : r.witness->f_prime) expected.add_term(a, 1);
    std::vector<tsj::Natural> pad(n, tsj::Natural(0));
    pad[n - 1] = 9;
    expected.add_term(Exponent(pad), 1);
    CHECK(parsed.polynomial == expected);
  }
}
