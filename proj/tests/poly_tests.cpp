#include "doctest.h"

#include "wickgit/poly.hpp"

using namespace wickgit;

TEST_CASE("parse, arithmetic and exact cancellation") {
  const std::vector<std::string> vars = {"u", "v"};
  const Poly p = parse_poly("2*v^2 - 1/3*u*v + 7", vars);
  const Poly q = parse_poly("1/3*u*v", vars);
  const Poly r = p + q;
  CHECK(r == parse_poly("2*v^2 + 7", vars));
  CHECK((r - p) - q == Poly());
  CHECK(p.total_degree() == 2);
}

TEST_CASE("product expands correctly") {
  const std::vector<std::string> vars = {"x"};
  const Poly a = parse_poly("x + 1", vars);
  const Poly b = parse_poly("x - 1", vars);
  CHECK(a * b == parse_poly("x^2 - 1", vars));
  CHECK(a.pow(2) == parse_poly("x^2 + 2*x + 1", vars));
}

TEST_CASE("derivative follows the power rule") {
  const std::vector<std::string> vars = {"v", "V"};
  const Poly b = parse_poly("2*v^4", vars);
  CHECK(b.derivative("v") == parse_poly("8*v^3", vars));
  CHECK(b.derivative("v").derivative("v") == parse_poly("24*v^2", vars));
  // Parsing drops variables the expression never mentions, so "V" is unknown
  // to b until it is reintroduced.
  CHECK_THROWS_AS(b.derivative("V"), Error);
  CHECK(b.including_variables({"V"}).derivative("V").is_zero());
  CHECK_THROWS_AS(b.derivative("w"), Error);
}

TEST_CASE("polynomials over different variable sets merge") {
  const Poly a = parse_poly("u^2", {"u"});
  const Poly b = parse_poly("3*V", {"V"});
  const Poly s = a + b;
  CHECK(s.variables().size() == 2);
  CHECK(s.eval({{"u", Rational(2)}, {"V", Rational(1)}}) == Rational(7));
}

TEST_CASE("exact and floating evaluation agree") {
  const Poly p = parse_poly("1/2*x^2 - 3*x + 1", {"x"});
  CHECK(p.eval({{"x", Rational(4)}}) == Rational(-3));
  CHECK(p.eval_double({{"x", 4.0}}) == doctest::Approx(-3.0));
}
