#include "doctest.h"

#include <cmath>
#include <map>

#include "wickgit/geometry.hpp"

using namespace wickgit;

namespace {

Poly wpoly(const std::string& text) { return parse_poly(text, {"u", "v", "U", "V"}); }

// The Walker line element in its coordinate chart, for cross-checking the
// exact engine against finite differences.
CoordMetric walker_coord_metric(const WalkerSpec& w) {
  CoordMetric m;
  m.dim = 4;
  m.name = "walker-coord";
  m.eval = [w](const Vec& x) {
    const std::map<std::string, double> at = {
        {"u", x(0)}, {"v", x(1)}, {"U", x(2)}, {"V", x(3)}};
    Mat g = Mat::Zero(4, 4);
    g(0, 0) = 2.0 * w.A.eval_double(at);
    g(0, 1) = g(1, 0) = 1.0;
    g(0, 2) = g(2, 0) = w.C.eval_double(at);
    g(2, 2) = 2.0 * w.B.eval_double(at);
    g(2, 3) = g(3, 2) = 1.0;
    return g;
  };
  return m;
}

double trace_invariant(const CurvatureData& c) {
  const Mat ric_up = c.metric.inverse() * c.ricci;
  return (ric_up * ric_up).trace();
}

}  // namespace

TEST_CASE("su(2) with minus the Killing metric is Einstein with constant 1/4") {
  const FrameMetric m = FrameMetric::su2_sum({Rational(1)});
  m.validate();
  const FrameCurvature fc = lie_group_curvature(m);
  const auto c = fc.einstein_constant();
  REQUIRE(c.has_value());
  CHECK(*c == Rational(1, 4));
  CHECK(fc.scalar == Rational(3, 4));
}

TEST_CASE("the split partner keeps the Einstein constant and flips two signs") {
  const FrameMetric m = wick_rotate_frame_metric(FrameMetric::su2_sum({Rational(1)}));
  m.validate();
  const FrameCurvature fc = lie_group_curvature(m);
  const auto c = fc.einstein_constant();
  REQUIRE(c.has_value());
  CHECK(*c == Rational(1, 4));
  CHECK(form_signature(fc.numeric().metric) == std::make_pair(2, 1));
}

TEST_CASE("two-factor sum stays Einstein only for equal factors") {
  const auto equal = lie_group_curvature(FrameMetric::su2_sum({Rational(1), Rational(1)}));
  REQUIRE(equal.einstein_constant().has_value());
  CHECK(*equal.einstein_constant() == Rational(1, 4));
  const auto skew = lie_group_curvature(FrameMetric::su2_sum({Rational(1), Rational(2)}));
  CHECK(!skew.einstein_constant().has_value());
}

TEST_CASE("flat metric has zero curvature and empty span") {
  Vec d(3);
  d << 1, 1, 1;
  const CurvatureData c = coord_curvature(flat_metric(d), Vec::Zero(3));
  CHECK(c.riemann.norm() < 1e-9);
  CHECK(curvature_span_dim(c) == 0);
}

TEST_CASE("unit sphere: Ric = g, scalar 2, span 1") {
  Vec p(2);
  p << 1.1, 0.4;
  const CurvatureData c = coord_curvature(sphere_metric(), p);
  CHECK((c.ricci - c.metric).cwiseAbs().maxCoeff() < 1e-7);
  CHECK(c.scalar == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(curvature_span_dim(c) == 1);
}

TEST_CASE("Walker curvature: closed-form components") {
  const WalkerSpec w = WalkerSpec::parse("2*v^2 + 3*V^2", "5*v^2 + 7*V^2", "0");
  const WalkerCurvature wc = walker_curvature(w);
  CHECK(wc.curv(0, 1, 0, 1) == -w.A.derivative("v").derivative("v"));
  CHECK(wc.curv(2, 3, 2, 3) == -w.B.derivative("V").derivative("V"));
  CHECK(wc.curv(0, 3, 0, 3) == -w.A.derivative("V").derivative("V"));
  CHECK(wc.curv(2, 1, 2, 1) == -w.B.derivative("v").derivative("v"));
  const Poly cross = -(w.A.derivative("V") * w.B.derivative("v")) -
                     w.B * w.A.derivative("v").derivative("V");
  CHECK(wc.curv(2, 0, 0, 1) == cross);
}

TEST_CASE("Walker curvature: frozen values") {
  SUBCASE("A = V, B = 2v^4") {
    const WalkerCurvature wc = walker_curvature(WalkerSpec::parse("V", "2*v^4", "0"));
    CHECK(wc.curv(2, 0, 0, 1) == wpoly("-8*v^3"));
    CHECK(wc.curv(0, 1, 0, 1).is_zero());
  }
  SUBCASE("A = 2v^2, B = 3V^2") {
    const WalkerCurvature wc = walker_curvature(WalkerSpec::parse("2*v^2", "3*V^2", "0"));
    CHECK(wc.curv(0, 1, 0, 1) == wpoly("-4"));
    CHECK(wc.curv(2, 3, 2, 3) == wpoly("-6"));
    CHECK(wc.curv(2, 0, 0, 1).is_zero());
  }
}

TEST_CASE("null-coframe index weights follow the counting rule") {
  CHECK(null_frame_weight({0, 1, 0, 1}) == std::vector<int>{0, 0});
  CHECK(null_frame_weight({2, 1, 2, 1}) == std::vector<int>{2, -2});
  CHECK(null_frame_weight({2, 0, 0, 1}) == std::vector<int>{-1, -1});
  CHECK(null_frame_weight({0, 2, 0, 1}) == std::vector<int>{-1, -1});
  CHECK(null_frame_weight({0, 3, 0, 3}) == std::vector<int>{-2, 2});
}

TEST_CASE("weight support of the first example and its block swap") {
  const WalkerSpec w = WalkerSpec::parse("V", "2*v^4", "0");
  const auto support = walker_boost_weights(walker_curvature(w));
  REQUIRE(support.size() == 2);
  CHECK(support[0] == std::vector<int>{-1, -1});
  CHECK(support[1] == std::vector<int>{2, -2});

  const auto swapped = walker_boost_weights(walker_curvature(w.swapped()));
  REQUIRE(swapped.size() == 2);
  CHECK(swapped[0] == std::vector<int>{-2, 2});
  CHECK(swapped[1] == std::vector<int>{-1, -1});
}

TEST_CASE("numeric weight support agrees with the exact one") {
  const WalkerSpec w = WalkerSpec::parse("V", "2*v^4", "0");
  const WalkerCurvature wc = walker_curvature(w);
  Vec p(4);
  p << 0.3, 0.5, 0.7, 0.9;
  CHECK(walker_boost_weights(wc.at(p)) == walker_boost_weights(wc));
}

TEST_CASE("exact Walker engine matches finite differences on scalar invariants") {
  const WalkerSpec w = WalkerSpec::parse("2*v^2 + 3*V^2", "5*v^2 + 7*V^2", "0");
  const WalkerCurvature wc = walker_curvature(w);
  Vec p(4);
  p << 0.2, -0.4, 0.55, 0.8;
  const CurvatureData exact = wc.at(p);
  const CurvatureData fd = coord_curvature(walker_coord_metric(w), p);
  check_curvature_identities(fd, 1e-5);
  CHECK(exact.scalar == doctest::Approx(fd.scalar).epsilon(1e-6));
  CHECK(trace_invariant(exact) == doctest::Approx(trace_invariant(fd)).epsilon(1e-5));

  // Full tensor comparison: push the null-coframe components back to the
  // coordinate frame through dx = S^{-1} e, i.e. expand each coordinate
  // vector in the null frame.
  const std::map<std::string, double> at = {
      {"u", p(0)}, {"v", p(1)}, {"U", p(2)}, {"V", p(3)}};
  Mat S = Mat::Identity(4, 4);
  S(1, 0) = w.A.eval_double(at);
  S(1, 2) = w.C.eval_double(at);
  S(3, 2) = w.B.eval_double(at);
  const Tensor in_coords = exact.riemann.in_frame(S);
  const double scale = std::max(1.0, fd.riemann.norm());
  CHECK((in_coords - fd.riemann).norm() / scale < 1e-6);
}

TEST_CASE("classification of the fourth example is immediate") {
  const WalkerClass cls = walker_classify(WalkerSpec::parse("2*v^2", "3*V^2", "0"));
  CHECK(cls.tag == "W4");
  CHECK(cls.coordinate_tag == "W4");
  CHECK(cls.closed);
  CHECK(cls.flow.verdict == OrbitReport::Verdict::Closed);
  CHECK(cls.flow_agrees);
  CHECK(!cls.sg.strict);
}

TEST_CASE("zero curvature classifies as the trivially closed type") {
  const WalkerClass cls = walker_classify(WalkerSpec::parse("v", "V", "0"));
  CHECK(cls.tag == "W4");
  CHECK(cls.closed);
}

TEST_CASE("the G2 holonomy metric is Ricci-flat at a sample point") {
  Vec p(7);
  p << 2.0, 0.3, 0.7, 0.45, 0.2, 0.6, 0.15;
  const CurvatureData c = coord_curvature(g2_metric(false), p);
  CHECK(c.ricci.cwiseAbs().maxCoeff() < 1e-6);
  CHECK(form_signature(c.metric) == std::make_pair(0, 7));
  const CurvatureData cw = coord_curvature(g2_metric(true), p);
  CHECK(cw.ricci.cwiseAbs().maxCoeff() < 1e-6);
  CHECK(form_signature(cw.metric) == std::make_pair(4, 3));
}

TEST_CASE("holonomy algebra dimension stays within the g2 bound") {
  Vec p(7);
  p << 2.0, 0.3, 0.7, 0.45, 0.2, 0.6, 0.15;
  const int span = curvature_span_dim(coord_curvature(g2_metric(false), p));
  CHECK(span >= 1);
  CHECK(span <= 14);
}

TEST_CASE("both coframes satisfy their Maurer-Cartan equations") {
  Vec p(3);
  p << 0.4, -0.2, 0.9;
  CHECK(maurer_cartan_residual(su2_coframe(), p) < 1e-10);
  CHECK(maurer_cartan_residual(sl2_wick_coframe(), p) < 1e-10);
}

TEST_CASE("g2 chart rejects the singular radius") {
  Vec p(7);
  p << 0.9, 0, 0, 0, 0, 0, 0;
  CHECK_THROWS_AS(g2_metric(false).eval(p), Error);
}
