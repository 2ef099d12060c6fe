#include "doctest.h"

#include "wickgit/io.hpp"

using namespace wickgit;

TEST_CASE("tensor serialization round-trips") {
  Tensor t(3, 2);
  t.at({0, 1}) = 1.5;
  t.at({2, 2}) = -0.25;
  const std::string text = tensor_to_json(t);
  const Tensor back = tensor_from_json(text);
  CHECK(back.n() == 3);
  CHECK(back.valence() == 2);
  CHECK((back - t).norm() == 0.0);
  // Canonical output: serializing twice gives identical bytes.
  CHECK(tensor_to_json(back) == text);
}

TEST_CASE("matrix serialization round-trips") {
  Mat m(2, 3);
  m << 1, 2, 3, -4, 0.5, 6;
  const Mat back = matrix_from_json(matrix_to_json(m));
  CHECK((back - m).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("malformed JSON reports a position") {
  try {
    tensor_from_json("{\"n\": 3, \"valence\": ");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    const std::string what = e.what();
    CHECK(what.find_first_of("0123456789") != std::string::npos);
  }
}

TEST_CASE("schema violations name the offending field") {
  try {
    tensor_from_json("{\"n\": 3}");
    FAIL("expected a schema error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("valence") != std::string::npos);
  }
}

TEST_CASE("tensors with complex components are rejected") {
  const char* text =
      "{\"n\": 2, \"valence\": 1, \"components\": [{\"idx\": [1], \"re\": 1.0, \"im\": 2.0}]}";
  CHECK_THROWS_AS(tensor_from_json(text), Error);
}

TEST_CASE("real form loader builds the standard embedding") {
  const RealForm f = real_form_from_json(
      "{\"n\": 4, \"p\": 3, \"q\": 1, \"embedding\": \"standard\"}");
  CHECK(f.n == 4);
  CHECK(f.p == 3);
  CHECK(f.q == 1);
  CHECK(f.standard);
  CHECK(f.dim() == 6);
}

TEST_CASE("triple loader checks dimension agreement") {
  const CompatibleTriple t =
      triple_from_json("{\"p1\": 2, \"q1\": 1, \"p2\": 1, \"q2\": 2}");
  CHECK(t.f1.n == 3);
  CHECK(t.compact.q == 3);
  CHECK_THROWS_AS(triple_from_json("{\"p1\": 2, \"q1\": 1, \"p2\": 2, \"q2\": 2}"), Error);
}

TEST_CASE("walker metric files parse into polynomial data") {
  const MetricFile mf = metric_from_json(
      "{\"kind\": \"walker\", \"A\": \"V\", \"B\": \"2*v^4\", \"C\": \"0\"}");
  CHECK(mf.kind == "walker");
  REQUIRE(mf.walker.has_value());
  CHECK(mf.walker->A == parse_poly("V", {"u", "v", "U", "V"}));
  CHECK(mf.walker->C.is_zero());
}

TEST_CASE("frame metric files validate their structure constants") {
  const char* good = R"({
    "kind": "frame", "dim": 3,
    "c": [{"k": 3, "i": 1, "j": 2, "value": 1},
          {"k": 1, "i": 2, "j": 3, "value": 1},
          {"k": 2, "i": 3, "j": 1, "value": 1}],
    "eta": [[2, 0, 0], [0, 2, 0], [0, 0, 2]]
  })";
  const MetricFile mf = metric_from_json(good);
  REQUIRE(mf.frame.has_value());
  CHECK(mf.frame->dim == 3);
  CHECK(mf.frame->structure(2, 0, 1) == Rational(1));
  CHECK(mf.frame->structure(2, 1, 0) == Rational(-1));

  // Breaking Jacobi must be caught at load time: the extra [e1,e2] term
  // leaves the cyclic sum at -e1.
  const char* bad = R"({
    "kind": "frame", "dim": 3,
    "c": [{"k": 3, "i": 1, "j": 2, "value": 1},
          {"k": 1, "i": 2, "j": 3, "value": 1},
          {"k": 2, "i": 3, "j": 1, "value": 1},
          {"k": 2, "i": 1, "j": 2, "value": 1}],
    "eta": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
  })";
  CHECK_THROWS_AS(metric_from_json(bad), Error);
}

TEST_CASE("builtin coordinate metrics come back ready to evaluate") {
  const MetricFile mf =
      metric_from_json("{\"kind\": \"coord-builtin\", \"name\": \"sphere\"}");
  REQUIRE(mf.coord.has_value());
  Vec p(2);
  p << 1.0, 0.5;
  CHECK(mf.coord->eval(p).rows() == 2);
  CHECK_THROWS_AS(metric_from_json("{\"kind\": \"coord-builtin\", \"name\": \"torus\"}"), Error);
}

TEST_CASE("report envelope carries verb, status and versions") {
  const std::string r1 = report_envelope("roots", "ok", "{\"rank\": 2}", 7);
  const std::string r2 = report_envelope("roots", "ok", "{\"rank\": 2}", 7);
  CHECK(r1 == r2);
  CHECK(r1.find("\"wickgit-report/1\"") != std::string::npos);
  CHECK(r1.find("\"roots\"") != std::string::npos);
  CHECK(r1.find("\"seed\": 7") != std::string::npos);
}

TEST_CASE("orbit reports serialize the verdict and certificate") {
  const RepAction rep = sl2_adjoint_action();
  Mat nil(2, 2);
  nil << 0, 1, 0, 0;
  const OrbitReport r = kempf_ness_flow(rep.from_matrix(nil), rep);
  const std::string j = orbit_report_to_json(r);
  CHECK(j.find("non_closed") != std::string::npos);
  CHECK(j.find("zero_limit") != std::string::npos);
}
