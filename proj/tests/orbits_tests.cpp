#include "doctest.h"

#include "wickgit/orbits.hpp"

using namespace wickgit;

namespace {

Mat sl2(double a, double b, double c) {
  Mat m(2, 2);
  m << a, b, c, -a;
  return m;
}

}  // namespace

TEST_CASE("rotation and boost generators are minimal") {
  const RepAction rep = sl2_adjoint_action();
  CHECK(is_minimal(rep.from_matrix(sl2(0, 1, -1)), rep));
  CHECK(is_minimal(rep.from_matrix(sl2(1, 0, 0)), rep));
  CHECK(!is_minimal(rep.from_matrix(sl2(0, 1, 0)), rep));
}

TEST_CASE("flow on a nilpotent certifies the collapse to zero") {
  const RepAction rep = sl2_adjoint_action();
  const OrbitReport r = kempf_ness_flow(rep.from_matrix(sl2(0, 1, 0)), rep);
  CHECK(r.verdict == OrbitReport::Verdict::NonClosed);
  CHECK(r.certificate == "zero_limit");
  REQUIRE(r.limit_vector.has_value());
  CHECK(r.limit_vector->norm() == 0.0);
}

TEST_CASE("flow on a minimal vector returns it unchanged") {
  const RepAction rep = sl2_adjoint_action();
  const Vec v = rep.from_matrix(sl2(1, 0, 0));
  const OrbitReport r = kempf_ness_flow(v, rep);
  CHECK(r.verdict == OrbitReport::Verdict::Closed);
  CHECK(r.certificate == "minimal_gradient");
  CHECK(r.iterations == 0);
  REQUIRE(r.minimal_vector.has_value());
  CHECK((*r.minimal_vector - v).norm() == 0.0);
}

TEST_CASE("flow on a sheared semisimple element stays on the orbit") {
  const RepAction rep = sl2_adjoint_action();
  Mat g(2, 2);
  g << 1, 3, 0, 1;
  const Mat x = g * sl2(1, 0, 0) * g.inverse();
  const OrbitReport r = kempf_ness_flow(rep.from_matrix(x), rep);
  CHECK(r.verdict == OrbitReport::Verdict::Closed);
  REQUIRE(r.minimal_vector.has_value());
  // The invariants ride along the flow.
  REQUIRE(r.char_poly_start.size() == r.char_poly_end.size());
  for (size_t i = 0; i < r.char_poly_start.size(); ++i)
    CHECK(std::abs(r.char_poly_start[i] - r.char_poly_end[i]) < 1e-8);
  CHECK(is_minimal(*r.minimal_vector, rep));
}

TEST_CASE("adjoint invariants separate different semisimple orbits") {
  const InvariantRecord a = adjoint_invariants(sl2(1, 0, 0));
  const InvariantRecord b = adjoint_invariants(sl2(2, 0, 0));
  const InvariantRecord c = adjoint_invariants(sl2(1, 0, 0));
  CHECK(!same_invariants(a, b));
  CHECK(same_invariants(a, c));
}

TEST_CASE("degeneration limit keeps the flat directions and rejects growth") {
  const RealForm f = build_o_pq(2, 2);
  const BoostGenerators bg = boost_generators(restricted_roots(f, maximal_abelian(f)));
  // Metric part (weight zero) plus a decaying elementary part.
  Tensor eta(4, 2);
  for (int a = 0; a < 4; ++a) eta.at({a, a}) = f.eta(a);
  Tensor mixed = eta;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      mixed.at({a, b}) += 0.5 * bg.frame(a, 0) * bg.frame(b, 0);
  const BoostWeightDecomp d = bw_decompose(mixed, bg);
  REQUIRE(d.support.size() == 2);

  Vec lam(2);
  const std::vector<int>& other =
      d.support[0] == std::vector<int>{0, 0} ? d.support[1] : d.support[0];
  lam << other[0], other[1];
  // Flowing against the nonzero weight kills exactly that part.
  const Tensor limit = degeneration_limit(d, -lam);
  CHECK((limit - eta).norm() < 1e-9);
  // Flowing with it diverges.
  CHECK_THROWS_AS(degeneration_limit(d, lam), Error);
}

TEST_CASE("lorentz canonical forms are conjugation invariants") {
  const RealForm f = build_o_pq(3, 1);
  Mat x = Mat::Zero(4, 4);
  x(0, 1) = -2.0; x(1, 0) = 2.0;   // rotation parameter 2 in the (1,2)-plane
  x(2, 3) = 0.7;  x(3, 2) = 0.7;   // boost along the rotation kernel
  const CanonicalForm c1 = lorentz_canonical_form(x, f);
  REQUIRE(c1.rotation_params.size() == 1);
  CHECK(c1.rotation_params[0] == doctest::Approx(2.0));
  REQUIRE(c1.kernel_vector_norms.size() == 1);
  CHECK(c1.kernel_vector_norms[0] == doctest::Approx(0.7));

  Mat k = Mat::Identity(4, 4);
  k.topLeftCorner(3, 3) = random_special_orthogonal(3, 5);
  const CanonicalForm c2 = lorentz_canonical_form(k * x * k.transpose(), f);
  CHECK((c1.residual - c2.residual).cwiseAbs().maxCoeff() < 1e-8);
  CHECK(c2.rotation_params[0] == doctest::Approx(2.0));

  // The conjugator actually produces the canonical matrix.
  CHECK((c1.conjugator * x * c1.conjugator.inverse() - c1.residual)
            .cwiseAbs()
            .maxCoeff() < 1e-8);
}

TEST_CASE("lorentz canonical form rejects non-minimal input") {
  const RealForm f = build_o_pq(3, 1);
  Mat x = Mat::Zero(4, 4);
  x(0, 1) = -1.0; x(1, 0) = 1.0;
  x(0, 3) = 0.4;  x(3, 0) = 0.4;  // boost leaning into the rotation plane
  CHECK_THROWS_AS(lorentz_canonical_form(x, f), Error);
}

TEST_CASE("real orbit counts: two for rotations, one otherwise") {
  CHECK(sl2_real_orbit_count(sl2(0, 1, -1)).count == 2);
  CHECK(sl2_real_orbit_count(sl2(1, 0, 0)).count == 1);
  CHECK(sl2_real_orbit_count(sl2(0, 1, 1)).count == 1);
}

TEST_CASE("swapped rotation blocks: one compact orbit, two K x K orbits") {
  const SwappedBlockReport r = swapped_block_example(1.0, 2.0, 2, 2);
  CHECK(r.same_compact_orbit);
  CHECK(!r.same_kk_orbit);
}

TEST_CASE("intersect_with_compact returns a minimal witness") {
  const RepAction rep = sl2_adjoint_action();
  RepAction compact = rep;
  compact.p_basis.clear();

  SUBCASE("an already-minimal seed comes back unchanged") {
    const Vec v = rep.from_matrix(sl2(0, 0.8, -0.8));
    const Vec w = intersect_with_compact(v, rep, compact);
    CHECK((w - v).norm() == 0.0);
  }
  SUBCASE("a generic closed orbit yields a minimal point") {
    Mat g(2, 2);
    g << 1, 0, -2, 1;
    const Vec v = rep.from_matrix(g * sl2(0.5, 0, 0) * g.inverse());
    const Vec w = intersect_with_compact(v, rep, compact);
    CHECK(is_minimal(w, rep));
  }
  SUBCASE("non-closed orbits are rejected") {
    const Vec v = rep.from_matrix(sl2(0, 1, 0));
    CHECK_THROWS_AS(intersect_with_compact(v, rep, compact), Error);
  }
}

TEST_CASE("hermitian invariance holds on a standard triple") {
  const CompatibleTriple t = make_standard_triple(2, 1, 1, 2);
  const HermitianReport r1 = check_compatible_hermitian(t, 1);
  INFO(r1.violation);
  CHECK(r1.ok);
  const HermitianReport r2 = check_compatible_hermitian(t, 2);
  INFO(r2.violation);
  CHECK(r2.ok);
}
