#include "doctest.h"

#include "wickgit/realforms.hpp"

using namespace wickgit;

TEST_CASE("o(2,1) has the right split dimensions") {
  const RealForm f = build_o_pq(2, 1);
  CHECK(f.n == 3);
  CHECK(f.dim() == 3);
  CHECK(f.dim_t == 1);  // so(2) x so(1)
  CHECK(f.dim_p == 2);
}

TEST_CASE("basis elements are fixed by sigma and split under theta") {
  const RealForm f = build_o_pq(3, 2);
  for (int i = 0; i < f.dim(); ++i) {
    const CMat& x = f.basis[static_cast<size_t>(i)];
    CHECK((f.sigma(x) - x).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((x.transpose() + x).cwiseAbs().maxCoeff() < 1e-12);
    const double expected = i < f.dim_t ? 1.0 : -1.0;
    CHECK((f.theta(x) - expected * x).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("frame basis solves the pseudo-orthogonal equation") {
  const RealForm f = build_o_pq(2, 2);
  const Mat eta = f.eta.asDiagonal();
  for (const Mat& y : f.frame_basis)
    CHECK((y.transpose() * eta + eta * y).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("Killing form of an explicit sl(2,R) basis") {
  // H = diag(1,-1), E = e12, F = e21: kappa(x,y) = 4 tr(xy) on sl(2).
  CMat h = CMat::Zero(2, 2), e = CMat::Zero(2, 2), fm = CMat::Zero(2, 2);
  h(0, 0) = 1; h(1, 1) = -1;
  e(0, 1) = 1;
  fm(1, 0) = 1;
  const Mat k = killing_form({h, e, fm});
  CHECK(k(0, 0) == doctest::Approx(8.0));
  CHECK(k(1, 2) == doctest::Approx(4.0));
  CHECK(k(2, 1) == doctest::Approx(4.0));
  CHECK(std::abs(k(0, 1)) < 1e-12);
  CHECK(std::abs(k(1, 1)) < 1e-12);
}

TEST_CASE("killing_theta_signature matches the pair-count formula") {
  auto pairs = [](int p) { return p * (p - 1) / 2; };
  for (const auto& [p, q] : {std::pair{2, 1}, {3, 1}, {2, 2}, {3, 2}}) {
    const auto sig = killing_theta_signature(build_o_pq(p, q));
    CHECK(sig.first == pairs(p) + pairs(q));
    CHECK(sig.second == p * q);
  }
}

TEST_CASE("standard triples commute and split as direct sums") {
  const CompatibleTriple t = make_standard_triple(2, 1, 1, 2);
  const TripleReport r = check_compatible_triple(t);
  CHECK(r.commutes);
  CHECK(r.direct_sum_ok);
  CHECK(r.dim_meet + r.dim_meet_i == t.f1.dim());
}

TEST_CASE("conjugated forms keep their Killing signature") {
  const RealForm f = build_o_pq(3, 1);
  CMat g = CMat::Identity(4, 4);
  const double c = std::cos(0.4), s = std::sin(0.4);
  g(0, 0) = c; g(0, 1) = -s; g(1, 0) = s; g(1, 1) = c;
  const RealForm fc = conjugated_form(f, g);
  CHECK(!fc.standard);
  CHECK(fc.dim() == f.dim());
  CHECK(killing_theta_signature(fc) == killing_theta_signature(f));
}

TEST_CASE("cartan intersections of a non-isomorphic pair are nontrivial") {
  const auto [dt, dp] = intersect_cartan_parts(build_o_pq(3, 1), build_o_pq(2, 2));
  CHECK(dt >= 1);
  CHECK(dp >= 1);
}

TEST_CASE("the standard slice is a real slice of the expected signature") {
  const RealForm f = build_o_pq(2, 1);
  // Fixed vectors of v -> I_{p,q} conj(v) span the slice behind o(2,1).
  CMat ipq = CMat::Identity(3, 3);
  ipq(0, 0) = -1; ipq(1, 1) = -1;
  const Subspace w = fixed_space(antilinear_vec_op(ipq));
  CHECK(w.dim() == 3);
  CHECK(is_totally_real(w, ComplexStructure::standard(3)));
  const RealSliceReport r = is_real_slice(w, CMat::Identity(3, 3));
  CHECK(r.slice);
  REQUIRE(r.signature.has_value());
  CHECK(*r.signature == std::make_pair(2, 1));
}

TEST_CASE("compatible slice check sees the shared fixed space") {
  CMat m1 = CMat::Identity(3, 3);
  m1(0, 0) = -1;
  CMat m2 = CMat::Identity(3, 3);
  m2(2, 2) = -1;
  const TripleReport r = check_compatible_slices(3, m1, m2);
  CHECK(r.commutes);
  CHECK(r.direct_sum_ok);
  CHECK(r.dim_meet == 1);    // e2 survives both sign flips
  CHECK(r.dim_meet_i == 2);
}
