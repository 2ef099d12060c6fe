#include "doctest.h"

#include <algorithm>

#include "wickgit/rootsys.hpp"

using namespace wickgit;

namespace {

RestrictedRootSystem roots_of(int p, int q) {
  const RealForm f = build_o_pq(p, q);
  return restricted_roots(f, maximal_abelian(f));
}

bool has_root(const RestrictedRootSystem& rs, std::vector<int> coeffs, int mult) {
  for (const auto& r : rs.roots)
    if (r.first == coeffs && r.second == mult) return true;
  return false;
}

}  // namespace

TEST_CASE("the real rank of o(p,q) is min(p,q)") {
  CHECK(maximal_abelian(build_o_pq(2, 1)).dim() == 1);
  CHECK(maximal_abelian(build_o_pq(3, 1)).dim() == 1);
  CHECK(maximal_abelian(build_o_pq(2, 2)).dim() == 2);
  CHECK(maximal_abelian(build_o_pq(3, 2)).dim() == 2);
  CHECK(maximal_abelian(build_o_pq(4, 2)).dim() == 2);
}

TEST_CASE("o(2,1) restricted roots: A1 with multiplicity one") {
  const auto rs = roots_of(2, 1);
  CHECK(rs.k == 1);
  CHECK(rs.label == "A1");
  CHECK(rs.m_dim == 0);
  CHECK(rs.roots.size() == 2);
  CHECK(has_root(rs, {1}, 1));
  CHECK(has_root(rs, {-1}, 1));
}

TEST_CASE("o(3,1) restricted roots: A1 with multiplicity two") {
  const auto rs = roots_of(3, 1);
  CHECK(rs.k == 1);
  CHECK(rs.label == "A1");
  CHECK(rs.m_dim == 1);  // so(2) centralizes the boost
  CHECK(has_root(rs, {1}, 2));
  CHECK(has_root(rs, {-1}, 2));
}

TEST_CASE("o(2,2) restricted roots: D2") {
  const auto rs = roots_of(2, 2);
  CHECK(rs.k == 2);
  CHECK(rs.label == "D2");
  CHECK(rs.m_dim == 0);
  CHECK(rs.roots.size() == 4);
  CHECK(has_root(rs, {1, 1}, 1));
  CHECK(has_root(rs, {1, -1}, 1));
  const auto& pos = rs.positive_roots;
  CHECK(pos.size() == 2);
  CHECK(std::find(pos.begin(), pos.end(), std::vector<int>{1, 1}) != pos.end());
  CHECK(std::find(pos.begin(), pos.end(), std::vector<int>{1, -1}) != pos.end());
}

TEST_CASE("o(3,2) restricted roots: B2") {
  const auto rs = roots_of(3, 2);
  CHECK(rs.k == 2);
  CHECK(rs.label == "B2");
  CHECK(has_root(rs, {1, 1}, 1));
  CHECK(has_root(rs, {1, 0}, 1));  // short root, multiplicity p+q-2k = 1
  CHECK(rs.positive_roots.size() == 4);
}

TEST_CASE("boost axes act on the joint eigenframe with the listed weights") {
  for (const auto& [p, q] : {std::pair{2, 2}, {3, 2}}) {
    const RealForm f = build_o_pq(p, q);
    const auto rs = restricted_roots(f, maximal_abelian(f));
    const BoostGenerators bg = boost_generators(rs);
    REQUIRE(bg.k == rs.k);
    for (int i = 0; i < bg.k; ++i) {
      for (int a = 0; a < bg.n; ++a) {
        const Vec col = bg.frame.col(a);
        const Vec image = bg.boost_axes[static_cast<size_t>(i)] * col;
        const double w = bg.vector_weights(a, i);
        CHECK((image - w * col).cwiseAbs().maxCoeff() < 1e-9);
      }
    }
  }
}

TEST_CASE("an elementary covariant tensor lands on a single counting-rule weight") {
  const RealForm f = build_o_pq(2, 2);
  const BoostGenerators bg = boost_generators(restricted_roots(f, maximal_abelian(f)));
  // T_{ab} = (dual of frame column 0)_a (dual of frame column 2)_b picks up
  // minus the sum of the two column weights.
  Tensor t(4, 2);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      t.at({a, b}) = bg.frame(a, 0) * bg.frame(b, 2);
  const BoostWeightDecomp d = bw_decompose(t, bg);
  REQUIRE(d.support.size() == 1);
  std::vector<int> expected(static_cast<size_t>(bg.k));
  for (int i = 0; i < bg.k; ++i)
    expected[static_cast<size_t>(i)] = -(bg.vector_weights(0, i) + bg.vector_weights(2, i));
  CHECK(d.support[0] == expected);
}

TEST_CASE("the invariant metric sits at weight zero") {
  const RealForm f = build_o_pq(2, 2);
  const BoostGenerators bg = boost_generators(restricted_roots(f, maximal_abelian(f)));
  Tensor eta(4, 2);
  for (int a = 0; a < 4; ++a) eta.at({a, a}) = f.eta(a);
  const BoostWeightDecomp d = bw_decompose(eta, bg);
  REQUIRE(d.support.size() == 1);
  CHECK(d.support[0] == std::vector<int>{0, 0});
}

TEST_CASE("weight parts sum back to the tensor") {
  const RealForm f = build_o_pq(2, 2);
  const BoostGenerators bg = boost_generators(restricted_roots(f, maximal_abelian(f)));
  Tensor t(4, 2);
  double fill = 0.25;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      t.at({a, b}) = fill;
      fill = 0.7 * fill + 0.1;
    }
  const BoostWeightDecomp d = bw_decompose(t, bg);
  Tensor sum(4, 2);
  for (const auto& [w, part] : d.components) sum = sum + part;
  CHECK((sum - t).norm() < 1e-9 * t.norm());
}

TEST_CASE("cone feasibility on pivotal supports") {
  SUBCASE("uniformly negative weight is strict") {
    const SgResult r = sg_property({{-1, -1}});
    CHECK(r.strict);
    CHECK(r.lambda.size() == 2);
  }
  SUBCASE("zero weight alone is never strict") {
    CHECK(!sg_property({{0, 0}}).strict);
  }
  SUBCASE("opposite balanced weights block each other") {
    CHECK(!sg_property({{1, -1}, {-1, 1}}).strict);
  }
  SUBCASE("a balanced pair plus a negative direction stays strict") {
    const SgResult r = sg_property({{2, -2}, {-1, -1}});
    CHECK(r.strict);
    const double a = 2 * r.lambda(0) - 2 * r.lambda(1);
    const double b = -r.lambda(0) - r.lambda(1);
    // The witness contract: no positive rate, at least one negative one.
    CHECK(a <= 1e-9);
    CHECK(b <= 1e-9);
    CHECK(std::min(a, b) < -1e-12);
  }
  SUBCASE("zero weight with a one-sided direction is strict") {
    CHECK(sg_property({{0, 0}, {-2, 2}}).strict);
  }
}
