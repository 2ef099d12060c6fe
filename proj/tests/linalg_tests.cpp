#include "doctest.h"

#include "wickgit/linalg.hpp"

using namespace wickgit;

TEST_CASE("char_poly of a triangular matrix matches the factored form") {
  Mat m(2, 2);
  m << 2, 1, 0, 3;
  // (x - 2)(x - 3) = x^2 - 5x + 6
  const auto c = char_poly(m);
  REQUIRE(c.size() == 3);
  CHECK(std::abs(c[0] - Complex(6, 0)) < 1e-12);
  CHECK(std::abs(c[1] - Complex(-5, 0)) < 1e-12);
  CHECK(std::abs(c[2] - Complex(1, 0)) < 1e-12);
}

TEST_CASE("skew_normal_form recovers rotation parameters") {
  // Plant parameters {2, 1} plus one zero direction, then hide them with a
  // deterministic rotation.
  Mat canon = Mat::Zero(5, 5);
  canon(0, 1) = 2; canon(1, 0) = -2;
  canon(2, 3) = 1; canon(3, 2) = -1;
  const Mat q = random_orthogonal(5, 7);
  const Mat m = q * canon * q.transpose();

  const SkewNormalForm nf = skew_normal_form(m);
  REQUIRE(nf.params.size() == 2);
  CHECK(nf.params[0] == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(nf.params[1] == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(nf.zero_dim == 1);
  CHECK((nf.g * m * nf.g.transpose() - nf.canon).cwiseAbs().maxCoeff() < 1e-9);
  CHECK((nf.g * nf.g.transpose() - Mat::Identity(5, 5)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("skew_normal_form of zero is all kernel") {
  const SkewNormalForm nf = skew_normal_form(Mat::Zero(3, 3));
  CHECK(nf.params.empty());
  CHECK(nf.zero_dim == 3);
}

TEST_CASE("skew_normal_form rejects non-skew input") {
  Mat m(2, 2);
  m << 0, 1, 1, 0;
  CHECK_THROWS_AS(skew_normal_form(m), Error);
}

TEST_CASE("svd_block reduces to a diagonal with descending singular values") {
  Mat a(3, 2);
  a << 1, 2, 3, 4, 5, 6;
  const SvdBlock s = svd_block(a);
  const Mat d = s.h.inverse() * a * s.g;
  for (int i = 0; i < d.rows(); ++i)
    for (int j = 0; j < d.cols(); ++j)
      if (i != j) CHECK(std::abs(d(i, j)) < 1e-10);
  REQUIRE(s.sigma.size() == 2);
  CHECK(s.sigma(0) >= s.sigma(1));
  CHECK(d(0, 0) == doctest::Approx(s.sigma(0)));
}

TEST_CASE("form_signature counts both signs") {
  Mat b = Mat::Zero(3, 3);
  b(0, 0) = -2; b(1, 1) = 5; b(2, 2) = 1;
  const Mat q = random_orthogonal(3, 11);
  CHECK(form_signature(q * b * q.transpose()) == std::make_pair(1, 2));
  CHECK_THROWS_AS(form_signature(Mat::Zero(2, 2)), Error);
}

TEST_CASE("two planes in R^3 meet in a line") {
  Mat u(3, 2), v(3, 2);
  u << 1, 0, 0, 1, 0, 0;  // xy-plane
  v << 1, 0, 0, 0, 0, 1;  // xz-plane
  const Subspace m = subspace_meet(span_of(u), span_of(v));
  REQUIRE(m.dim() == 1);
  Vec x(3);
  x << 3, 0, 0;
  CHECK(subspace_contains(m, x));
  Vec y(3);
  y << 0, 1, 0;
  CHECK(!subspace_contains(m, y));
}

TEST_CASE("realified matrix action matches the complex one") {
  CMat m(2, 2);
  m << Complex(1, 2), Complex(0, -1), Complex(3, 0), Complex(-1, 1);
  CVec z(2);
  z << Complex(0.5, -0.25), Complex(2, 1);
  const Vec lhs = antilinear_vec_op(m) * realify(z);
  const CVec rhs = m * z.conjugate();
  CHECK((lhs - realify(rhs)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("complex_structure_op squares to minus the identity") {
  const Mat j = complex_structure_op(3);
  CHECK((j * j + Mat::Identity(6, 6)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("fixed_space of a reflection is the mirror") {
  Mat s = Mat::Identity(3, 3);
  s(2, 2) = -1;
  const Subspace f = fixed_space(s);
  CHECK(f.dim() == 2);
  Vec v(3);
  v << 1, 2, 0;
  CHECK(subspace_contains(f, v));
}

TEST_CASE("coordinates_in_basis inverts the span construction") {
  Mat basis(3, 2);
  basis << 1, 1, 0, 1, 0, 0;
  Vec y = 2.0 * basis.col(0) - 0.5 * basis.col(1);
  const Vec c = coordinates_in_basis(basis, y);
  CHECK(c(0) == doctest::Approx(2.0));
  CHECK(c(1) == doctest::Approx(-0.5));
  Vec off(3);
  off << 0, 0, 1;
  CHECK_THROWS_AS(coordinates_in_basis(basis, off), Error);
}

TEST_CASE("random orthogonal matrices are orthogonal and reproducible") {
  const Mat q1 = random_orthogonal(4, 42);
  const Mat q2 = random_orthogonal(4, 42);
  CHECK((q1 - q2).cwiseAbs().maxCoeff() == 0.0);
  CHECK((q1.transpose() * q1 - Mat::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12);
  const Mat r = random_special_orthogonal(4, 43);
  CHECK(r.determinant() == doctest::Approx(1.0).epsilon(1e-10));
}
