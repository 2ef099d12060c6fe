#pragma once

#include <Eigen/Dense>

#include <complex>
#include <utility>
#include <vector>

#include "wickgit/common.hpp"

namespace wickgit {

using Mat = Eigen::MatrixXd;
using CMat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;
using Complex = std::complex<double>;

/// Monic characteristic polynomial of a square complex matrix, returned as
/// ascending coefficients [c0, ..., c_{n-1}, 1] of det(lambda*I - m).
/// Computed from the (sorted) eigenvalues, so coefficients are stable.
std::vector<Complex> char_poly(const CMat& m);
std::vector<Complex> char_poly(const Mat& m);

/// Canonical form of a real skew-symmetric matrix.
struct SkewNormalForm {
  Mat g;       // orthogonal, g * m * g^T == canonical
  Mat canon;   // block-diagonal: [[0, x],[-x, 0]] blocks then zeros
  std::vector<double> params;  // nonnegative, sorted descending (zeros omitted)
  int zero_dim = 0;            // trailing zero directions
};

/// Rotate a skew matrix to the 2x2-block spectral normal form with
/// nonnegative rotation parameters sorted descending and zeros last.
/// Throws Error if m is not skew to `skew_tol`.
SkewNormalForm skew_normal_form(const Mat& m, double skew_tol = tol::kSymmetry,
                                double zero_tol = tol::kEigenZero);

/// Singular value decomposition packaged as a two-sided orthogonal reduction:
/// h in O(p), g in O(q) with h^{-1} * a * g rectangular-diagonal, singular
/// values nonnegative descending.
struct SvdBlock {
  Mat h;  // p x p orthogonal
  Mat g;  // q x q orthogonal
  Vec sigma;
};
SvdBlock svd_block(const Mat& a);

/// Signature of a real symmetric bilinear form, as (negative count, positive
/// count).  Eigenvalues within `zero_tol * max(1, max|eig|)` of zero make the
/// form degenerate, which is an error.
std::pair<int, int> form_signature(const Mat& b, double sym_tol = tol::kSymmetry,
                                   double zero_tol = tol::kEigenZero);

/// A linear subspace given by an orthonormal column basis.
struct Subspace {
  int ambient_dim = 0;
  Mat basis;  // ambient_dim x dim, orthonormal columns
  int dim() const { return static_cast<int>(basis.cols()); }
};
struct CSubspace {
  int ambient_dim = 0;
  CMat basis;
  int dim() const { return static_cast<int>(basis.cols()); }
};

/// Span of a set of (possibly dependent) column vectors.
Subspace span_of(const Mat& columns, double rank_tol = 1e-10);
CSubspace span_of(const CMat& columns, double rank_tol = 1e-10);

/// Intersection of two subspaces of the same ambient space.
Subspace subspace_meet(const Subspace& u, const Subspace& v, double rank_tol = 1e-10);
CSubspace subspace_meet(const CSubspace& u, const CSubspace& v, double rank_tol = 1e-10);

/// Whether v is contained in the span of u, to the given tolerance.
bool subspace_contains(const Subspace& u, const Vec& v, double tol = 1e-9);

// --- realification helpers -------------------------------------------------
//
// Complex vectors are realified by stacking (Re; Im).  Complex n x n matrices
// are realified via vec() then the same stacking, giving coordinates in
// R^{2n^2}.  Antilinear maps become honest real-linear operators there.

Vec realify(const CVec& z);
CVec unrealify(const Vec& x);
Vec realify_mat(const CMat& z);
CMat unrealify_mat(const Vec& x, int n);

/// Real operator on R^{2n} representing v -> m * conj(v).
Mat antilinear_vec_op(const CMat& m);
/// Real operator on R^{2n^2} representing X -> m * conj(X) * m^{-1}.
Mat antilinear_conj_op(const CMat& m);
/// Real operator on the realification representing multiplication by i.
Mat complex_structure_op(int complex_dim);

/// Orthonormal basis of the fixed space {x : S x == x} of an involution.
Subspace fixed_space(const Mat& s, double tol = 1e-9);

/// Solve for coordinates of y in the span of given (realified) basis vectors;
/// residual above `tol * scale` is an error.  Used for structure constants.
Vec coordinates_in_basis(const Mat& basis_cols, const Vec& y, double tol = 1e-8);

/// Deterministic pseudo-random orthogonal matrix (QR of seeded Gaussian).
Mat random_orthogonal(int n, unsigned seed);
Mat random_special_orthogonal(int n, unsigned seed);

}  // namespace wickgit
