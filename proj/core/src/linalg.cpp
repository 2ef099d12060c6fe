#include "wickgit/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace wickgit {

namespace {

bool lex_less(const Complex& a, const Complex& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

}  // namespace

std::vector<Complex> char_poly(const CMat& m) {
  if (m.rows() != m.cols()) throw Error("char_poly: matrix must be square");
  const int n = static_cast<int>(m.rows());
  Eigen::ComplexEigenSolver<CMat> es(m, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) throw Error("char_poly: eigensolver failed");
  std::vector<Complex> ev(es.eigenvalues().data(), es.eigenvalues().data() + n);
  std::sort(ev.begin(), ev.end(), lex_less);
  // expand prod_i (lambda - ev[i]); a[k] holds the coefficient of lambda^k
  std::vector<Complex> a(static_cast<size_t>(n) + 1, Complex(0.0, 0.0));
  a[0] = Complex(1.0, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int k = i + 1; k >= 1; --k) a[k] = a[k - 1] - ev[i] * a[k];
    a[0] = -ev[i] * a[0];
  }
  return a;
}

std::vector<Complex> char_poly(const Mat& m) { return char_poly(CMat(m.cast<Complex>())); }

SkewNormalForm skew_normal_form(const Mat& m, double skew_tol, double zero_tol) {
  if (m.rows() != m.cols()) throw Error("skew_normal_form: matrix must be square");
  const int n = static_cast<int>(m.rows());
  const double scale = std::max(1.0, m.norm());
  if ((m + m.transpose()).norm() > skew_tol * scale)
    throw Error("skew_normal_form: input is not skew-symmetric within tolerance");

  Mat g = Mat::Identity(n, n);
  std::vector<std::pair<double, int>> blocks;  // (param, start col in current frame)
  std::vector<int> zero_cols;

  if (n > 0) {
    Eigen::RealSchur<Mat> schur(0.5 * (m - m.transpose()));
    const Mat& t = schur.matrixT();
    const Mat& u = schur.matrixU();
    g = u.transpose();  // g * m * g^T = t (up to roundoff)
    int i = 0;
    while (i < n) {
      if (i + 1 < n && std::abs(t(i + 1, i)) > zero_tol * scale) {
        double x = 0.5 * (t(i, i + 1) - t(i + 1, i));
        blocks.emplace_back(x, i);
        i += 2;
      } else {
        zero_cols.push_back(i);
        i += 1;
      }
    }
  }

  // Make every block parameter nonnegative by swapping the block's two rows.
  for (auto& [x, start] : blocks) {
    if (x < 0) {
      g.row(start).swap(g.row(start + 1));
      x = -x;
    }
    if (x <= zero_tol * scale) {  // demote numerically-zero block
      zero_cols.push_back(start);
      zero_cols.push_back(start + 1);
      x = 0.0;
    }
  }
  blocks.erase(std::remove_if(blocks.begin(), blocks.end(),
                              [](const auto& b) { return b.first == 0.0; }),
               blocks.end());
  std::stable_sort(blocks.begin(), blocks.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  std::sort(zero_cols.begin(), zero_cols.end());

  // Permute rows of g so blocks come first (descending), zeros last.
  Mat gp(n, n);
  int row = 0;
  SkewNormalForm out;
  for (const auto& [x, start] : blocks) {
    gp.row(row) = g.row(start);
    gp.row(row + 1) = g.row(start + 1);
    out.params.push_back(x);
    row += 2;
  }
  for (int z : zero_cols) gp.row(row++) = g.row(z);

  out.g = gp;
  out.zero_dim = static_cast<int>(zero_cols.size());
  out.canon = Mat::Zero(n, n);
  for (size_t b = 0; b < out.params.size(); ++b) {
    out.canon(2 * b, 2 * b + 1) = out.params[b];
    out.canon(2 * b + 1, 2 * b) = -out.params[b];
  }
  return out;
}

SvdBlock svd_block(const Mat& a) {
  Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  SvdBlock out;
  out.h = svd.matrixU();
  out.g = svd.matrixV();
  out.sigma = svd.singularValues();
  return out;
}

std::pair<int, int> form_signature(const Mat& b, double sym_tol, double zero_tol) {
  if (b.rows() != b.cols()) throw Error("form_signature: matrix must be square");
  const double scale = std::max(1.0, b.norm());
  if ((b - b.transpose()).norm() > sym_tol * scale)
    throw Error("form_signature: form is not symmetric within tolerance");
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (b + b.transpose()),
                                        Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw Error("form_signature: eigensolver failed");
  const Vec& ev = es.eigenvalues();
  const double mx = std::max(1.0, ev.size() ? ev.cwiseAbs().maxCoeff() : 0.0);
  int neg = 0, pos = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (std::abs(ev[i]) <= zero_tol * mx)
      throw Error("form_signature: degenerate form (eigenvalue within zero threshold)");
    (ev[i] < 0 ? neg : pos)++;
  }
  return {neg, pos};
}

namespace {

template <typename M>
M orthonormal_range(const M& columns, double rank_tol) {
  if (columns.cols() == 0) return M(columns.rows(), 0);
  Eigen::JacobiSVD<M> svd(columns, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  double smax = s.size() ? s[0] : 0.0;
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s[i] > rank_tol * std::max(1.0, smax)) ++r;
  return M(svd.matrixU().leftCols(r));
}

template <typename S, typename M>
S meet_impl(const S& u, const S& v, double rank_tol) {
  if (u.ambient_dim != v.ambient_dim)
    throw Error("subspace_meet: ambient dimensions differ");
  S out;
  out.ambient_dim = u.ambient_dim;
  if (u.dim() == 0 || v.dim() == 0) {
    out.basis = M(u.ambient_dim, 0);
    return out;
  }
  M j(u.ambient_dim, u.dim() + v.dim());
  j.leftCols(u.dim()) = u.basis;
  j.rightCols(v.dim()) = -v.basis;
  Eigen::JacobiSVD<M> svd(j, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  double smax = s.size() ? s[0] : 0.0;
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s[i] > rank_tol * std::max(1.0, smax)) ++rank;
  const int nullity = static_cast<int>(j.cols()) - rank;
  if (nullity == 0) {
    out.basis = M(u.ambient_dim, 0);
    return out;
  }
  M null_u = svd.matrixV().rightCols(nullity).topRows(u.dim());
  out.basis = orthonormal_range<M>(u.basis * null_u, rank_tol);
  return out;
}

}  // namespace

Subspace span_of(const Mat& columns, double rank_tol) {
  Subspace s;
  s.ambient_dim = static_cast<int>(columns.rows());
  s.basis = orthonormal_range<Mat>(columns, rank_tol);
  return s;
}

CSubspace span_of(const CMat& columns, double rank_tol) {
  CSubspace s;
  s.ambient_dim = static_cast<int>(columns.rows());
  s.basis = orthonormal_range<CMat>(columns, rank_tol);
  return s;
}

Subspace subspace_meet(const Subspace& u, const Subspace& v, double rank_tol) {
  return meet_impl<Subspace, Mat>(u, v, rank_tol);
}

CSubspace subspace_meet(const CSubspace& u, const CSubspace& v, double rank_tol) {
  return meet_impl<CSubspace, CMat>(u, v, rank_tol);
}

bool subspace_contains(const Subspace& u, const Vec& v, double tol) {
  if (v.size() != u.ambient_dim) throw Error("subspace_contains: dimension mismatch");
  if (v.norm() == 0.0) return true;
  Vec proj = u.basis * (u.basis.transpose() * v);
  return (v - proj).norm() <= tol * std::max(1.0, v.norm());
}

Vec realify(const CVec& z) {
  Vec x(2 * z.size());
  x.head(z.size()) = z.real();
  x.tail(z.size()) = z.imag();
  return x;
}

CVec unrealify(const Vec& x) {
  const Eigen::Index n = x.size() / 2;
  CVec z(n);
  z.real() = x.head(n);
  z.imag() = x.tail(n);
  return z;
}

Vec realify_mat(const CMat& z) {
  CVec v = Eigen::Map<const CVec>(z.data(), z.size());
  return realify(v);
}

CMat unrealify_mat(const Vec& x, int n) {
  CVec v = unrealify(x);
  return Eigen::Map<const CMat>(v.data(), n, n);
}

Mat antilinear_vec_op(const CMat& m) {
  const Eigen::Index n = m.rows();
  Mat s(2 * n, 2 * n);
  s.topLeftCorner(n, n) = m.real();
  s.topRightCorner(n, n) = m.imag();
  s.bottomLeftCorner(n, n) = m.imag();
  s.bottomRightCorner(n, n) = -m.real();
  return s;
}

Mat antilinear_conj_op(const CMat& m) {
  // X -> m * conj(X) * m^{-1} on vec coordinates: (m^{-T} kron m) * conj.
  const Eigen::Index n = m.rows();
  CMat minv = m.inverse();
  CMat big(n * n, n * n);
  // vec(m X minv) = (minv^T kron m) vec(X)
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i)
      big.block(0, (j * n) + i, n * n, 1) = Eigen::Map<CVec>(
          CMat(m.col(i) * minv.row(j)).data(), n * n);
  // big maps vec(X) -> vec(m X minv); antilinear composition with entrywise conj
  Mat s(2 * n * n, 2 * n * n);
  s.topLeftCorner(n * n, n * n) = big.real();
  s.topRightCorner(n * n, n * n) = big.imag();
  s.bottomLeftCorner(n * n, n * n) = big.imag();
  s.bottomRightCorner(n * n, n * n) = -big.real();
  return s;
}

Mat complex_structure_op(int complex_dim) {
  Mat j = Mat::Zero(2 * complex_dim, 2 * complex_dim);
  j.topRightCorner(complex_dim, complex_dim) = -Mat::Identity(complex_dim, complex_dim);
  j.bottomLeftCorner(complex_dim, complex_dim) = Mat::Identity(complex_dim, complex_dim);
  return j;
}

Subspace fixed_space(const Mat& s, double tol) {
  if (s.rows() != s.cols()) throw Error("fixed_space: operator must be square");
  const Eigen::Index n = s.rows();
  Mat a = s - Mat::Identity(n, n);
  Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeFullV);
  const Vec& sv = svd.singularValues();
  double smax = sv.size() ? sv[0] : 0.0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] > tol * std::max(1.0, smax)) ++rank;
  Subspace out;
  out.ambient_dim = static_cast<int>(n);
  out.basis = svd.matrixV().rightCols(n - rank);
  return out;
}

Vec coordinates_in_basis(const Mat& basis_cols, const Vec& y, double tol) {
  Vec c = basis_cols.colPivHouseholderQr().solve(y);
  const double resid = (basis_cols * c - y).norm();
  if (resid > tol * std::max(1.0, y.norm()))
    throw Error("coordinates_in_basis: vector not in span (residual " +
                std::to_string(resid) + ")");
  return c;
}

Mat random_orthogonal(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mat a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = gauss(rng);
  Eigen::HouseholderQR<Mat> qr(a);
  Mat q = qr.householderQ();
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i)
    if (r(i, i) < 0) q.col(i) *= -1.0;  // fix the QR sign convention
  return q;
}

Mat random_special_orthogonal(int n, unsigned seed) {
  Mat q = random_orthogonal(n, seed);
  if (q.determinant() < 0) q.col(0) *= -1.0;
  return q;
}

}  // namespace wickgit
