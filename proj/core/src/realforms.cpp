#include "wickgit/realforms.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>

namespace wickgit {

namespace {

CMat antisym_unit(int n, int j, int k) {
  CMat x = CMat::Zero(n, n);
  x(j, k) = Complex(1.0, 0.0);
  x(k, j) = Complex(-1.0, 0.0);
  return x;
}

Mat realified_columns(const std::vector<CMat>& mats) {
  if (mats.empty()) throw Error("realified_columns: empty list");
  const int n = static_cast<int>(mats.front().rows());
  Mat cols(2 * n * n, static_cast<int>(mats.size()));
  for (int i = 0; i < static_cast<int>(mats.size()); ++i)
    cols.col(i) = realify_mat(mats[i]);
  return cols;
}

}  // namespace

CMat RealForm::sigma(const CMat& x) const {
  return conjugator * x.conjugate() * conjugator.inverse();
}

CMat RealForm::theta(const CMat& x) const {
  if (standard) return x.conjugate();
  return theta_conjugator * x.conjugate() * theta_conjugator.inverse();
}

Mat RealForm::theta_frame(const Mat& y) const {
  if (!standard) throw Error("theta_frame: only available on standard embeddings");
  Mat e = eta.asDiagonal();
  return e * y * e;
}

Subspace RealForm::t_subspace() const {
  std::vector<CMat> part(basis.begin(), basis.begin() + dim_t);
  return span_of(realified_columns(part));
}

Subspace RealForm::p_subspace() const {
  std::vector<CMat> part(basis.begin() + dim_t, basis.end());
  return span_of(realified_columns(part));
}

Subspace RealForm::full_subspace() const {
  return span_of(realified_columns(basis));
}

RealForm build_o_pq(int p, int q) {
  if (p < 0 || q < 0 || p + q < 2)
    throw Error("build_o_pq: need p, q >= 0 and p + q >= 2");
  const int n = p + q;
  RealForm f;
  f.n = n;
  f.p = p;
  f.q = q;
  f.standard = true;

  f.conjugator = CMat::Identity(n, n);
  for (int j = 0; j < p; ++j) f.conjugator(j, j) = Complex(-1.0, 0.0);
  f.theta_conjugator = CMat::Identity(n, n);

  f.eta = Vec::Ones(n);
  for (int j = 0; j < p; ++j) f.eta(j) = -1.0;

  // t: real skew matrices preserving each block of the slice.
  for (int j = 0; j < p; ++j)
    for (int k = j + 1; k < p; ++k) {
      f.basis.push_back(antisym_unit(n, j, k));
      f.frame_basis.push_back(antisym_unit(n, j, k).real());
    }
  for (int j = p; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      f.basis.push_back(antisym_unit(n, j, k));
      f.frame_basis.push_back(antisym_unit(n, j, k).real());
    }
  f.dim_t = static_cast<int>(f.basis.size());

  // p: i times the off-block skew matrices; in the adapted frame these are the
  // symmetric generators E_jk + E_kj (the boosts).
  for (int j = 0; j < p; ++j)
    for (int k = p; k < n; ++k) {
      f.basis.push_back(Complex(0.0, 1.0) * antisym_unit(n, j, k));
      Mat y = Mat::Zero(n, n);
      y(j, k) = 1.0;
      y(k, j) = 1.0;
      f.frame_basis.push_back(y);
    }
  f.dim_p = static_cast<int>(f.basis.size()) - f.dim_t;
  return f;
}

RealForm conjugated_form(const RealForm& f, const CMat& g) {
  const int n = f.n;
  if (g.rows() != n || g.cols() != n)
    throw Error("conjugated_form: size mismatch");
  if ((g.transpose() * g - CMat::Identity(n, n)).norm() > 1e-10)
    throw Error("conjugated_form: g is not complex-orthogonal");

  RealForm out;
  out.n = n;
  out.p = f.p;
  out.q = f.q;
  out.standard = false;
  const CMat ginv = g.inverse();
  out.conjugator = g * f.conjugator * g.conjugate().inverse();
  out.theta_conjugator = g * f.theta_conjugator * g.conjugate().inverse();
  for (const CMat& x : f.basis) out.basis.push_back(g * x * ginv);
  out.dim_t = f.dim_t;
  out.dim_p = f.dim_p;
  out.eta = f.eta;
  return out;
}

Mat killing_form(const std::vector<CMat>& span_basis, double bracket_tol) {
  const int dim = static_cast<int>(span_basis.size());
  if (dim == 0) throw Error("killing_form: empty basis");
  const Mat cols = realified_columns(span_basis);

  // Structure constants from bracket closure, then kappa via ad-traces.
  std::vector<Mat> ad(dim, Mat::Zero(dim, dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const CMat br = span_basis[i] * span_basis[j] - span_basis[j] * span_basis[i];
      ad[i].col(j) = coordinates_in_basis(cols, realify_mat(br), bracket_tol);
    }

  Mat kappa(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) {
      kappa(i, j) = (ad[i] * ad[j]).trace();
      kappa(j, i) = kappa(i, j);
    }
  return kappa;
}

Mat killing_form(const RealForm& f) { return killing_form(f.basis); }

std::pair<int, int> killing_theta_signature(const RealForm& f) {
  const Mat kappa = killing_form(f);
  const int dim = f.dim();

  // theta is +1 on the t block and -1 on the p block of the stored basis;
  // B(x, y) = -kappa(x, theta y) has to come out positive definite.
  Mat theta_diag = Mat::Identity(dim, dim);
  for (int i = f.dim_t; i < dim; ++i) theta_diag(i, i) = -1.0;
  Mat b = -kappa * theta_diag;
  b = 0.5 * (b + b.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Mat> es(b);
  if (es.eigenvalues().minCoeff() <= 0.0)
    throw Error("killing_theta_signature: -kappa(., theta .) is not positive definite");

  return form_signature(kappa);
}

CompatibleTriple make_standard_triple(int p1, int q1, int p2, int q2) {
  if (p1 + q1 != p2 + q2)
    throw Error("make_standard_triple: forms live in different O(n,C)");
  CompatibleTriple t;
  t.f1 = build_o_pq(p1, q1);
  t.f2 = build_o_pq(p2, q2);
  t.compact = build_o_pq(0, p1 + q1);
  return t;
}

namespace {

TripleReport decompose_against(const Subspace& w, const Subspace& w2, const Mat& j_op,
                               bool commutes) {
  TripleReport r;
  r.commutes = commutes;
  const Subspace iw2 = span_of(Mat(j_op * w2.basis));
  const Subspace meet = subspace_meet(w, w2);
  const Subspace meet_i = subspace_meet(w, iw2);
  r.dim_meet = meet.dim();
  r.dim_meet_i = meet_i.dim();

  Mat joint(w.ambient_dim, meet.dim() + meet_i.dim());
  joint << meet.basis, meet_i.basis;
  const int joint_dim = joint.cols() > 0 ? span_of(joint).dim() : 0;
  r.direct_sum_ok = (joint_dim == r.dim_meet + r.dim_meet_i) && (joint_dim == w.dim()) &&
                    (w.dim() == w2.dim());
  return r;
}

bool ops_commute(const std::vector<Mat>& ops, double commute_tol) {
  for (size_t a = 0; a < ops.size(); ++a)
    for (size_t b = a + 1; b < ops.size(); ++b) {
      const double scale = std::max(1.0, ops[a].norm() * ops[b].norm());
      if ((ops[a] * ops[b] - ops[b] * ops[a]).norm() > commute_tol * scale) return false;
    }
  return true;
}

}  // namespace

TripleReport check_compatible_triple(const CompatibleTriple& t, double commute_tol) {
  const std::vector<Mat> ops = {antilinear_conj_op(t.f1.conjugator),
                                antilinear_conj_op(t.f2.conjugator),
                                antilinear_conj_op(t.compact.conjugator)};
  const bool commutes = ops_commute(ops, commute_tol);
  const Mat j = complex_structure_op(t.f1.n * t.f1.n);
  return decompose_against(t.f1.full_subspace(), t.f2.full_subspace(), j, commutes);
}

TripleReport check_compatible_slices(int n, const CMat& m1, const CMat& m2,
                                     double commute_tol) {
  const Mat s1 = antilinear_vec_op(m1);
  const Mat s2 = antilinear_vec_op(m2);
  const bool commutes = ops_commute({s1, s2}, commute_tol);
  const Subspace w1 = fixed_space(s1);
  const Subspace w2 = fixed_space(s2);
  return decompose_against(w1, w2, complex_structure_op(n), commutes);
}

std::pair<int, int> intersect_cartan_parts(const RealForm& f1, const RealForm& f2) {
  const int tt = subspace_meet(f1.t_subspace(), f2.t_subspace()).dim();
  const int pp = subspace_meet(f1.p_subspace(), f2.p_subspace()).dim();
  return {tt, pp};
}

bool is_totally_real(const Subspace& w, const ComplexStructure& j) {
  if (w.ambient_dim != 2 * j.complex_dim)
    throw Error("is_totally_real: ambient dimension mismatch");
  if (w.dim() == 0) return true;
  const Subspace jw = span_of(Mat(j.op * w.basis));
  return subspace_meet(w, jw).dim() == 0;
}

RealSliceReport is_real_slice(const Subspace& w, const CMat& g, double imag_tol) {
  const int n = static_cast<int>(g.rows());
  if (w.ambient_dim != 2 * n) throw Error("is_real_slice: ambient dimension mismatch");
  RealSliceReport r;
  if (w.dim() != n) {
    std::ostringstream os;
    os << "real dimension " << w.dim() << " != " << n;
    r.reason = os.str();
    return r;
  }

  // Gram of the bilinear (unconjugated) form on the chosen basis.
  CMat gram(n, n);
  for (int i = 0; i < n; ++i) {
    const CVec vi = unrealify(w.basis.col(i));
    for (int j = 0; j < n; ++j)
      gram(i, j) = vi.transpose() * g * unrealify(w.basis.col(j));
  }
  const double scale = std::max(1.0, gram.cwiseAbs().maxCoeff());
  if (gram.imag().cwiseAbs().maxCoeff() > imag_tol * scale) {
    r.reason = "restriction is not real-valued";
    return r;
  }

  Mat s = gram.real();
  s = 0.5 * (s + s.transpose()).eval();
  try {
    r.signature = form_signature(s);
  } catch (const Error&) {
    r.reason = "restriction is degenerate";
    return r;
  }
  r.slice = true;
  return r;
}

}  // namespace wickgit
