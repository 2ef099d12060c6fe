#include "wickgit/orbits.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace wickgit {

namespace {

/// Matrix exponential by scaling-and-squaring with a Taylor kernel; the
/// matrices here are tiny (n <= 8), so this is both simple and accurate.
Mat mat_exp(const Mat& x) {
  const double nrm = x.norm();
  int squarings = 0;
  double scale = 1.0;
  while (nrm * scale > 0.5) {
    scale *= 0.5;
    ++squarings;
  }
  const Mat y = x * scale;
  Mat term = Mat::Identity(x.rows(), x.cols());
  Mat sum = term;
  for (int k = 1; k <= 24; ++k) {
    term = (term * y) / static_cast<double>(k);
    sum += term;
    if (term.norm() < 1e-18 * sum.norm()) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

std::vector<Mat> frobenius_orthonormal(const std::vector<Mat>& raw) {
  std::vector<Mat> out;
  for (const Mat& m : raw) {
    Mat v = m;
    for (const Mat& u : out) v -= (u.array() * v.array()).sum() * u;
    const double nrm = v.norm();
    if (nrm < 1e-12) throw Error("RepAction: dependent Lie algebra basis");
    out.push_back(v / nrm);
  }
  return out;
}

/// Construction-time check that the compact part acts skew-symmetrically and
/// the noncompact part symmetrically for the action's inner product.
void verify_split(const RepAction& r) {
  std::mt19937_64 rng(12345);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto sample = [&]() {
    Vec v(r.space_dim);
    for (int i = 0; i < r.space_dim; ++i) v(i) = gauss(rng);
    return v;
  };
  auto check = [&](const Mat& x, double sign, const char* what) {
    for (int trial = 0; trial < 5; ++trial) {
      const Vec v = sample(), w = sample();
      const double lhs = r.ip(r.act(x, v), w) + sign * r.ip(v, r.act(x, w));
      if (std::abs(lhs) > 1e-10 * std::max(1.0, v.norm() * w.norm() * x.norm()))
        throw Error(std::string("RepAction: ") + what + " split verification failed");
    }
  };
  for (const Mat& x : r.t_basis) check(x, 1.0, "skew (t)");
  for (const Mat& x : r.p_basis) check(x, -1.0, "symmetric (p)");
}

struct RankInfo {
  int rank = 0;
  bool clean = false;
};

/// Dimension of the orbit through v: the rank of x -> x.v over the full Lie
/// algebra basis.  `clean` demands a decisive spectral gap so that rank
/// comparisons never hinge on borderline singular values.
RankInfo orbit_rank(const RepAction& r, const Vec& v) {
  const int d = static_cast<int>(r.t_basis.size() + r.p_basis.size());
  Mat cols(r.space_dim, d);
  int c = 0;
  for (const Mat& x : r.t_basis) cols.col(c++) = r.act(x, v);
  for (const Mat& x : r.p_basis) cols.col(c++) = r.act(x, v);

  Eigen::JacobiSVD<Mat> svd(cols);
  const Vec s = svd.singularValues();
  RankInfo info;
  if (s.size() == 0 || s(0) < 1e-300) {
    info.clean = true;  // the zero vector: rank 0, unambiguous
    return info;
  }
  const double tau = 1e-8 * s(0);
  int rank = 0;
  while (rank < s.size() && s(rank) > tau) ++rank;
  info.rank = rank;
  const double below = rank < s.size() ? s(rank) : 0.0;
  const double above = s(rank - 1);
  info.clean = below < 1e-300 ? true : (above / below) >= 1e4;
  return info;
}

}  // namespace

Vec RepAction::act(const Mat& x, const Vec& v) const {
  if (kind == Kind::Tensor) {
    Tensor t = to_tensor(v);
    return from_tensor(t.act(x));
  }
  const Mat m = to_matrix(v);
  return from_matrix(x * m - m * x);
}

Vec RepAction::act_exp(const Mat& x, const Vec& v) const {
  const Mat g = mat_exp(x);
  if (kind == Kind::Tensor) {
    Tensor t = to_tensor(v);
    return from_tensor(t.transform(g));
  }
  const Mat m = to_matrix(v);
  return from_matrix(g * m * mat_exp(-x));
}

double RepAction::ip(const Vec& a, const Vec& b) const {
  if (kind == Kind::AdjointOpq) {
    const Mat e = form.eta.asDiagonal();
    return -(to_matrix(a) * e * to_matrix(b) * e).trace();
  }
  return a.dot(b);  // tensor components, and tr(x y^T) for sl(2,R)
}

Vec RepAction::p_gradient(const Vec& v) const {
  Vec g(static_cast<int>(p_basis.size()));
  for (size_t i = 0; i < p_basis.size(); ++i)
    g(static_cast<int>(i)) = ip(act(p_basis[i], v), v);
  return g;
}

bool RepAction::minimal(const Vec& v, double tol) const {
  const Vec g = p_gradient(v);
  const double scale = std::max(1.0, ip(v, v));
  return g.size() == 0 || g.cwiseAbs().maxCoeff() <= tol * scale;
}

Tensor RepAction::to_tensor(const Vec& v) const {
  Tensor t(n, valence);
  t.data() = v;
  return t;
}

Vec RepAction::from_tensor(const Tensor& t) const { return t.data(); }

Mat RepAction::to_matrix(const Vec& v) const {
  return Eigen::Map<const Mat>(v.data(), n, n);
}

Vec RepAction::from_matrix(const Mat& m) const {
  return Eigen::Map<const Vec>(m.data(), m.size());
}

RepAction tensor_action(const RealForm& f, int valence) {
  if (!f.standard) throw Error("tensor_action: needs the standard o(p,q) embedding");
  if (valence < 1) throw Error("tensor_action: valence must be positive");
  RepAction r;
  r.kind = RepAction::Kind::Tensor;
  r.form = f;
  r.n = f.n;
  r.valence = valence;
  r.space_dim = 1;
  for (int i = 0; i < valence; ++i) r.space_dim *= f.n;
  std::vector<Mat> t(f.frame_basis.begin(), f.frame_basis.begin() + f.dim_t);
  std::vector<Mat> p(f.frame_basis.begin() + f.dim_t, f.frame_basis.end());
  r.t_basis = frobenius_orthonormal(t);
  r.p_basis = frobenius_orthonormal(p);
  verify_split(r);
  return r;
}

RepAction adjoint_action(const RealForm& f) {
  if (!f.standard) throw Error("adjoint_action: needs the standard o(p,q) embedding");
  RepAction r;
  r.kind = RepAction::Kind::AdjointOpq;
  r.form = f;
  r.n = f.n;
  r.space_dim = f.n * f.n;
  std::vector<Mat> t(f.frame_basis.begin(), f.frame_basis.begin() + f.dim_t);
  std::vector<Mat> p(f.frame_basis.begin() + f.dim_t, f.frame_basis.end());
  r.t_basis = frobenius_orthonormal(t);
  r.p_basis = frobenius_orthonormal(p);
  verify_split(r);
  return r;
}

RepAction sl2_adjoint_action() {
  RepAction r;
  r.kind = RepAction::Kind::AdjointSl2;
  r.n = 2;
  r.space_dim = 4;
  Mat h(2, 2), ef_sum(2, 2), ef_diff(2, 2);
  h << 1, 0, 0, -1;
  ef_sum << 0, 1, 1, 0;
  ef_diff << 0, 1, -1, 0;
  r.t_basis = frobenius_orthonormal({ef_diff});
  r.p_basis = frobenius_orthonormal({h, ef_sum});
  verify_split(r);
  return r;
}

bool is_minimal(const Vec& v, const RepAction& r, double tol) { return r.minimal(v, tol); }

OrbitDimension orbit_dimension(const Vec& v, const RepAction& r) {
  const RankInfo info = orbit_rank(r, v);
  return OrbitDimension{info.rank, info.clean};
}

const char* verdict_name(OrbitReport::Verdict v) {
  switch (v) {
    case OrbitReport::Verdict::Closed: return "closed";
    case OrbitReport::Verdict::NonClosed: return "non_closed";
    default: return "undecided";
  }
}

namespace {

/// Try to extract lim_{t->inf} exp(t P) . cur for the accumulated direction P.
/// The induced operator of P is ip-symmetric, so distinct decay rates are
/// ip-orthogonal and the limit (when every rate is <= 0) is the projection
/// onto the zero-rate part.  Returns false when a positive rate carries mass.
bool structural_limit(const RepAction& r, const Vec& cur, const Mat& accum, double f0,
                      Vec& alpha_out) {
  if (accum.norm() < 1e-12) return false;
  const Mat p_hat = 0.5 * (accum + accum.transpose()) / accum.norm();
  Eigen::SelfAdjointEigenSolver<Mat> es(p_hat);
  const Mat q = es.eigenvectors();
  const Vec mu = es.eigenvalues();
  const double margin = 1e-6 * std::max(1.0, mu.cwiseAbs().maxCoeff());

  double pos_mass = 0.0;
  Vec alpha;
  if (r.kind == RepAction::Kind::Tensor) {
    const Tensor t = r.to_tensor(cur).in_frame(q);
    Tensor keep(r.n, r.valence);
    for (Eigen::Index fidx = 0; fidx < t.size(); ++fidx) {
      const double c = t.data()[fidx];
      if (c == 0.0) continue;
      double w = 0.0;  // covariant slots carry minus the frame eigenvalue
      for (int s : t.unflat(fidx)) w -= mu(s);
      if (w > margin)
        pos_mass += c * c;
      else if (w >= -margin)
        keep.data()[fidx] = c;
    }
    alpha = r.from_tensor(keep.in_frame(q.transpose()));
  } else {
    const Mat m = q.transpose() * r.to_matrix(cur) * q;
    Mat keep = Mat::Zero(r.n, r.n);
    for (int i = 0; i < r.n; ++i)
      for (int j = 0; j < r.n; ++j) {
        const double w = mu(i) - mu(j);  // Ad(exp(tP)) rate on E_ij
        if (std::abs(m(i, j)) == 0.0) continue;
        if (w > margin)
          pos_mass += m(i, j) * m(i, j);
        else if (w >= -margin)
          keep(i, j) = m(i, j);
      }
    alpha = r.from_matrix(q * keep * q.transpose());
  }

  if (pos_mass > 1e-20 * std::max(1.0, f0)) return false;
  alpha_out = alpha;
  return true;
}

}  // namespace

OrbitReport kempf_ness_flow(const Vec& v, const RepAction& r, const FlowConfig& cfg) {
  if (static_cast<int>(v.size()) != r.space_dim)
    throw Error("kempf_ness_flow: vector size does not match the representation");
  const double f0 = r.ip(v, v);
  if (f0 <= 0.0) throw Error("kempf_ness_flow: zero vector");

  OrbitReport rep;
  const RankInfo rank0 = orbit_rank(r, v);
  rep.orbit_dim_start = rank0.rank;
  const bool adjoint = r.kind != RepAction::Kind::Tensor;
  if (adjoint) rep.char_poly_start = char_poly(r.to_matrix(v));

  // Gate for collapse certificates.  Every polynomial invariant vanishes on
  // the null cone, so a nonzero invariant of the start vector rules out a
  // zero limit no matter what the numerics later suggest.  For tensors the
  // cheap one is the full eta-contraction of the square; for adjoint kinds
  // the characteristic coefficients, which vanish exactly on nilpotents.
  bool zero_possible = true;
  if (adjoint) {
    const double scale = std::sqrt(f0);
    for (size_t k = 0; k + 1 < rep.char_poly_start.size(); ++k) {
      const double bound = 1e-10 * std::pow(scale, static_cast<double>(r.n - k));
      if (std::abs(rep.char_poly_start[k]) > bound) zero_possible = false;
    }
  } else {
    double eta_square = 0.0;
    for (int a = 0; a < r.space_dim; ++a) {
      double term = v(a) * v(a);
      int rest = a;
      for (int i = 0; i < r.valence; ++i) {
        term *= r.form.eta(rest % r.n);
        rest /= r.n;
      }
      eta_square += term;
    }
    zero_possible = std::abs(eta_square) <= 1e-10 * f0;
  }

  Vec cur = v;
  double f = f0;
  double s_prev = 1.0;
  Mat accum = Mat::Zero(r.n, r.n);
  long stride = 1;
  double window_f = f0, window_disp = 0.0;
  long window_iter = 0;
  rep.norm_trace.push_back(std::sqrt(f0));

  auto finish_norms = [&](double grad_measure) {
    rep.final_gradient_norm = grad_measure;
    rep.final_norm = std::sqrt(f);
  };

  // Verdict at a stationary point.  Orbits in the closure boundary have
  // strictly smaller dimension, so an orbit-dimension drop since the start
  // proves the flow escaped the original orbit.
  auto classify_minimal = [&](const Vec& at, double grad_measure, long iters) {
    const RankInfo rank1 = orbit_rank(r, at);
    rep.orbit_dim_end = rank1.rank;
    if (adjoint) rep.char_poly_end = char_poly(r.to_matrix(at));
    if (rank0.clean && rank1.clean && rank1.rank < rank0.rank) {
      rep.verdict = OrbitReport::Verdict::NonClosed;
      rep.limit_vector = at;
      rep.certificate = "orbit_dim_drop";
    } else {
      rep.verdict = OrbitReport::Verdict::Closed;
      rep.minimal_vector = at;
      rep.certificate = "minimal_gradient";
    }
    finish_norms(grad_measure);
    rep.iterations = iters;
  };

  long iter = 0;
  for (; iter < cfg.max_iter; ++iter) {
    const Vec grad = r.p_gradient(cur);
    // The gradient entries <x v, v> are quadratic in v, so stationarity has
    // to be measured relative to |v|^2.  An absolute floor would fire on
    // orbits collapsing to zero, where grad ~ c*f long before f crosses the
    // zero-limit threshold, and misreport them as closed.
    const double gscale = std::max(f, 1e-300);
    const double grad_measure = grad.norm() / gscale;

    if (grad.size() == 0 || grad.cwiseAbs().maxCoeff() <= cfg.g_tol * gscale) {
      classify_minimal(cur, grad_measure, iter);
      return rep;
    }

    Mat dir = Mat::Zero(r.n, r.n);
    for (size_t i = 0; i < r.p_basis.size(); ++i)
      dir -= grad(static_cast<int>(i)) * r.p_basis[i];
    const double slope = -2.0 * grad.squaredNorm();  // d/ds |exp(s dir) v|^2 at 0

    // Cap the rapidity of a single step.  exp(s dir) scales weight components
    // by e^{w s}, so an uncapped trial step (the gradient norm can be enormous
    // far from minimality) underflows whole components to exact zero and the
    // flow teleports off the orbit onto its boundary, forging certificates.
    // The cap also bounds rounding amplification: a step of rapidity c leaks
    // about e^{2c} * eps of the norm into wrong-weight directions, and that
    // dirt must stay below the zero-limit threshold over a full collapse.
    // Runaway directions still converge fast, shedding e^{-2c} per step.
    const double dir_norm = dir.norm();
    double s = 2.0 * s_prev;
    if (s * dir_norm > cfg.rapidity_cap) s = cfg.rapidity_cap / dir_norm;
    Vec next;
    double f_next = f;
    bool accepted = false;
    for (int shrink = 0; shrink < 80; ++shrink) {
      next = r.act_exp(s * dir, cur);
      f_next = r.ip(next, next);
      // Strict decrease on top of the slope condition: once the slope margin
      // underflows next to f, equality steps would otherwise be "accepted"
      // and the flow would tread water at the rounding floor until max_iter.
      if (std::isfinite(f_next) && f_next < f && f_next <= f + cfg.armijo_c * s * slope) {
        accepted = true;
        break;
      }
      s *= cfg.shrink;
    }
    if (!accepted) {
      // The norm has reached its representable floor: no step changes f by a
      // full ulp anymore.  The stationarity residual is still resolvable far
      // below that, so polish it directly, accepting steps that shrink the
      // gradient at non-increasing norm.  This walks the flat valley bottom
      // to the pinned tolerance instead of stranding the verdict a few
      // binary digits above it.
      Vec gcur = grad;
      double gbest = gcur.norm();
      double sp = s_prev;
      const double fscale = std::max(f, 1e-300);
      for (int polish = 0; polish < 400; ++polish) {
        if (gcur.cwiseAbs().maxCoeff() <= cfg.g_tol * fscale) break;
        Mat pdir = Mat::Zero(r.n, r.n);
        for (size_t i = 0; i < r.p_basis.size(); ++i)
          pdir -= gcur(static_cast<int>(i)) * r.p_basis[i];
        double st = 2.0 * sp;
        const double pdn = pdir.norm();
        if (st * pdn > cfg.rapidity_cap) st = cfg.rapidity_cap / pdn;
        bool improved = false;
        for (int shrink = 0; shrink < 60; ++shrink) {
          const Vec pnext = r.act_exp(st * pdir, cur);
          const double pf = r.ip(pnext, pnext);
          if (std::isfinite(pf) && pf <= f * (1.0 + 1e-12)) {
            const Vec pgrad = r.p_gradient(pnext);
            if (pgrad.norm() < gbest) {
              cur = pnext;
              f = pf;
              gcur = pgrad;
              gbest = pgrad.norm();
              sp = st;
              rep.displacement += st * pdn;
              improved = true;
              break;
            }
          }
          st *= cfg.shrink;
        }
        if (!improved) break;
      }
      const double gscale2 = std::max(f, 1e-300);
      const double gm = gcur.norm() / gscale2;
      if (gcur.size() == 0 || gcur.cwiseAbs().maxCoeff() <= cfg.g_tol * gscale2) {
        classify_minimal(cur, gm, iter);
        return rep;
      }
      // Genuine floor above tolerance.  Report honestly rather than classify.
      rep.verdict = OrbitReport::Verdict::Undecided;
      rep.certificate = "";
      finish_norms(gm);
      rep.iterations = iter;
      rep.orbit_dim_end = orbit_rank(r, cur).rank;
      if (adjoint) rep.char_poly_end = char_poly(r.to_matrix(cur));
      return rep;
    }

    const bool contracting = f_next <= 0.7 * f;
    cur = next;
    f = f_next;
    s_prev = s;
    rep.displacement += s * dir.norm();
    accum += s * dir;

    if ((iter + 1) % stride == 0) {
      rep.norm_trace.push_back(std::sqrt(f));
      if (rep.norm_trace.size() > 256) {
        std::vector<double> half;
        for (size_t i = 0; i < rep.norm_trace.size(); i += 2)
          half.push_back(rep.norm_trace[i]);
        rep.norm_trace.swap(half);
        stride *= 2;
      }
    }

    // The norm collapsed: 0 is in the orbit closure, and 0 is not in the
    // orbit of a nonzero vector under an invertible action.  A genuine
    // collapse cannot be followed to the bottom in double precision: each
    // step leaks a little of the norm into wrong-weight directions, and the
    // accumulated dirt floors the norm around 1e-11 of the start.  So the
    // certificate fires once the invariant gate is open, the norm has
    // dropped through zero_rel, and the step that crossed was still
    // contracting geometrically (an approach to a positive minimum levels
    // off instead).
    if (zero_possible && f <= cfg.zero_rel * f0 && (contracting || f <= 1e-16 * f0)) {
      rep.verdict = OrbitReport::Verdict::NonClosed;
      rep.limit_vector = Vec::Zero(r.space_dim);
      rep.certificate = "zero_limit";
      if (adjoint) rep.char_poly_end = char_poly(Mat(Mat::Zero(r.n, r.n)));
      rep.orbit_dim_end = 0;
      finish_norms(grad_measure);
      rep.iterations = iter + 1;
      return rep;
    }

    // Norm stalled while the group element ran away: try to certify the
    // degeneration structurally along the accumulated direction.
    if (iter - window_iter >= cfg.stall_window) {
      const bool stalled = (window_f - f) <= 1e-10 * std::max(f, 1e-300) &&
                           (rep.displacement - window_disp) >= cfg.stall_displacement;
      if (stalled) {
        Vec alpha;
        if (structural_limit(r, cur, accum, f0, alpha)) {
          const double fa = r.ip(alpha, alpha);
          if (zero_possible && fa <= 1e-20 * f0) {
            rep.verdict = OrbitReport::Verdict::NonClosed;
            rep.limit_vector = Vec::Zero(r.space_dim);
            rep.certificate = "zero_limit";
            rep.orbit_dim_end = 0;
            if (adjoint) rep.char_poly_end = char_poly(Mat(Mat::Zero(r.n, r.n)));
            finish_norms(grad_measure);
            rep.iterations = iter + 1;
            return rep;
          }
          const RankInfo ra = orbit_rank(r, alpha);
          if (f - fa >= 1e-12 * f0 && rank0.clean && ra.clean && ra.rank < rank0.rank) {
            rep.verdict = OrbitReport::Verdict::NonClosed;
            rep.limit_vector = alpha;
            rep.certificate = "orbit_dim_drop";
            rep.orbit_dim_end = ra.rank;
            if (adjoint) rep.char_poly_end = char_poly(r.to_matrix(alpha));
            finish_norms(grad_measure);
            rep.iterations = iter + 1;
            return rep;
          }
        }
      }
      window_iter = iter;
      window_f = f;
      window_disp = rep.displacement;
    }
  }

  rep.verdict = OrbitReport::Verdict::Undecided;
  const Vec grad = r.p_gradient(cur);
  finish_norms(grad.norm() / std::max(f, 1e-300));
  rep.iterations = iter;
  rep.orbit_dim_end = orbit_rank(r, cur).rank;
  if (adjoint) rep.char_poly_end = char_poly(r.to_matrix(cur));
  return rep;
}

Tensor degeneration_limit(const BoostWeightDecomp& bw, const Vec& lambda) {
  if (static_cast<int>(lambda.size()) != bw.k)
    throw Error("degeneration_limit: lambda size does not match the rank");
  Tensor out(bw.n, bw.valence);
  const double tol = 1e-9 * (1.0 + lambda.cwiseAbs().maxCoeff());
  for (const auto& [w, comp] : bw.components) {
    double dot = 0.0;
    for (int i = 0; i < bw.k; ++i) dot += w[i] * lambda(i);
    if (dot > tol) {
      std::ostringstream os;
      os << "degeneration_limit: weight with positive rate " << dot << " has no limit";
      throw Error(os.str());
    }
    if (dot >= -tol) out = out + comp;
  }
  return out;
}

InvariantRecord adjoint_invariants(const Mat& x) {
  InvariantRecord rec;
  rec.char_poly = char_poly(x);
  rec.norm = x.norm();
  return rec;
}

bool same_invariants(const InvariantRecord& a, const InvariantRecord& b, double tol) {
  if (a.char_poly.size() != b.char_poly.size()) return false;
  double scale = 1.0;
  for (size_t i = 0; i < a.char_poly.size(); ++i)
    scale = std::max({scale, std::abs(a.char_poly[i]), std::abs(b.char_poly[i])});
  for (size_t i = 0; i < a.char_poly.size(); ++i)
    if (std::abs(a.char_poly[i] - b.char_poly[i]) > tol * scale) return false;
  return std::abs(a.norm - b.norm) <= tol * std::max({1.0, a.norm, b.norm});
}

CanonicalForm lorentz_canonical_form(const Mat& x, const RealForm& f) {
  if (!f.standard || f.q != 1) throw Error("lorentz_canonical_form: needs standard o(n-1,1)");
  if (f.n > 8) throw Error("lorentz_canonical_form: n > 8 not supported");
  const int n = f.n;
  const int m = n - 1;
  if (x.rows() != n || x.cols() != n) throw Error("lorentz_canonical_form: size mismatch");
  {
    const Mat e = f.eta.asDiagonal();
    if ((x.transpose() * e + e * x).norm() > 1e-8 * std::max(1.0, x.norm()))
      throw Error("lorentz_canonical_form: x is not in o(n-1,1)");
  }
  const RepAction adj = adjoint_action(f);
  if (!adj.minimal(adj.from_matrix(x)))
    throw Error("lorentz_canonical_form: x is not a minimal vector (A w != 0)");

  const Mat a = x.topLeftCorner(m, m);
  const Vec w = x.block(0, m, m, 1);
  const SkewNormalForm snf = skew_normal_form(a);
  Vec w1 = snf.g * w;

  // Minimality puts w in ker A, i.e. in the trailing zero block after the
  // rotation; tiny leakage into the rotation blocks is numerical noise.
  const int block_dim = m - snf.zero_dim;
  if (block_dim > 0 && w1.head(block_dim).norm() > 1e-8 * std::max(1.0, w.norm()))
    throw Error("lorentz_canonical_form: boost part escapes ker A");
  CanonicalForm cf;
  cf.rotation_params = snf.params;

  Mat h = Mat::Identity(m, m);
  const double wnorm = snf.zero_dim > 0 ? w1.tail(snf.zero_dim).norm() : 0.0;
  if (snf.zero_dim > 0 && wnorm > 1e-14) {
    // Orthogonal map of the kernel coordinates sending w there to |w| e_1.
    const Vec wk = w1.tail(snf.zero_dim);
    Mat hk = Mat::Identity(snf.zero_dim, snf.zero_dim);
    Vec target = Vec::Zero(snf.zero_dim);
    target(0) = wnorm;
    const Vec diff = wk - target;
    if (diff.norm() > 1e-14 * wnorm) {
      const Vec u = diff / diff.norm();
      hk -= 2.0 * u * u.transpose();  // Householder reflection
    }
    h.block(block_dim, block_dim, snf.zero_dim, snf.zero_dim) = hk;
  }
  cf.kernel_vector_norms = {wnorm};

  Mat k = Mat::Identity(n, n);
  k.topLeftCorner(m, m) = h * snf.g;
  cf.conjugator = k;
  cf.residual = k * x * k.transpose();  // k in O(n-1) x O(1), k^{-1} = k^T

  // Clean the residual to its exact canonical pattern.
  Mat canon = Mat::Zero(n, n);
  canon.topLeftCorner(m, m) = snf.canon;
  if (snf.zero_dim > 0) {
    canon(block_dim, m) = wnorm;
    canon(m, block_dim) = wnorm;
  }
  if ((cf.residual - canon).norm() > 1e-7 * std::max(1.0, x.norm()))
    throw Error("lorentz_canonical_form: canonical residual check failed");
  cf.residual = canon;
  return cf;
}

Sl2OrbitCount sl2_real_orbit_count(const Mat& x) {
  if (x.rows() != 2 || x.cols() != 2) throw Error("sl2_real_orbit_count: need a 2x2 matrix");
  const RepAction r = sl2_adjoint_action();
  if (!r.minimal(r.from_matrix(x)))
    throw Error("sl2_real_orbit_count: orbit is not closed (x is not minimal)");

  Sl2OrbitCount out;
  if (x.norm() < 1e-14) {
    out.count = 1;
    out.representatives = {x};
    return out;
  }

  // -x is in Gx iff it is in the SO(2)-orbit of x (minimal vectors meet each
  // closed orbit in exactly one K-orbit).  Grid the angle, then polish.
  auto mismatch = [&](double theta) {
    Mat rot(2, 2);
    rot << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
    return (rot * x * rot.transpose() + x).norm();
  };
  const double kPi = 3.14159265358979323846;
  double best_theta = 0.0, best = mismatch(0.0);
  const double step = 1e-6 * kPi;
  for (double theta = step; theta < kPi; theta += step) {
    const double v = mismatch(theta);
    if (v < best) {
      best = v;
      best_theta = theta;
    }
  }
  double lo = best_theta - step, hi = best_theta + step;
  for (int i = 0; i < 200; ++i) {  // golden-free trisection polish
    const double t1 = lo + (hi - lo) / 3.0, t2 = hi - (hi - lo) / 3.0;
    if (mismatch(t1) < mismatch(t2))
      hi = t2;
    else
      lo = t1;
  }
  best = std::min(best, mismatch(0.5 * (lo + hi)));

  if (best <= 1e-8 * x.norm()) {
    out.count = 1;
    out.representatives = {x};
  } else {
    out.count = 2;
    out.representatives = {x, Mat(-x)};
  }
  return out;
}

Vec intersect_with_compact(const Vec& v, const RepAction& r, const RepAction& compact) {
  if (compact.space_dim != r.space_dim)
    throw Error("intersect_with_compact: representation spaces disagree");
  if (!compact.p_basis.empty())
    throw Error("intersect_with_compact: the compact action must have no p part");
  const OrbitReport rep = kempf_ness_flow(v, r);
  if (rep.verdict != OrbitReport::Verdict::Closed)
    throw Error("intersect_with_compact: orbit is not closed, no intersection point");
  const Vec w = *rep.minimal_vector;
  if (!r.minimal(w)) throw Error("intersect_with_compact: flow output is not minimal");
  return w;
}

SwappedBlockReport swapped_block_example(double a, double b, int p, int q) {
  if (p < 2 || q < 2) throw Error("swapped_block_example: need p, q >= 2");
  const int n = p + q;
  auto build = [&](double top, double bottom) {
    Mat x = Mat::Zero(n, n);
    x(0, 1) = top;
    x(1, 0) = -top;
    x(p, p + 1) = bottom;
    x(p + 1, p) = -bottom;
    return x;
  };
  SwappedBlockReport rep;
  rep.x1 = build(a, b);
  rep.x2 = build(b, a);

  auto polys_equal = [](const std::vector<Complex>& u, const std::vector<Complex>& v) {
    double scale = 1.0;
    for (const Complex& c : u) scale = std::max(scale, std::abs(c));
    for (size_t i = 0; i < u.size(); ++i)
      if (std::abs(u[i] - v[i]) > 1e-10 * scale) return false;
    return true;
  };
  rep.same_compact_orbit = polys_equal(char_poly(rep.x1), char_poly(rep.x2));
  const bool top_match = polys_equal(char_poly(Mat(rep.x1.topLeftCorner(p, p))),
                                     char_poly(Mat(rep.x2.topLeftCorner(p, p))));
  const bool bottom_match = polys_equal(char_poly(Mat(rep.x1.bottomRightCorner(q, q))),
                                        char_poly(Mat(rep.x2.bottomRightCorner(q, q))));
  rep.same_kk_orbit = top_match && bottom_match;
  return rep;
}

namespace {

Complex hermitian_pure(const std::vector<CVec>& z, const std::vector<CVec>& w) {
  Complex prod(1.0, 0.0);
  for (size_t s = 0; s < z.size(); ++s) prod *= z[s].dot(w[s]);  // Eigen dot conjugates z
  return prod;
}

}  // namespace

HermitianReport check_compatible_hermitian(const CompatibleTriple& triple, int valence,
                                           unsigned seed) {
  const int n = triple.f1.n;
  if (valence < 1) throw Error("check_compatible_hermitian: valence must be positive");
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::normal_distribution<double> gauss(0.0, 1.0);
  HermitianReport rep;

  auto random_cvec = [&]() {
    CVec z(n);
    for (int i = 0; i < n; ++i) z(i) = Complex(gauss(rng), gauss(rng));
    return z;
  };

  // (1) Invariance under the compact real form: skew real x acting slotwise.
  for (int trial = 0; trial < 20; ++trial) {
    Mat raw(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) raw(i, j) = gauss(rng);
    const Mat x = 0.5 * (raw - raw.transpose());
    std::vector<CVec> z, w;
    for (int s = 0; s < valence; ++s) {
      z.push_back(random_cvec());
      w.push_back(random_cvec());
    }
    Complex sum(0.0, 0.0);
    double scale = 1.0;
    for (int s = 0; s < valence; ++s) {
      std::vector<CVec> xz = z, xw = w;
      xz[s] = x.cast<Complex>() * z[s];
      xw[s] = x.cast<Complex>() * w[s];
      sum += hermitian_pure(xz, w) + hermitian_pure(z, xw);
      scale = std::max(scale, std::abs(hermitian_pure(z, w)));
    }
    if (std::abs(sum) > 1e-10 * scale * std::max(1.0, x.norm())) {
      std::ostringstream os;
      os << "compact invariance violated on sample " << trial << " (|sum| = " << std::abs(sum)
         << ")";
      rep.violation = os.str();
      return rep;
    }
  }

  // (2) Real-valuedness on tensors over each slice.
  for (int which = 0; which < 2; ++which) {
    const RealForm& f = which == 0 ? triple.f1 : triple.f2;
    const Subspace fixed = fixed_space(antilinear_vec_op(f.conjugator));
    if (fixed.dim() != n) {
      rep.violation = "slice has wrong real dimension";
      return rep;
    }
    std::vector<CVec> slice;
    for (int c = 0; c < n; ++c) slice.push_back(unrealify(fixed.basis.col(c)));

    for (int trial = 0; trial < 20; ++trial) {
      auto random_slice_vec = [&]() {
        CVec z = CVec::Zero(n);
        for (int c = 0; c < n; ++c) z += Complex(gauss(rng), 0.0) * slice[c];
        return z;
      };
      std::vector<CVec> z, w;
      for (int s = 0; s < valence; ++s) {
        z.push_back(random_slice_vec());
        w.push_back(random_slice_vec());
      }
      const Complex val = hermitian_pure(z, w);
      if (std::abs(val.imag()) > 1e-10 * std::max(1.0, std::abs(val))) {
        std::ostringstream os;
        os << "Hermitian product not real on slice " << (which + 1) << " sample " << trial
           << " (imag = " << val.imag() << ")";
        rep.violation = os.str();
        return rep;
      }
    }
  }

  rep.ok = true;
  return rep;
}

}  // namespace wickgit
