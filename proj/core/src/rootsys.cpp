#include "wickgit/rootsys.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

namespace wickgit {

namespace {

constexpr double kPrimes[] = {2.0, 3.0, 5.0, 7.0, 11.0, 13.0, 17.0, 19.0};

Vec vec_of(const Mat& m) {
  return Eigen::Map<const Vec>(m.data(), m.size());
}

Mat mat_of(const Vec& v, int n) {
  return Eigen::Map<const Mat>(v.data(), n, n);
}

int round_checked(double x, const char* what) {
  const double r = std::round(x);
  if (std::abs(x - r) > tol::kWeightInt) {
    std::ostringstream os;
    os << what << ": value " << x << " is not an integer to 1e-8";
    throw Error(os.str());
  }
  return static_cast<int>(r);
}

bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool lex_positive(const std::vector<int>& a) {
  for (int v : a) {
    if (v > 0) return true;
    if (v < 0) return false;
  }
  return false;
}

std::vector<int> negated(const std::vector<int>& a) {
  std::vector<int> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

std::string classify_label(const std::vector<std::pair<std::vector<int>, int>>& roots, int k) {
  if (roots.empty()) return "trivial";
  std::set<std::vector<int>> rset;
  for (const auto& r : roots) rset.insert(r.first);

  auto has = [&](std::vector<int> v) { return rset.count(v) > 0; };
  auto unit = [&](int i, int s) {
    std::vector<int> v(k, 0);
    v[i] = s;
    return v;
  };

  if (k == 1) {
    if (rset.size() == 2 && has(unit(0, 1)) && has(unit(0, -1))) return "A1";
    return "unknown";
  }

  bool all_pairs = true;
  size_t expected = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          std::vector<int> v(k, 0);
          v[i] = si;
          v[j] = sj;
          ++expected;
          if (!has(v)) all_pairs = false;
        }
  bool all_shorts = true;
  for (int i = 0; i < k; ++i)
    for (int s : {1, -1})
      if (!has(unit(i, s))) all_shorts = false;

  if (all_pairs && all_shorts && rset.size() == expected + 2 * k)
    return "B" + std::to_string(k);
  if (all_pairs && rset.size() == expected) return "D" + std::to_string(k);
  return "unknown";
}

}  // namespace

Subspace maximal_abelian(const RealForm& f) {
  if (!f.standard) throw Error("maximal_abelian: needs the standard o(p,q) embedding");
  if (f.n > 16) throw Error("maximal_abelian: n > 16 not supported");
  const int n = f.n;
  const int k = std::min(f.p, f.q);

  std::vector<Mat> gens;
  for (int i = 0; i < k; ++i) {
    Mat a = Mat::Zero(n, n);
    a(i, f.p + i) = 1.0;
    a(f.p + i, i) = 1.0;
    gens.push_back(a);
  }

  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if ((gens[i] * gens[j] - gens[j] * gens[i]).norm() > tol::kBracket)
        throw Error("maximal_abelian: generators fail to commute");

  // Maximality certificate: the centralizer of a inside p is a itself.
  // Solve [y, a_i] = 0 over the p basis and check the kernel dimension.
  if (k > 0) {
    const int dp = f.dim_p;
    Mat sys(k * n * n, dp);
    for (int b = 0; b < dp; ++b) {
      const Mat& y = f.frame_basis[f.dim_t + b];
      for (int i = 0; i < k; ++i)
        sys.block(i * n * n, b, n * n, 1) = vec_of(y * gens[i] - gens[i] * y);
    }
    Eigen::FullPivLU<Mat> lu(sys);
    lu.setThreshold(1e-10);
    if (lu.dimensionOfKernel() != k)
      throw Error("maximal_abelian: centralizer rank certificate failed");
  }

  Subspace a;
  a.ambient_dim = n * n;
  a.basis = Mat(n * n, k);
  for (int i = 0; i < k; ++i) a.basis.col(i) = vec_of(gens[i]) / std::sqrt(2.0);
  return a;
}

RestrictedRootSystem restricted_roots(const RealForm& f, const Subspace& a) {
  if (!f.standard) throw Error("restricted_roots: needs the standard o(p,q) embedding");
  const int n = f.n;
  if (a.ambient_dim != n * n) throw Error("restricted_roots: ambient mismatch");
  const int k = a.dim();

  RestrictedRootSystem rs;
  rs.n = n;
  rs.k = k;
  rs.a_basis = a;

  // Read the generators back and normalize scale so the vector-representation
  // eigenvalues land on integers later (scale itself is arbitrary here).
  for (int i = 0; i < k; ++i) {
    Mat y = mat_of(a.basis.col(i), n);
    if ((y - y.transpose()).norm() > tol::kSymmetry ||
        (f.theta_frame(y) + y).norm() > tol::kSymmetry)
      throw Error("restricted_roots: a is not contained in the p part");
    rs.generators.push_back(y);
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if ((rs.generators[i] * rs.generators[j] - rs.generators[j] * rs.generators[i]).norm() >
          tol::kBracket)
        throw Error("restricted_roots: a is not abelian");

  const int dim = f.dim();

  if (k == 0) {
    rs.m_dim = dim;
    rs.label = "trivial";
    rs.lambda_on_generators = Mat(0, 0);
    rs.vector_frame = Mat::Identity(n, n);
    rs.vector_weights = Eigen::MatrixXi(n, 0);
    return rs;
  }

  if (k > static_cast<int>(sizeof(kPrimes) / sizeof(kPrimes[0])))
    throw Error("restricted_roots: rank too large");

  // Vector-representation weights: joint eigenframe of the commuting symmetric
  // generators, separated by a generic sqrt-prime combination.
  Mat y_gen = Mat::Zero(n, n);
  for (int i = 0; i < k; ++i) y_gen += std::sqrt(kPrimes[i]) * rs.generators[i];
  Eigen::SelfAdjointEigenSolver<Mat> ves(y_gen);
  Mat q = ves.eigenvectors();

  Mat mu(n, k);  // row a = weight of eigenvector a on the given generators
  for (int a_i = 0; a_i < n; ++a_i)
    for (int i = 0; i < k; ++i)
      mu(a_i, i) = q.col(a_i).dot(rs.generators[i] * q.col(a_i));

  // Pick one representative per +- pair of nonzero weights, lex-descending.
  const double wtol = 1e-6;
  auto weights_equal = [&](const Vec& x, const Vec& y) { return (x - y).norm() < wtol; };
  std::vector<Vec> reps;
  std::vector<char> claimed(n, 0);
  for (int a_i = 0; a_i < n; ++a_i) {
    if (claimed[a_i] || mu.row(a_i).norm() < wtol) continue;
    Vec w = mu.row(a_i).transpose();
    bool found_partner = false;
    for (int b_i = 0; b_i < n; ++b_i) {
      if (b_i == a_i || claimed[b_i]) continue;
      if (weights_equal(mu.row(b_i).transpose(), Vec(-w))) {
        claimed[a_i] = claimed[b_i] = 1;
        found_partner = true;
        break;
      }
    }
    if (!found_partner) throw Error("restricted_roots: unpaired vector weight");
    bool is_new = true;
    for (const Vec& r : reps)
      if (weights_equal(r, w) || weights_equal(r, Vec(-w))) is_new = false;
    if (is_new) {
      // Lex-positive representative of the pair.
      double lead = 0.0;
      for (int i = 0; i < k; ++i)
        if (std::abs(w(i)) > wtol) {
          lead = w(i);
          break;
        }
      reps.push_back(lead >= 0 ? w : Vec(-w));
    }
  }
  if (static_cast<int>(reps.size()) != k)
    throw Error("restricted_roots: vector weight count differs from the rank");
  std::sort(reps.begin(), reps.end(), [](const Vec& x, const Vec& y) {
    for (int i = 0; i < x.size(); ++i) {
      if (x(i) > y(i) + 1e-9) return true;
      if (x(i) < y(i) - 1e-9) return false;
    }
    return false;
  });

  Mat lambda(k, k);  // L(i, J) = lambda_J(generators[i])
  for (int J = 0; J < k; ++J) lambda.col(J) = reps[J];
  if (std::abs(lambda.determinant()) < 1e-10)
    throw Error("restricted_roots: vector weights are degenerate");
  rs.lambda_on_generators = lambda;
  const Mat lambda_inv = lambda.inverse();

  // Integer weights of the eigenframe and the null-frame column order
  // (l_1, n_1, ..., l_k, n_k, then the weight-zero directions).
  Eigen::MatrixXi wints(n, k);
  for (int a_i = 0; a_i < n; ++a_i) {
    Vec c = lambda_inv * mu.row(a_i).transpose();
    for (int J = 0; J < k; ++J)
      wints(a_i, J) = round_checked(c(J), "restricted_roots vector weight");
  }
  std::vector<int> order;
  std::vector<char> used(n, 0);
  for (int J = 0; J < k; ++J)
    for (int sign : {1, -1}) {
      int found = -1;
      for (int a_i = 0; a_i < n; ++a_i) {
        if (used[a_i]) continue;
        bool match = true;
        for (int c = 0; c < k; ++c)
          if (wints(a_i, c) != (c == J ? sign : 0)) match = false;
        if (match) {
          found = a_i;
          break;
        }
      }
      if (found < 0) throw Error("restricted_roots: missing null-frame direction");
      used[found] = 1;
      order.push_back(found);
    }
  for (int a_i = 0; a_i < n; ++a_i)
    if (!used[a_i]) order.push_back(a_i);

  rs.vector_frame = Mat(n, n);
  rs.vector_weights = Eigen::MatrixXi(n, k);
  for (int c = 0; c < n; ++c) {
    Vec col = q.col(order[c]);
    int arg = 0;
    col.cwiseAbs().maxCoeff(&arg);
    if (col(arg) < 0) col = -col;
    rs.vector_frame.col(c) = col;
    rs.vector_weights.row(c) = wints.row(order[c]);
  }

  // Adjoint decomposition: a B-orthonormal basis (B = -kappa(., theta .))
  // makes every ad(y), y in a, a symmetric matrix.
  std::vector<CMat> cbasis;
  for (const Mat& y : f.frame_basis) cbasis.push_back(y.cast<Complex>());
  const Mat kappa = killing_form(cbasis);
  Mat theta_diag = Mat::Identity(dim, dim);
  for (int i = f.dim_t; i < dim; ++i) theta_diag(i, i) = -1.0;
  Mat b_gram = -kappa * theta_diag;
  b_gram = 0.5 * (b_gram + b_gram.transpose()).eval();
  Eigen::LLT<Mat> llt(b_gram);
  if (llt.info() != Eigen::Success)
    throw Error("restricted_roots: -kappa(., theta .) is not positive definite");
  const Mat linv_t = Mat(llt.matrixL()).inverse().transpose();

  Mat basis_cols(n * n, dim);  // B-orthonormal basis, vec()'d
  {
    Mat raw(n * n, dim);
    for (int b = 0; b < dim; ++b) raw.col(b) = vec_of(f.frame_basis[b]);
    basis_cols = raw * linv_t;
  }

  std::vector<Mat> ad(k);  // ad(generator_i) in the orthonormal basis
  for (int i = 0; i < k; ++i) {
    Mat m(dim, dim);
    for (int b = 0; b < dim; ++b) {
      const Mat xb = mat_of(basis_cols.col(b), n);
      m.col(b) = coordinates_in_basis(basis_cols, vec_of(rs.generators[i] * xb - xb * rs.generators[i]),
                                      tol::kBracket);
    }
    if ((m - m.transpose()).norm() > 1e-8 * std::max(1.0, m.norm()))
      throw Error("restricted_roots: ad(a) failed to be symmetric");
    ad[i] = 0.5 * (m + m.transpose());
  }

  Mat ad_gen = Mat::Zero(dim, dim);
  for (int i = 0; i < k; ++i) ad_gen += std::sqrt(kPrimes[i]) * ad[i];
  Eigen::SelfAdjointEigenSolver<Mat> aes(ad_gen);

  std::map<std::vector<int>, int> clusters;
  for (int e = 0; e < dim; ++e) {
    const Vec v = aes.eigenvectors().col(e);
    Vec r(k);
    for (int i = 0; i < k; ++i) r(i) = v.dot(ad[i] * v);
    const Vec c = lambda_inv * r;
    std::vector<int> key(k);
    for (int J = 0; J < k; ++J) key[J] = round_checked(c(J), "restricted_roots root");
    clusters[key] += 1;
  }

  const std::vector<int> zero(k, 0);
  int counted = 0;
  for (const auto& [key, mult] : clusters) {
    if (key == zero) {
      rs.m_dim = mult - k;
      if (rs.m_dim < 0) throw Error("restricted_roots: zero cluster smaller than the rank");
    } else {
      rs.roots.push_back({key, mult});
      counted += mult;
    }
  }
  if (k + rs.m_dim + counted != dim)
    throw Error("restricted_roots: dimension identity failed");

  // +- pairing, positivity (lex), simple roots (indecomposable positives).
  for (const auto& [key, mult] : rs.roots) {
    bool paired = false;
    for (const auto& [other, omult] : rs.roots)
      if (other == negated(key) && omult == mult) paired = true;
    if (!paired) throw Error("restricted_roots: roots are not +- symmetric");
    if (lex_positive(key)) rs.positive_roots.push_back(key);
  }
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(), lex_less);
  for (const auto& alpha : rs.positive_roots) {
    bool decomposable = false;
    for (const auto& beta : rs.positive_roots)
      for (const auto& gamma : rs.positive_roots) {
        std::vector<int> sum(k);
        for (int i = 0; i < k; ++i) sum[i] = beta[i] + gamma[i];
        if (sum == alpha) decomposable = true;
      }
    if (!decomposable) rs.simple_roots.push_back(alpha);
  }
  rs.chamber = rs.simple_roots;
  rs.label = classify_label(rs.roots, k);
  return rs;
}

BoostGenerators boost_generators(const RestrictedRootSystem& rs) {
  BoostGenerators bg;
  bg.n = rs.n;
  bg.k = rs.k;
  bg.frame = rs.vector_frame;
  bg.vector_weights = rs.vector_weights;
  if (rs.k == 0) return bg;

  const int k = rs.k;
  if (static_cast<int>(rs.simple_roots.size()) != k)
    throw Error("boost_generators: need exactly rank-many simple roots");

  Mat s(k, k);  // rows = simple roots in lambda coordinates
  for (int J = 0; J < k; ++J)
    for (int c = 0; c < k; ++c) s(J, c) = rs.simple_roots[J][c];

  // alpha_J(sum_i c_i Y_i) = (S L^T c)_J, so the x^I solve S L^T C = Id.
  const Mat a_mat = s * rs.lambda_on_generators.transpose();
  Eigen::FullPivLU<Mat> lu(a_mat);
  if (!lu.isInvertible()) throw Error("boost_generators: singular simple-root system");
  const Mat coeff = lu.inverse();
  for (int I = 0; I < k; ++I) {
    Mat x = Mat::Zero(rs.n, rs.n);
    for (int i = 0; i < k; ++i) x += coeff(i, I) * rs.generators[i];
    bg.x_list.push_back(x);
  }

  // Paired-boost axes: lambda_K(sum d_i Y_i) = (L^T d)_K = delta_KJ.
  const Mat dual = rs.lambda_on_generators.transpose().inverse();
  for (int J = 0; J < k; ++J) {
    Mat b = Mat::Zero(rs.n, rs.n);
    for (int i = 0; i < k; ++i) b += dual(i, J) * rs.generators[i];
    bg.boost_axes.push_back(b);
  }

  // Defining properties, re-verified on the way out.
  for (int I = 0; I < k; ++I) {
    const Vec lam = rs.lambda_on_generators.transpose() * coeff.col(I);
    for (int J = 0; J < k; ++J) {
      double alpha = 0.0;  // alpha_J(x^I) via lambda coordinates
      for (int c = 0; c < k; ++c) alpha += rs.simple_roots[J][c] * lam(c);
      if (std::abs(alpha - (I == J ? 1.0 : 0.0)) > 1e-12)
        throw Error("boost_generators: normalization check failed");
      if ((bg.x_list[I] * bg.x_list[J] - bg.x_list[J] * bg.x_list[I]).norm() > 1e-12)
        throw Error("boost_generators: generators fail to commute");
    }
  }
  for (int J = 0; J < k; ++J)
    for (int a = 0; a < rs.n; ++a) {
      const double ev = bg.frame.col(a).dot(bg.boost_axes[J] * bg.frame.col(a));
      if (std::abs(ev - bg.vector_weights(a, J)) > tol::kWeightInt)
        throw Error("boost_generators: non-integer frame eigenvalue");
    }
  return bg;
}

BoostWeightDecomp bw_decompose(const Tensor& t, const BoostGenerators& x) {
  if (t.n() != x.n) throw Error("bw_decompose: dimension mismatch");
  BoostWeightDecomp out;
  out.n = t.n();
  out.k = x.k;
  out.valence = t.valence();

  const Tensor in_null = t.in_frame(x.frame);
  std::map<std::vector<int>, Tensor> parts;
  for (Eigen::Index fidx = 0; fidx < in_null.size(); ++fidx) {
    if (in_null.data()[fidx] == 0.0) continue;
    const std::vector<int> idx = in_null.unflat(fidx);
    std::vector<int> w(x.k, 0);  // covariant slots carry minus the eigenvalue
    for (int s : idx)
      for (int J = 0; J < x.k; ++J) w[J] -= x.vector_weights(s, J);
    auto it = parts.find(w);
    if (it == parts.end()) it = parts.emplace(w, Tensor(out.n, out.valence)).first;
    it->second.data()[fidx] = in_null.data()[fidx];
  }

  Tensor sum(out.n, out.valence);
  for (auto& [w, part] : parts) {
    const Tensor back = part.in_frame(x.frame.transpose());
    out.components.emplace(w, back);
    out.support.push_back(w);
    sum = sum + back;
  }
  if ((sum - t).norm() > tol::kResidual * std::max(1.0, t.norm()))
    throw Error("bw_decompose: reconstruction failed");
  return out;
}

namespace {

/// Feasibility of {l != 0 : g l <= 0} where the rows of g span the space.
/// Any such l is automatically strict somewhere.  Extreme rays of the
/// (pointed) feasible cone lie on m-1 independent active constraints.
bool reduced_sg(const std::vector<Vec>& gamma, int m, Vec& out) {
  auto feasible = [&](const Vec& l) {
    if (l.norm() < 1e-12) return false;
    for (const Vec& b : gamma)
      if (b.dot(l) > 1e-12 * std::max(1.0, b.norm() * l.norm())) return false;
    return true;
  };

  std::vector<Vec> candidates;
  if (m == 1) {
    candidates.push_back(Vec::Constant(1, 1.0));
    candidates.push_back(Vec::Constant(1, -1.0));
  } else if (m == 2) {
    for (const Vec& b : gamma) {
      Vec perp(2);
      perp << -b(1), b(0);
      candidates.push_back(perp);
      candidates.push_back(-perp);
    }
  } else if (m == 3) {
    for (size_t i = 0; i < gamma.size(); ++i)
      for (size_t j = i + 1; j < gamma.size(); ++j) {
        const Eigen::Vector3d cr =
            Eigen::Vector3d(gamma[i]).cross(Eigen::Vector3d(gamma[j]));
        if (cr.norm() < 1e-9) continue;
        candidates.push_back(cr);
        candidates.push_back(-cr);
      }
  } else {
    // Enumerate nullspaces of (m-1)-subsets when affordable, otherwise fall
    // back to a relaxation sweep over perturbed negative sums.
    const size_t cnt = gamma.size();
    double combos = 1.0;
    for (int i = 0; i < m - 1; ++i) combos *= static_cast<double>(cnt - i) / (i + 1);
    if (combos <= 2e5) {
      std::vector<int> pick(m - 1);
      std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == m - 1) {
          Mat rows(m - 1, m);
          for (int r = 0; r < m - 1; ++r) rows.row(r) = gamma[pick[r]].transpose();
          Eigen::FullPivLU<Mat> lu(rows);
          lu.setThreshold(1e-9);
          if (lu.dimensionOfKernel() != 1) return;
          const Vec dir = lu.kernel().col(0);
          candidates.push_back(dir);
          candidates.push_back(-dir);
          return;
        }
        for (int i = start; i < static_cast<int>(cnt); ++i) {
          pick[depth] = i;
          rec(i + 1, depth + 1);
        }
      };
      rec(0, 0);
    }
    Vec l = Vec::Zero(m);
    for (const Vec& b : gamma) l -= b;
    for (int iter = 0; iter < 20000; ++iter) {
      bool moved = false;
      for (const Vec& b : gamma) {
        const double viol = b.dot(l);
        if (viol > 0) {
          l -= (viol / b.squaredNorm()) * b;
          moved = true;
        }
      }
      if (!moved) break;
    }
    candidates.push_back(l);
  }

  for (const Vec& c : candidates)
    if (feasible(c)) {
      out = c;
      return true;
    }
  return false;
}

}  // namespace

SgResult sg_property(const std::vector<std::vector<int>>& support) {
  if (support.empty()) throw Error("sg_property: empty support");
  const int k = static_cast<int>(support.front().size());
  std::set<std::vector<int>> dedup;
  for (const auto& b : support) {
    if (static_cast<int>(b.size()) != k) throw Error("sg_property: ragged support");
    dedup.insert(b);
  }

  SgResult res;
  res.lambda = Vec::Zero(k);

  std::vector<Vec> nonzero;
  for (const auto& b : dedup) {
    Vec v(k);
    bool is_zero = true;
    for (int i = 0; i < k; ++i) {
      v(i) = b[i];
      if (b[i] != 0) is_zero = false;
    }
    if (!is_zero) nonzero.push_back(v);
  }
  if (nonzero.empty()) return res;  // only the zero weight: nothing strict

  // Work inside span(Gamma): lambda may be taken there, and in coordinates
  // b'_j = b . v_j (independent v_j from Gamma) the reduced support spans,
  // which makes every nonzero feasible vector strict automatically.
  std::vector<Vec> pivots;
  for (const Vec& b : nonzero) {
    Mat trial(pivots.size() + 1, k);
    for (size_t r = 0; r < pivots.size(); ++r) trial.row(r) = pivots[r].transpose();
    trial.row(pivots.size()) = b.transpose();
    Eigen::FullPivLU<Mat> lu(trial);
    lu.setThreshold(1e-9);
    if (lu.rank() == static_cast<Eigen::Index>(pivots.size() + 1)) pivots.push_back(b);
    if (static_cast<int>(pivots.size()) == k) break;
  }
  const int m = static_cast<int>(pivots.size());

  std::vector<Vec> reduced;
  for (const Vec& b : nonzero) {
    Vec r(m);
    for (int j = 0; j < m; ++j) r(j) = b.dot(pivots[j]);
    reduced.push_back(r);
  }

  Vec lred;
  if (!reduced_sg(reduced, m, lred)) return res;

  Vec lambda = Vec::Zero(k);
  for (int j = 0; j < m; ++j) lambda += lred(j) * pivots[j];

  // Contract check before returning: all b . lambda <= 0, at least one < 0.
  double worst = -1e300;
  double best = 1e300;
  for (const auto& b : dedup) {
    double dot = 0.0;
    for (int i = 0; i < k; ++i) dot += b[i] * lambda(i);
    worst = std::max(worst, dot);
    best = std::min(best, dot);
  }
  if (worst > 1e-12 * std::max(1.0, lambda.norm()) || best >= 0.0)
    return res;  // relaxation failed to produce a witness

  res.lambda = lambda;
  res.strict = true;
  return res;
}

}  // namespace wickgit
