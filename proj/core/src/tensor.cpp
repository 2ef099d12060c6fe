#include "wickgit/tensor.hpp"

#include <cmath>

namespace wickgit {

Tensor::Tensor(int n, int valence) : n_(n), valence_(valence) {
  if (n <= 0 || valence < 0) throw Error("Tensor: need n > 0 and valence >= 0");
  Eigen::Index sz = 1;
  for (int i = 0; i < valence; ++i) sz *= n;
  comp_ = Vec::Zero(sz);
}

Eigen::Index Tensor::flat(const std::vector<int>& idx) const {
  if (static_cast<int>(idx.size()) != valence_)
    throw Error("Tensor: index rank mismatch");
  Eigen::Index f = 0;
  for (int i : idx) {
    if (i < 0 || i >= n_) throw Error("Tensor: index out of range");
    f = f * n_ + i;
  }
  return f;
}

std::vector<int> Tensor::unflat(Eigen::Index f) const {
  std::vector<int> idx(valence_);
  for (int s = valence_ - 1; s >= 0; --s) {
    idx[s] = static_cast<int>(f % n_);
    f /= n_;
  }
  return idx;
}

Tensor Tensor::operator+(const Tensor& o) const {
  if (n_ != o.n_ || valence_ != o.valence_) throw Error("Tensor: shape mismatch");
  Tensor t = *this;
  t.comp_ += o.comp_;
  return t;
}

Tensor Tensor::operator-(const Tensor& o) const {
  if (n_ != o.n_ || valence_ != o.valence_) throw Error("Tensor: shape mismatch");
  Tensor t = *this;
  t.comp_ -= o.comp_;
  return t;
}

Tensor Tensor::scaled(double s) const {
  Tensor t = *this;
  t.comp_ *= s;
  return t;
}

namespace {

/// Multiply slot s of T by the matrix m: T'_{..a..} = sum_c m(a, c) T_{..c..}
/// where a sits in slot s.  Shared by act/transform/in_frame.
Vec mode_multiply(const Vec& comp, int n, int valence, int slot, const Mat& m) {
  Vec out = Vec::Zero(comp.size());
  Eigen::Index outer = 1;
  for (int s = 0; s < slot; ++s) outer *= n;
  Eigen::Index inner = 1;
  for (int s = slot + 1; s < valence; ++s) inner *= n;
  for (Eigen::Index o = 0; o < outer; ++o)
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c) {
        const double w = m(a, c);
        if (w == 0.0) continue;
        const Eigen::Index dst = (o * n + a) * inner;
        const Eigen::Index src = (o * n + c) * inner;
        out.segment(dst, inner) += w * comp.segment(src, inner);
      }
  return out;
}

}  // namespace

Tensor Tensor::act(const Mat& x) const {
  if (x.rows() != n_ || x.cols() != n_) throw Error("Tensor::act: matrix size mismatch");
  Tensor out(n_, valence_);
  Mat mxt = -x.transpose();
  for (int s = 0; s < valence_; ++s)
    out.comp_ += mode_multiply(comp_, n_, valence_, s, mxt);
  return out;
}

Tensor Tensor::transform(const Mat& g) const {
  if (g.rows() != n_ || g.cols() != n_)
    throw Error("Tensor::transform: matrix size mismatch");
  Mat m = g.inverse().transpose();
  Tensor out = *this;
  for (int s = 0; s < valence_; ++s)
    out.comp_ = mode_multiply(out.comp_, n_, valence_, s, m);
  return out;
}

Tensor Tensor::in_frame(const Mat& p) const {
  if (p.rows() != n_ || p.cols() != n_)
    throw Error("Tensor::in_frame: matrix size mismatch");
  // T'(a...) = T(p_{.a}, ...) = sum_c p(c, a) T_{..c..}
  Mat pt = p.transpose();
  Tensor out = *this;
  for (int s = 0; s < valence_; ++s)
    out.comp_ = mode_multiply(out.comp_, n_, valence_, s, pt);
  return out;
}

}  // namespace wickgit
