#pragma once

#include <vector>

#include "wickgit/linalg.hpp"

namespace wickgit {

/// Dense covariant tensor of a given valence over an n-dimensional frame.
/// Components are stored row-major over the multi-index (first index slowest).
/// Indices are 0-based in code; the JSON interchange format is 1-based.
class Tensor {
public:
  Tensor() = default;
  Tensor(int n, int valence);

  int n() const { return n_; }
  int valence() const { return valence_; }
  Eigen::Index size() const { return comp_.size(); }
  Vec& data() { return comp_; }
  const Vec& data() const { return comp_; }

  double& at(const std::vector<int>& idx) { return comp_[flat(idx)]; }
  double at(const std::vector<int>& idx) const { return comp_[flat(idx)]; }
  Eigen::Index flat(const std::vector<int>& idx) const;
  std::vector<int> unflat(Eigen::Index f) const;

  double norm() const { return comp_.norm(); }

  Tensor operator+(const Tensor& o) const;
  Tensor operator-(const Tensor& o) const;
  Tensor scaled(double s) const;

  /// Infinitesimal action of a frame endomorphism x on a covariant tensor:
  /// (x . T)_{a1..ad} = -sum_s x^c_{a_s} T_{..c..}.
  Tensor act(const Mat& x) const;

  /// Finite transformation by an invertible frame change g (covariant slots
  /// transform by (g^{-1})^T per slot): (g . T)(v..) = T(g^{-1} v..).
  Tensor transform(const Mat& g) const;

  /// Change of frame: components of the same tensor in the frame whose
  /// basis vectors are the columns of p (T'(...) = T(p e_a, ...)).
  Tensor in_frame(const Mat& p) const;

private:
  int n_ = 0, valence_ = 0;
  Vec comp_;
};

}  // namespace wickgit
