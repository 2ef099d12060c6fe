#pragma once

#include <map>
#include <string>
#include <vector>

#include "wickgit/realforms.hpp"
#include "wickgit/tensor.hpp"

namespace wickgit {

/// Restricted-root data of o(p,q) relative to a maximal abelian a in p.
/// Root functionals are reported as integer coefficient vectors in the basis
/// of vector-representation weights lambda_1 > ... > lambda_k (lex order), so
/// o(p,q) produces the familiar {+-lambda_i +- lambda_j} / {+-lambda_i} lists.
struct RestrictedRootSystem {
  int n = 0;  // frame dimension
  int k = 0;  // real rank = dim a
  Subspace a_basis;             // columns are vec()'d frame matrices
  std::vector<Mat> generators;  // frame matrices read back from a_basis

  std::vector<std::pair<std::vector<int>, int>> roots;  // (coeffs, multiplicity)
  std::vector<std::vector<int>> positive_roots;
  std::vector<std::vector<int>> simple_roots;
  std::vector<std::vector<int>> chamber;  // each row c means c . y > 0 on a+
  int m_dim = 0;                          // centralizer of a inside t
  std::string label;                      // "A1", "B2", "D2", ...

  // Dual bookkeeping used to normalize generators and tensor weights.
  Mat lambda_on_generators;        // L(i, J) = lambda_J(generators[i])
  Mat vector_frame;                // n x n orthogonal joint eigenframe,
                                   // ordered (l_1, n_1, ..., l_k, n_k, rest)
  Eigen::MatrixXi vector_weights;  // n x k, row a = weight of frame column a
};

struct BoostGenerators {
  int n = 0;
  int k = 0;
  /// Normalized against the simple roots: alpha_J(x_list[I]) = delta_IJ.
  std::vector<Mat> x_list;
  /// Normalized against the frame weights: lambda_J(boost_axes[I]) = delta_IJ.
  /// These act on the null frame with eigenvalues in {0, +-1} and are what the
  /// index-counting weight labels refer to.
  std::vector<Mat> boost_axes;
  Mat frame;                       // same ordering as RestrictedRootSystem
  Eigen::MatrixXi vector_weights;  // n x k
};

struct BoostWeightDecomp {
  int n = 0;
  int k = 0;
  int valence = 0;
  /// Weight-b part of the tensor, expressed back in the input frame.
  std::map<std::vector<int>, Tensor> components;
  std::vector<std::vector<int>> support;  // weights with nonzero component
};

struct SgResult {
  Vec lambda;          // strict witness, or zero when strict == false
  bool strict = false; // some b . lambda < 0 while all b . lambda <= 0
};

/// Maximal abelian subalgebra of the p part of o(p,q), spanned by the paired
/// boosts E_{I,p+I} + E_{p+I,I} in the adapted frame.  Returned as a subspace
/// of vec()'d frame matrices; maximality is certified by a centralizer rank
/// check and failure of any certificate throws.
Subspace maximal_abelian(const RealForm& f);

/// Simultaneous ad-eigenspace decomposition of o(p,q) under a.  Throws on a
/// non-abelian a or when a is not contained in the p part.
RestrictedRootSystem restricted_roots(const RealForm& f, const Subspace& a);

/// Solves alpha_J(x^I) = delta_IJ on the simple roots (and lambda_J(b^I) =
/// delta_IJ for the paired-boost axes).  Throws if either system is singular.
BoostGenerators boost_generators(const RestrictedRootSystem& rs);

/// Decompose a covariant tensor (components in the frame the generators were
/// computed in) into integer-weight parts: the component of weight b scales by
/// exp(t b.lambda) under the flow exp(t sum lambda_I boost_axes[I]).
BoostWeightDecomp bw_decompose(const Tensor& t, const BoostGenerators& x);

/// Linear feasibility: find lambda with b . lambda <= 0 for all b in the
/// support and < 0 for at least one.  Exact extreme-ray enumeration up to
/// 3 effective dimensions, subset enumeration / relaxation beyond.
SgResult sg_property(const std::vector<std::vector<int>>& support);

}  // namespace wickgit
