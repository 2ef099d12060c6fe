#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wickgit/linalg.hpp"

namespace wickgit {

/// Multiplication by i on a realified complex vector space.
struct ComplexStructure {
  int complex_dim = 0;
  Mat op;  // 2d x 2d, op*op == -Id
  static ComplexStructure standard(int complex_dim) {
    return {complex_dim, complex_structure_op(complex_dim)};
  }
};

/// Real form of o(n,C) = {X : X^T = -X}, cut out by the antilinear involution
/// sigma(X) = c * conj(X) * c^{-1}.  The standard embedding of o(p,q) uses
/// c = I_{p,q} and comes from the slice R^n_p = span(i e_1..i e_p, e_{p+1}..e_n):
/// t is the real block-diagonal skew part, p is i times the off-block part.
/// The Cartan involution is theta(X) = t_c * conj(X) * t_c^{-1} (t_c = Id when
/// standard, so theta is plain entrywise conjugation).
class RealForm {
public:
  int n = 0;          // ambient O(n,C)
  int p = 0, q = 0;   // (minus count, plus count) of the slice metric
  bool standard = true;
  CMat conjugator;        // c in sigma
  CMat theta_conjugator;  // t_c in theta

  std::vector<CMat> basis;       // t-part first, then p-part
  std::vector<Mat> frame_basis;  // real matrices acting on the adapted frame
                                 // (standard embeddings only; empty otherwise)
  int dim_t = 0, dim_p = 0;
  Vec eta;  // adapted-frame metric diag(-1 x p, +1 x q)

  int dim() const { return dim_t + dim_p; }

  CMat sigma(const CMat& x) const;
  CMat theta(const CMat& x) const;
  /// Cartan involution in the adapted real frame: Y -> eta * Y * eta.
  Mat theta_frame(const Mat& y) const;

  /// Realified basis subspaces of the ambient R^{2n^2}.
  Subspace t_subspace() const;
  Subspace p_subspace() const;
  Subspace full_subspace() const;
};

/// Standard o(p,q) inside o(n,C), n = p + q.
RealForm build_o_pq(int p, int q);

/// The same real form conjugated by g in O(n,C) (g^T g = Id).
RealForm conjugated_form(const RealForm& f, const CMat& g);

/// Killing form Gram matrix kappa(x_i, x_j) = tr(ad x_i ad x_j) of a real
/// Lie algebra spanned by the given matrices.  Bracket-closure of the span is
/// verified to `bracket_tol` as a side effect.
Mat killing_form(const std::vector<CMat>& span_basis, double bracket_tol = tol::kBracket);
Mat killing_form(const RealForm& f);

/// (dim t, dim p) read off from the Killing form: kappa is negative definite
/// on t and positive definite on p, and -kappa(., theta .) must be positive
/// definite.  Degenerate kappa is an error.
std::pair<int, int> killing_theta_signature(const RealForm& f);

struct CompatibleTriple {
  RealForm f1;
  RealForm f2;
  RealForm compact;  // o(n) = o(0,n), the Euclidean slice
};

CompatibleTriple make_standard_triple(int p1, int q1, int p2, int q2);

struct TripleReport {
  bool commutes = false;            // all conjugations commute pairwise
  int dim_meet = 0;                 // dim (W cap W~)
  int dim_meet_i = 0;               // dim (W cap i W~)
  bool direct_sum_ok = false;       // dim sums to dim W exactly
};

/// Check the compatibility of the two real forms in a triple: commuting
/// conjugations and the decomposition W = (W cap W~) + (W cap i W~).
TripleReport check_compatible_triple(const CompatibleTriple& t,
                                     double commute_tol = tol::kCommute);

/// Same check for plain vector-space slices of C^n with conjugations
/// v -> m * conj(v).
TripleReport check_compatible_slices(int n, const CMat& m1, const CMat& m2,
                                     double commute_tol = tol::kCommute);

/// Dimensions (dim t cap t~, dim p cap p~) of the Cartan-part intersections.
std::pair<int, int> intersect_cartan_parts(const RealForm& f1, const RealForm& f2);

/// w (a real subspace of the realification) is totally real: w cap J(w) = 0.
bool is_totally_real(const Subspace& w, const ComplexStructure& j);

struct RealSliceReport {
  bool slice = false;
  std::optional<std::pair<int, int>> signature;  // (neg, pos) when slice
  std::string reason;
};

/// Whether w is a real slice of (C^n, g): real dimension n, g restricted to w
/// real-valued and nondegenerate.  Columns of w.basis are realified vectors.
RealSliceReport is_real_slice(const Subspace& w, const CMat& g,
                              double imag_tol = tol::kSymmetry);

}  // namespace wickgit
