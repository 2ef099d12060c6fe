#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wickgit/rootsys.hpp"

namespace wickgit {

/// A real representation the norm-minimizing machinery can flow on: tensor
/// powers of the defining representation of o(p,q) in its adapted frame, the
/// adjoint representation of o(p,q), or the adjoint of sl(2,R).  Elements are
/// flattened into plain vectors (tensor components, or vec()'d matrices).
class RepAction {
public:
  enum class Kind { Tensor, AdjointOpq, AdjointSl2 };

  Kind kind = Kind::Tensor;
  RealForm form;    // meaningful for the o(p,q) kinds
  int n = 0;        // frame dimension of the underlying matrices
  int valence = 0;  // tensor power (Tensor kind)
  int space_dim = 0;

  // Frobenius-orthonormal bases of the compact and noncompact parts.
  std::vector<Mat> t_basis, p_basis;

  Vec act(const Mat& x, const Vec& v) const;      // infinitesimal action
  Vec act_exp(const Mat& x, const Vec& v) const;  // exp(x) . v
  double ip(const Vec& a, const Vec& b) const;    // K-invariant inner product
  double norm(const Vec& v) const { return std::sqrt(ip(v, v)); }

  /// All gradient components <x_i . v, v> over the p basis.
  Vec p_gradient(const Vec& v) const;
  bool minimal(const Vec& v, double tol = tol::kGradient) const;

  Tensor to_tensor(const Vec& v) const;
  Vec from_tensor(const Tensor& t) const;
  Mat to_matrix(const Vec& v) const;
  Vec from_matrix(const Mat& m) const;
};

/// Tensor powers of the defining rep of o(p,q); components in the adapted
/// frame, inner product = plain component dot (K = O(p) x O(q) invariant).
RepAction tensor_action(const RealForm& f, int valence);
/// Adjoint of o(p,q) in the adapted frame; <x,y> = -tr(x eta y eta).
RepAction adjoint_action(const RealForm& f);
/// Adjoint of sl(2,R) with theta(x) = -x^T and <x,y> = tr(x y^T).
RepAction sl2_adjoint_action();

bool is_minimal(const Vec& v, const RepAction& r, double tol = tol::kGradient);

struct OrbitDimension {
  int dim = 0;
  bool clean = false;  // decisive spectral gap under the rank threshold
};

/// Dimension of the orbit through v: the rank of x -> x.v over the full Lie
/// algebra.  Boundary orbits of an orbit closure have strictly smaller
/// dimension, so equal clean dimensions certify that a closure point found by
/// a degeneration still lies on the original orbit.
OrbitDimension orbit_dimension(const Vec& v, const RepAction& r);

struct FlowConfig {
  double g_tol = tol::kGradient;
  long max_iter = 100000;
  double armijo_c = 1e-4;
  double shrink = 0.5;
  double rapidity_cap = 4.0;  // max |s dir| per step; see kempf_ness_flow
  double zero_rel = 1e-8;     // relative norm collapse threshold; see flow notes
  int stall_window = 200;
  double stall_displacement = 40.0;
  unsigned seed = 0;  // echoed into reports; the flow itself is deterministic
};

struct OrbitReport {
  enum class Verdict { Closed, NonClosed, Undecided };
  Verdict verdict = Verdict::Undecided;
  std::optional<Vec> minimal_vector;
  std::optional<Vec> limit_vector;
  double final_gradient_norm = 0.0;  // |grad| / |v|^2
  double final_norm = 0.0;
  long iterations = 0;
  double displacement = 0.0;            // group path length
  std::vector<double> norm_trace;       // downsampled |v| along the flow
  std::string certificate;              // "minimal_gradient", "zero_limit",
                                        // "orbit_dim_drop", or empty
  int orbit_dim_start = -1, orbit_dim_end = -1;
  std::vector<Complex> char_poly_start, char_poly_end;  // adjoint kinds only
};

const char* verdict_name(OrbitReport::Verdict v);

/// Norm-minimizing flow over exp(p).  Closed verdicts carry the minimal
/// vector; non-closed verdicts carry a limit vector separated from the orbit
/// by an honest invariant (zero limit, or an orbit-dimension drop).  Zero
/// limits additionally require the start vector's cheap polynomial
/// invariants (the eta-contraction of the square for tensors, the
/// characteristic coefficients for adjoint kinds) to vanish, since any
/// nonzero invariant separates the orbit closure from 0 exactly.  Anything
/// the certificates cannot decide is reported undecided, never guessed.
OrbitReport kempf_ness_flow(const Vec& v, const RepAction& r, const FlowConfig& cfg = {});

/// Limit of the boost flow exp(t lambda . x) applied to the decomposed tensor:
/// components with b . lambda = 0 survive, negative products decay, positive
/// products diverge (an error).
Tensor degeneration_limit(const BoostWeightDecomp& bw, const Vec& lambda);

struct InvariantRecord {
  std::vector<Complex> char_poly;  // ascending coefficients
  double norm = 0.0;               // Frobenius
};
InvariantRecord adjoint_invariants(const Mat& x);
bool same_invariants(const InvariantRecord& a, const InvariantRecord& b, double tol = 1e-10);

struct CanonicalForm {
  std::vector<double> rotation_params;      // nonnegative, descending
  std::vector<double> kernel_vector_norms;  // norms of the boost part in ker A
  Mat residual;                             // the canonical frame matrix
  Mat conjugator;                           // k with k x k^{-1} = residual
};

/// Canonical representative of a minimal element x = [[A, w],[w^T, 0]] of
/// o(n-1,1): A rotated to skew normal form, w rotated inside ker A onto the
/// first kernel coordinate.  Equal canonical forms characterize the
/// O(n-1,1)-orbit.  Throws on non-minimal input or n > 8.
CanonicalForm lorentz_canonical_form(const Mat& x, const RealForm& f);

struct Sl2OrbitCount {
  int count = 0;
  std::vector<Mat> representatives;
};

/// How many SL(2,R)-adjoint orbits make up the real points of the complex
/// orbit through a minimal x: 2 for nonzero rotations (x vs -x), 1 otherwise.
/// Decided by an SO(2) conjugator search plus invariants.
Sl2OrbitCount sl2_real_orbit_count(const Mat& x);

/// Flow v to a minimal vector; minimal vectors lie on the compact form's
/// orbit, so the result witnesses the intersection.  Non-closed orbits are
/// rejected with an error.
Vec intersect_with_compact(const Vec& v, const RepAction& r, const RepAction& compact);

struct SwappedBlockReport {
  bool same_compact_orbit = false;  // one O(n)-orbit (full char poly)
  bool same_kk_orbit = false;       // one O(p) x O(q)-orbit (per-block char polys)
  Mat x1, x2;
};

/// blockdiag(so2(a), so2(b)) against its swapped partner inside o(p) + o(q).
SwappedBlockReport swapped_block_example(double a, double b, int p, int q);

struct HermitianReport {
  bool ok = false;
  std::string violation;  // first failing sample, empty when ok
};

/// Verify the standard Hermitian product in the compact-adapted frame is
/// invariant under the compact action and real-valued on the valence-d tensor
/// spaces of both slices of the triple.
HermitianReport check_compatible_hermitian(const CompatibleTriple& triple, int valence,
                                           unsigned seed = 0);

}  // namespace wickgit
