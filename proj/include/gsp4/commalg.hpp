#pragma once

// Finite modules over S = k[(Z/p^N)^q] = k[t_1..t_q]/(t_i^{p^N}), t_i = g_i - 1,
// with k = F_p.  Everything is dense linear algebra over k.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "gsp4/linalg.hpp"

namespace gsp4 {

class GroupRingModule {
 public:
  /// Validates: square gens of size dim over F_p, pairwise commuting, and
  /// (g - I)^{p^N} = 0.
  GroupRingModule(std::int64_t p, int N, int q, std::vector<Matrix> gens);

  std::int64_t p() const { return p_; }
  int N() const { return N_; }
  int q() const { return q_; }
  /// p^N, the nilpotency bound of each t_i.
  std::size_t order() const { return order_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Matrix>& gens() const { return gens_; }
  /// t_i = g_i - I.
  Matrix t(int i) const;

 private:
  std::int64_t p_;
  int N_, q_;
  std::size_t order_;
  std::size_t dim_;
  std::vector<Matrix> gens_;
};

/// The regular module S itself, basis the monomials t^e with e in [0, p^N)^q
/// indexed by sum e_i (p^N)^i.
GroupRingModule regular_module(std::int64_t p, int N, int q);
/// k^n with trivial action.
GroupRingModule trivial_module(std::int64_t p, int N, int q, std::size_t n);
/// S / (f) for f given in the monomial basis of S.
GroupRingModule quotient_module(std::int64_t p, int N, int q, const std::vector<std::int64_t>& f);
GroupRingModule direct_sum(const GroupRingModule& a, const GroupRingModule& b);
/// Same module in a new basis: g -> P^{-1} g P.  P must be invertible.
GroupRingModule change_basis(const GroupRingModule& m, const Matrix& P);

/// Action of the generators restricted to the subspace spanned by the
/// columns of basis (which must be stable).
GroupRingModule submodule(const GroupRingModule& m, const Matrix& basis);

/// Column basis of mM = sum of the images of t_i.
Matrix augmentation_image(const GroupRingModule& m);

struct MinimalCover {
  std::size_t t0 = 0;
  /// Columns u_1..u_t0 in M lifting a basis of M/mM.
  Matrix generators{2, 0, 0};
  /// phi: S^{t0} -> M, columns indexed by (generator j, monomial) as
  /// j * |S| + monomial.
  Matrix phi{2, 0, 0};
  /// Column basis of ker phi inside S^{t0}.
  Matrix kernel{2, 0, 0};
};

MinimalCover minimal_cover(const GroupRingModule& m);

struct TorDims {
  std::size_t t0 = 0;
  std::size_t t1 = 0;
};

TorDims tor_dims(const GroupRingModule& m);

struct Defect {
  std::int64_t d = 0;
  bool balanced = false;
};

Defect defect_balanced(const GroupRingModule& m);

/// Elements of S as coefficient vectors in the monomial basis.
using GroupRingElement = std::vector<std::int64_t>;

struct SquarePresentation {
  std::size_t d = 0;
  /// relations[i][j]: the j-th coordinate of the i-th relation, in S.
  /// Relation i is the column sum_j relations[i][j] e_j of S^d.
  std::vector<std::vector<GroupRingElement>> relations;
  /// The cover S^d -> M as a k-matrix, as in MinimalCover::phi.
  Matrix phi{2, 0, 0};
};

/// Throws std::invalid_argument if m is not balanced.
SquarePresentation square_presentation(const GroupRingModule& m);

struct PresentationCheck {
  bool phi_surjective = false;
  bool phi_linear = false;
  bool relations_span_kernel = false;
  std::size_t cokernel_dim = 0;
  bool ok() const { return phi_surjective && phi_linear && relations_span_kernel; }
};

/// Independent recheck: phi is S-linear and onto, and the S-span of the
/// relations is exactly ker phi, so coker(relations) = M.
PresentationCheck check_presentation(const GroupRingModule& m, const SquarePresentation& sp);

/// Product of two elements of S.
GroupRingElement group_ring_multiply(std::int64_t p, int N, int q, const GroupRingElement& a,
                                     const GroupRingElement& b);

struct Coinvariants {
  std::size_t dim = 0;
  /// dim x dim(M) matrix, kernel exactly mM.
  Matrix projection{2, 0, 0};
};

Coinvariants coinvariants(const GroupRingModule& m);

/// Shape checks of a patching datum on finite data.
struct PatchingReport {
  bool augmentation_in_image = false;  // (a)
  bool coinvariants_match = false;     // (b)
  bool finite_balanced = false;        // (c)
  bool ok() const { return augmentation_in_image && coinvariants_match && finite_balanced; }
};

/// h_dim: dimension of the target H.  ring_ops: operators on M giving the
/// image of the big ring; kernel_ops: the images of generators of the kernel
/// of the augmentation to the Hecke ring.  (a) asks that every t_i lies in
/// the ideal generated by kernel_ops inside the algebra generated by
/// ring_ops, kernel_ops and the t_i.  With both lists empty (a) is taken
/// to hold vacuously only when every t_i is zero.
PatchingReport check_patching_shape(const GroupRingModule& m, std::size_t h_dim,
                                    const std::vector<Matrix>& ring_ops,
                                    const std::vector<Matrix>& kernel_ops);

struct IdempotentResult {
  Matrix e{2, 0, 0};
  /// n with e = A^{n!}.
  int steps = 0;
};

/// lim A^{n!} over Z/p^m.  Throws on non-square input, or if the iteration
/// fails to stabilize within max_steps.
IdempotentResult ordinary_idempotent(const Matrix& a, int max_steps = 4096);

struct IdempotentCertificate {
  bool idempotent = false;
  bool commutes = false;
  /// Smallest n <= dim * m with ((1 - e) A)^n = 0.
  std::optional<int> nilpotency_index;
  /// Rank of e mod p.
  std::size_t rank_mod_p = 0;
  bool ok() const { return idempotent && commutes && nilpotency_index.has_value(); }
};

/// p and m are read off the modulus p^m.
IdempotentCertificate certify_idempotent(const Matrix& a, const Matrix& e, std::int64_t p);

/// Random balanced module: a direct sum of copies of S, S/(f) and k,
/// conjugated by a random invertible matrix; total dim at most max_dim.
GroupRingModule random_balanced_module(std::int64_t p, int N, int q, std::size_t max_dim,
                                       std::mt19937_64& rng);

/// Random invertible n x n matrix over F_p.
Matrix random_invertible(std::int64_t p, std::size_t n, std::mt19937_64& rng);

}  // namespace gsp4
