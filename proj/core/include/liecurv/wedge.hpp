#pragma once

#include <string>
#include <utility>
#include <vector>

#include "liecurv/lie_algebra.hpp"
#include "liecurv/matrix.hpp"

namespace liecurv {

/// Ordered basis of the exterior square: a permutation of the lexicographic
/// list of all pairs (i,j) with 0 <= i < j < n.
class WedgeBasis {
 public:
  static WedgeBasis lexicographic(int n);
  /// Errors: basis_error unless the pairs are exactly the lexicographic set
  /// (each 0 <= i < j < n once, in any order).
  static WedgeBasis from_pairs(int n, std::vector<std::pair<int, int>> pairs);

  int dim() const { return n_; }                  // underlying dimension n
  int size() const { return static_cast<int>(pairs_.size()); }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  const std::pair<int, int>& pair(int p) const { return pairs_[p]; }

  /// Position of the ordered pair (i,j), i < j. Errors: basis_error.
  int position(int i, int j) const;
  /// Position plus orientation sign for an arbitrary pair: (p, +1) when
  /// (a,b) is the stored pair, (p, -1) when it is reversed.
  std::pair<int, int> signed_position(int a, int b) const;

  bool operator==(const WedgeBasis& o) const { return n_ == o.n_ && pairs_ == o.pairs_; }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> pos_;  // flat lookup (i*n + j) -> basis position
};

/// Curvature operator on the exterior square: Q[p][q] = <R(e_i^e_j), e_k^e_l>
/// for basis pairs p=(i,j), q=(k,l). Exactly symmetric.
struct CurvatureOperator {
  ScalarMatrix Q;
  WedgeBasis basis;

  /// <R(e_a^e_b), e_c^e_d> for arbitrary pairs, orientation signs applied.
  Scalar entry(int a, int b, int c, int d) const;
};

CurvatureOperator curvature_operator(const MetricLieAlgebra& alg);
CurvatureOperator curvature_operator(const MetricLieAlgebra& alg, const WedgeBasis& basis);
CurvatureOperator curvature_operator(const RiemannTensor& R, const WedgeBasis& basis);

/// Partition of wedge indices relative to a codimension-2 split: "pure"
/// positions have both legs on the same side of the split, "mixed" positions
/// have one vertical and one horizontal leg.
struct BlockSplit {
  std::vector<int> pure;
  std::vector<int> mixed;
  ScalarMatrix pure_block;   // Q restricted to pure x pure
  ScalarMatrix mixed_block;  // Q restricted to mixed x mixed
  ScalarMatrix off_block;    // Q restricted to pure x mixed
  bool invariant() const { return off_block.is_zero(); }
};

/// Errors: codimension_error unless the complement of `vertical` has size 2.
BlockSplit block_split(const CurvatureOperator& op, const std::vector<int>& vertical);

struct ThetaWitness {
  int identity = 0;  // 1: <R(X^U),X^V> = <R(Y^U),Y^V>;  2: <R(X^U),Y^V> + <R(Y^U),X^V> = 0
  int u = -1, v = -1;  // vertical algebra indices
  Scalar lhs, rhs;
};

/// Exact test that <R(X_theta^U), X_theta^V> does not depend on the angle of
/// the horizontal direction X_theta = cos(theta) X + sin(theta) Y, via the two
/// polarized identities obtained by trigonometric expansion.
struct ThetaIndependenceResult {
  bool holds = true;
  int X = -1, Y = -1;    // horizontal complement, ascending
  ThetaWitness witness;  // first failure, valid when !holds
};

/// Errors: codimension_error unless the complement of `vertical` has size 2.
ThetaIndependenceResult theta_independence_check(const CurvatureOperator& op,
                                                 const std::vector<int>& vertical);

/// Mixed-block analysis for a curvature-invariant codimension-2 split: writes
/// R restricted to W = span{X^U_a, Y^U_a} in the ordered basis
/// (X^U_1..X^U_m, Y^U_1..Y^U_m) and tests exact commutation with the complex
/// structure J(X^U) = Y^U, J(Y^U) = -X^U. When R|_W commutes it has the block
/// form [[A,-B],[B,A]] and is represented by the Hermitian matrix H = A + iB
/// with det(R|_W) = det(H)^2.
struct HermitianWResult {
  bool commutes = true;
  int X = -1, Y = -1;          // horizontal complement, ascending
  std::vector<int> verticals;  // ascending
  ScalarMatrix RW;             // 2m x 2m mixed block in the ordered basis above
  ScalarMatrix H_re, H_im;     // m x m; valid when commutes
  Scalar det_RW, det_H, det_H_sq;  // valid when commutes
  struct Witness {  // entry of R|_W * J vs J * R|_W that differs
    int row = -1, col = -1;
    Scalar lhs, rhs;
  } witness;
};

/// Errors: codimension_error as above; split_not_invariant when the off-block
/// residual is nonzero.
HermitianWResult hermitian_W_check(const CurvatureOperator& op,
                                   const std::vector<int>& vertical);

}  // namespace liecurv
