#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liecurv/matrix.hpp"
#include "liecurv/scalar.hpp"

namespace liecurv {

/// One structure-constant record: [e_i, e_j] += coeff * e_k with i < j.
struct BracketTerm {
  int i, j, k;
  Scalar coeff;
};

/// Finite-dimensional metric Lie algebra presented in an orthonormal basis
/// (the inner product is the identity Gram matrix by construction; general
/// metrics are rejected at the file-format boundary).  Structure constants
/// c^k_{ij} satisfy [e_i, e_j] = sum_k c^k_{ij} e_k and are stored fully
/// antisymmetrized.
class MetricLieAlgebra {
 public:
  /// Builds from i<j records, filling antisymmetry.  Throws invalid_params on
  /// bad indices or i >= j.
  static MetricLieAlgebra from_brackets(int n, const std::vector<BracketTerm>& brackets,
                                        std::vector<std::string> labels = {});
  /// Raw full table c[k][i][j] indexed as c[(k*n + i)*n + j]; no antisymmetry
  /// is enforced (used to exercise validation).
  static MetricLieAlgebra from_components(int n, std::vector<Scalar> c,
                                          std::vector<std::string> labels = {});

  int dim() const { return n_; }
  /// c^k_{ij}
  const Scalar& c(int k, int i, int j) const { return c_[(k * n_ + i) * n_ + j]; }
  /// [e_i, e_j] as a coordinate vector.
  std::vector<Scalar> bracket(int i, int j) const;
  std::vector<Scalar> bracket(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  /// Index of a basis label, or -1 if absent.
  int index_of(const std::string& label) const;

 private:
  int n_ = 0;
  std::vector<Scalar> c_;
  std::vector<std::string> labels_;
};

// ============================ validation ============================

struct ValidationIssue {
  enum class Kind { antisymmetry, jacobi } kind;
  // antisymmetry: component k of c^k_{ij} + c^k_{ji}.
  // jacobi: component k of [[e_i,e_j],e_l] + [[e_j,e_l],e_i] + [[e_l,e_i],e_j]
  //         (indices stored as i, j, l, k).
  int i, j, l, k;
  Scalar defect;
  std::string describe(const MetricLieAlgebra& alg) const;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool valid() const { return issues.empty(); }
};

ValidationReport validate(const MetricLieAlgebra& alg);

// ============================ Levi-Civita data ============================

/// Christoffel table of the left-invariant Levi-Civita connection in the
/// orthonormal basis, from the Koszul formula
///   2<nabla_{e_i} e_j, e_k> = <[e_i,e_j],e_k> - <[e_j,e_k],e_i> + <[e_k,e_i],e_j>.
/// Invariants: gamma(i,j,k) - gamma(j,i,k) = c^k_{ij} (torsion-free) and
/// gamma(i,j,k) = -gamma(i,k,j) (metric compatibility).
class ConnectionTable {
 public:
  ConnectionTable(int n) : n_(n), g_(n * n * n) {}
  int dim() const { return n_; }
  /// <nabla_{e_i} e_j, e_k>
  Scalar& gamma(int i, int j, int k) { return g_[(i * n_ + j) * n_ + k]; }
  const Scalar& gamma(int i, int j, int k) const { return g_[(i * n_ + j) * n_ + k]; }
  /// nabla_{e_i} e_j as a coordinate vector.
  std::vector<Scalar> nabla(int i, int j) const;
  /// nabla_x y for arbitrary coordinate vectors (bilinear extension).
  std::vector<Scalar> nabla(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;

 private:
  int n_;
  std::vector<Scalar> g_;
};

/// Throws invalid_algebra if validation fails.
ConnectionTable koszul_connection(const MetricLieAlgebra& alg);

/// Covariant curvature tensor R_{ijkl} = <R(e_i,e_j)e_k, e_l> with
/// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z.
class RiemannTensor {
 public:
  RiemannTensor(int n) : n_(n), r_(static_cast<std::size_t>(n) * n * n * n) {}
  int dim() const { return n_; }
  Scalar& at(int i, int j, int k, int l) { return r_[((i * n_ + j) * n_ + k) * n_ + l]; }
  const Scalar& at(int i, int j, int k, int l) const {
    return r_[((i * n_ + j) * n_ + k) * n_ + l];
  }

 private:
  int n_;
  std::vector<Scalar> r_;
};

/// Throws invalid_algebra on invalid input and degenerate_dimension for n < 2.
RiemannTensor riemann(const MetricLieAlgebra& alg);

/// Ric_{ij} = sum_k R_{kijk}; symmetric.
ScalarMatrix ricci(const MetricLieAlgebra& alg);
ScalarMatrix ricci_from_riemann(const RiemannTensor& R);

struct EinsteinResult {
  bool einstein = false;
  Scalar constant;                              // Ric = constant * g when einstein
  std::optional<std::pair<int, int>> witness;   // failing entry otherwise
  Scalar witness_value, witness_expected;
};

EinsteinResult einstein_check(const MetricLieAlgebra& alg);

/// Connection, curvature tensor and Ricci computed in one pass.
struct CurvatureData {
  ConnectionTable nabla;
  RiemannTensor R;
  ScalarMatrix ric;
};

CurvatureData curvature_data(const MetricLieAlgebra& alg);

/// Splits {0..n-1} into (sorted vertical, sorted horizontal complement).
/// Errors: invalid_params on out-of-range or duplicate indices.
std::pair<std::vector<int>, std::vector<int>> split_indices(int n,
                                                            const std::vector<int>& vertical);

}  // namespace liecurv
