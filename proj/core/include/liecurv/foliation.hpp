#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liecurv/lie_algebra.hpp"
#include "liecurv/matrix.hpp"

namespace liecurv {

/// A splitting of the algebra into a vertical span (candidate fiber
/// directions) and its orthogonal horizontal complement.
struct FoliationSplit {
  MetricLieAlgebra alg;
  std::vector<int> vertical;    // ascending
  std::vector<int> horizontal;  // ascending complement

  int vdim() const { return static_cast<int>(vertical.size()); }
  int hdim() const { return static_cast<int>(horizontal.size()); }
};

/// Errors: invalid_params on out-of-range or duplicate vertical indices.
FoliationSplit make_split(MetricLieAlgebra alg, const std::vector<int>& vertical);

/// Component-mask projections onto the split factors (size-n vectors).
std::vector<Scalar> vertical_projection(const FoliationSplit& split, std::vector<Scalar> v);
std::vector<Scalar> horizontal_projection(const FoliationSplit& split, std::vector<Scalar> v);

struct SubalgebraResult {
  bool closed = true;
  int u = -1, v = -1, k = -1;  // [e_u, e_v] leaks through horizontal e_k
  Scalar component;            // the leaking coefficient
};

/// Exact check that [vertical, vertical] stays vertical.
SubalgebraResult subalgebra_check(const FoliationSplit& split);

/// Second fundamental form of the fibers: B_{U}V = H(nabla_U V) for vertical
/// U, V, stored over the (vertical, vertical, horizontal) basis grid.
struct SecondFundamentalForm {
  std::vector<int> vertical, horizontal;
  std::vector<Scalar> comp;  // (a*m + b)*h + c -> <B_{U_a} U_b, X_c>

  const Scalar& at(int a, int b, int c) const {
    return comp[static_cast<std::size_t>(a * vertical.size() + b) * horizontal.size() + c];
  }
  bool is_zero() const;
  /// Horizontal components of sum_a B_{U_a} U_a (mean-curvature direction).
  std::vector<Scalar> trace() const;
};

/// Errors: not_subalgebra when the vertical span is not bracket-closed.
SecondFundamentalForm second_fundamental_form(const FoliationSplit& split);

struct ConformalWitness {
  int v = -1;     // vertical algebra index whose Lie-derivative matrix fails
  int c = -1, d = -1;  // horizontal algebra indices of the failing entry
  Scalar value, expected;
};

struct Classification {
  bool subalgebra = false;
  SubalgebraResult subalgebra_witness;  // meaningful when !subalgebra
  bool totally_geodesic = false;        // B == 0 (requires subalgebra)
  bool minimal = false;                 // trace B == 0 (requires subalgebra)
  bool conformal = false;  // (1/2)(L_V g)|_H = nu(V) * id_H for every vertical V
  bool riemannian = false;              // conformal with nu == 0
  std::vector<Scalar> nu;               // per vertical basis vector, when conformal
  std::optional<ConformalWitness> conformal_witness;
};

Classification classify(const FoliationSplit& split);

/// Horizontal-horizontal O'Neill tensor A_X Y = V(nabla_X Y) together with
/// the vertical gradient of the logarithmic dilation, V(grad ln lambda) = A_X X
/// for unit horizontal X.
struct ONeillA {
  std::vector<int> vertical, horizontal;
  std::vector<Scalar> comp;  // (c*h + d)*m + a -> <A_{X_c} X_d, U_a>
  std::vector<Scalar> grad;  // vertical components of V(grad ln lambda)

  const Scalar& at(int c, int d, int a) const {
    return comp[static_cast<std::size_t>(c * horizontal.size() + d) * vertical.size() + a];
  }
};

/// Also verifies A_X Y = (1/2) V([X,Y]) + <X,Y> V(grad ln lambda) exactly.
/// Errors: not_subalgebra; conformality_required when classify is not conformal.
ONeillA oneill_a(const FoliationSplit& split);

struct RicciConditionResult {
  bool holds = false;
  int X = -1, Y = -1;  // the horizontal pair tested
  Scalar ric_xx, ric_yy, ric_xy;
};

/// Ric(X,X) = Ric(Y,Y) and Ric(X,Y) = 0 on the horizontal pair.
/// Errors: codimension_error unless the horizontal complement has size 2.
RicciConditionResult ricci_condition_check(const FoliationSplit& split);

/// Exact verification of the two curvature identities tying R to the
/// fundamental tensors of the split:
///   (ii)  <R(U^V), W^X> = <(nabla_U B)_V W, X> - <(nabla_V B)_U W, X>
///         for vertical U, V, W and horizontal X (any bracket-closed split);
///   (iii) <R(U^X), Y^V> = <(nabla_U A)_X Y, V> + <A*_X U, A*_Y V>
///                          - 2 V(ln lambda) <A_X Y, U>
///         for vertical U, V and horizontal X, Y, where A*_X U = -H(nabla_X U)
///         and V(ln lambda) = <V, V(grad ln lambda)>; applicable only to
///         conformal, totally geodesic, codimension-2 splits.
struct ONeillIdentityReport {
  bool identity_ii_holds = false;
  struct WitnessII {
    int u, v, w, x;
    Scalar lhs, rhs;
  };
  std::optional<WitnessII> ii_witness;

  bool identity_iii_applicable = false;
  bool identity_iii_holds = false;  // meaningful when applicable
  struct WitnessIII {
    int u, x, y, v;
    Scalar lhs, rhs;
  };
  std::optional<WitnessIII> iii_witness;
};

/// Errors: not_subalgebra when the vertical span is not bracket-closed.
ONeillIdentityReport oneill_identity_check(const FoliationSplit& split);

/// Enumerates every basis-index subset of size n-2 in ascending lexicographic
/// order and classifies each. Errors: degenerate_dimension for n < 3.
struct ScanEntry {
  std::vector<int> subset;
  Classification cls;
};

std::vector<ScanEntry> coordinate_subalgebra_scan(const MetricLieAlgebra& alg);

}  // namespace liecurv
