#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "liecurv/foliation.hpp"
#include "liecurv/lie_algebra.hpp"
#include "liecurv/matrix.hpp"

namespace liecurv {

/// Orthogonal almost complex structure on the algebra, acting on basis
/// columns: (J v)_i = sum_k J_{ik} v_k.
struct AlmostComplexStructure {
  ScalarMatrix J;

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const { return mat_vec(J, v); }
};

/// Errors: dimension_parity for odd n; invalid_params unless J^2 = -I and
/// J^T = -J exactly (orthogonality with respect to the orthonormal metric).
AlmostComplexStructure make_complex_structure(ScalarMatrix J);

struct AdaptedResult {
  bool adapted = true;
  int from = -1, to = -1;  // J e_from leaks across the split into e_to
  Scalar component;
};

/// J preserves both factors of the split. Errors: codimension_error unless
/// the horizontal complement has size 2.
AdaptedResult adapted_check(const AlmostComplexStructure& J, const FoliationSplit& split);

/// N_J(Z,W) = [Z,W] + J[JZ,W] + J[Z,JW] - [JZ,JW].
std::vector<Scalar> nijenhuis(const MetricLieAlgebra& alg, const AlmostComplexStructure& J,
                              const std::vector<Scalar>& Z, const std::vector<Scalar>& W);

struct IntegrabilityResult {
  bool integrable = true;
  int i = -1, j = -1;           // first basis pair with N_J(e_i, e_j) != 0
  std::vector<Scalar> defect;   // that Nijenhuis value
};

IntegrabilityResult integrability_check(const MetricLieAlgebra& alg,
                                        const AlmostComplexStructure& J);

struct CompatibilityResult {
  bool compatible = true;
  int u = -1, v = -1;  // vertical algebra indices of the failing pair
  int equality = 0;    // 1: J B_U V = B_{JU} V;  2: J B_U V = B_U JV
  int k = -1;          // failing horizontal component
  Scalar lhs, rhs;
};

/// J B_U V = B_{JU} V = B_U JV on all vertical basis pairs.
/// Errors: adaptedness_required; not_subalgebra.
CompatibilityResult compatibility_check(const AlmostComplexStructure& J,
                                        const FoliationSplit& split);

struct SuperminimalResult {
  bool superminimal = true;
  int u = -1, k = -1, comp = -1;  // (nabla_{e_u} J) e_k has component `comp`
  Scalar value;
};

/// (nabla_U J) e_k = nabla_U (J e_k) - J (nabla_U e_k) vanishes for all
/// vertical U. Errors: adaptedness_required.
SuperminimalResult superminimal_check(const AlmostComplexStructure& J,
                                      const FoliationSplit& split);

struct DualBLemmaReport {
  bool holds = true;
  int u = -1, x = -1;  // vertical / horizontal algebra indices
  int equality = 0;    // 1: B*_U JX = -B*_{JU} X;  2: B*_U JX = J B*_U X
  int k = -1;          // failing vertical component
  Scalar lhs, rhs;
};

/// The dual second fundamental form B*_U X = -V(nabla_U X) intertwines with J:
/// B*_U JX = -B*_{JU} X = J B*_U X. Errors: compatibility_required (also when
/// adaptedness or closure fails upstream of compatibility).
DualBLemmaReport dual_b_lemma_check(const AlmostComplexStructure& J, const FoliationSplit& split);

/// One random adapted orthogonal complex structure on the split: a fixed
/// pairing on the vertical factor conjugated by random rational rotations,
/// joined with a rotation on the 2-dimensional horizontal factor.
AlmostComplexStructure sample_adapted_structure(const FoliationSplit& split,
                                                std::mt19937_64& rng);

struct SamplingReport {
  int samples = 0;
  int integrable_count = 0;
  /// N_J(X, U_last) = J[X, J U_last] held exactly on every sample, where X is
  /// the first horizontal and U_last the last vertical basis vector.
  bool reduction_identity_all = true;
  std::optional<int> first_integrable;  // sample index of the first integrable J
};

/// Deterministic seeded sampling of adapted structures with per-sample exact
/// integrability evaluation. Errors: dimension_parity when either factor has
/// odd dimension; codimension_error unless the horizontal complement has size 2.
SamplingReport adapted_sampling_integrability(const FoliationSplit& split, int samples,
                                              std::uint64_t seed);

}  // namespace liecurv
