#pragma once

#include <string>
#include <vector>

#include "liecurv/lie_algebra.hpp"
#include "liecurv/polynomial.hpp"
#include "liecurv/wedge.hpp"

namespace liecurv {

enum class ObstructionVerdict { obstructed, passes, not_applicable };

std::string to_string(ObstructionVerdict v);

/// Paired-eigenvalue necessary condition for an Einstein metric to admit a
/// submersive harmonic morphism to a surface with totally geodesic fibers:
/// with f the characteristic polynomial of the curvature operator on the
/// exterior square and g = gcd(f, f'), deg(g) < n - 2 rules such a morphism
/// out even locally ("obstructed"); deg(g) >= n - 2 only means the necessary
/// condition is met ("passes" says nothing about existence). Non-Einstein
/// metrics are out of the theorem's scope ("not_applicable").
struct ObstructionReport {
  ObstructionVerdict verdict = ObstructionVerdict::not_applicable;
  std::string reason;  // set for not_applicable
  EinsteinResult einstein;
  Polynomial f;    // char poly of the full curvature operator (when Einstein)
  Polynomial gcd;  // gcd(f, f') (when Einstein)
  int gcd_degree = -1;
  int required_degree = 0;  // n - 2
  std::vector<SpectrumEntry> spectrum;  // of the full operator (when Einstein)
};

ObstructionReport paired_eigenvalue_test(const MetricLieAlgebra& alg);

/// Mixed-block variant: the same polynomial data for R restricted to the
/// mixed block W of a curvature-invariant codimension-2 split, together with
/// the Hermitian representation. Errors propagate from hermitian_W_check.
struct WBlockReport {
  HermitianWResult hermitian;
  Polynomial f_w;    // char poly of R|_W
  Polynomial gcd_w;  // gcd(f_w, f_w')
  int gcd_w_degree = -1;
  std::vector<SpectrumEntry> spectrum;  // of R|_W
};

WBlockReport w_block_report(const CurvatureOperator& op, const std::vector<int>& vertical);

}  // namespace liecurv
