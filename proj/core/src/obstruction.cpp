#include "liecurv/obstruction.hpp"

#include "liecurv/error.hpp"

namespace liecurv {

std::string to_string(ObstructionVerdict v) {
  switch (v) {
    case ObstructionVerdict::obstructed: return "obstructed";
    case ObstructionVerdict::passes: return "passes";
    case ObstructionVerdict::not_applicable: return "not_applicable";
  }
  fail(errc::internal_error, "unknown verdict");
}

ObstructionReport paired_eigenvalue_test(const MetricLieAlgebra& alg) {
  ObstructionReport rep;
  rep.required_degree = alg.dim() - 2;
  rep.einstein = einstein_check(alg);
  if (!rep.einstein.einstein) {
    rep.verdict = ObstructionVerdict::not_applicable;
    rep.reason = "the metric is not Einstein, so the paired-eigenvalue condition does not apply";
    return rep;
  }
  CurvatureOperator op = curvature_operator(alg);
  rep.f = char_poly(op.Q);
  rep.gcd = poly_gcd(rep.f, rep.f.derivative());
  rep.gcd_degree = rep.gcd.degree();
  rep.spectrum = polynomial_real_roots(rep.f);
  rep.verdict = rep.gcd_degree < rep.required_degree ? ObstructionVerdict::obstructed
                                                     : ObstructionVerdict::passes;
  return rep;
}

WBlockReport w_block_report(const CurvatureOperator& op, const std::vector<int>& vertical) {
  WBlockReport rep;
  rep.hermitian = hermitian_W_check(op, vertical);
  rep.f_w = char_poly(rep.hermitian.RW);
  rep.gcd_w = poly_gcd(rep.f_w, rep.f_w.derivative());
  rep.gcd_w_degree = rep.gcd_w.degree();
  rep.spectrum = polynomial_real_roots(rep.f_w);
  return rep;
}

}  // namespace liecurv
