#pragma once

#include <string>
#include <vector>

#include "liecurv/matrix.hpp"
#include "liecurv/scalar.hpp"

namespace liecurv {

/// Univariate polynomial over the exact scalar field, coefficients stored in
/// ascending degree with no trailing zeros (the zero polynomial is empty).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs);
  static Polynomial constant(Scalar c);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  Scalar coeff(int i) const;  // zero beyond the stored range
  const std::vector<Scalar>& coeffs() const { return c_; }
  const Scalar& leading() const;  // errors on the zero polynomial

  Polynomial derivative() const;
  Scalar eval(const Scalar& x) const;
  Polynomial monic() const;  // errors: division_by_zero on the zero polynomial

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  bool operator==(const Polynomial& o) const { return c_ == o.c_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  std::string str(const std::string& var = "x") const;

 private:
  std::vector<Scalar> c_;
  void trim();
};

struct PolyDivMod {
  Polynomial quot, rem;
};

/// Exact Euclidean division. Errors: division_by_zero when b is zero.
PolyDivMod poly_divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd by the Euclidean algorithm over the scalar field.
/// Errors: invalid_params when both inputs are zero.
Polynomial poly_gcd(Polynomial a, Polynomial b);

/// Exact characteristic polynomial det(xI - M) by the Faddeev-LeVerrier
/// recurrence; monic of degree = size. Errors: invalid_params unless square.
Polynomial char_poly(const ScalarMatrix& M);

/// p(M) by Horner's rule (for Cayley-Hamilton style checks).
ScalarMatrix eval_matrix(const Polynomial& p, const ScalarMatrix& M);

struct SpectrumEntry {
  double value = 0.0;
  int multiplicity = 0;
};

/// Real roots of p with exact multiplicities: Sturm-sequence isolation over
/// rational intervals, bisection refinement below 1e-12, multiplicities from
/// the repeated gcd chain g_1 = gcd(p, p'), g_{i+1} = gcd(g_i, g_i').
/// Returned ascending by value. Errors: invalid_params on the zero polynomial.
std::vector<SpectrumEntry> polynomial_real_roots(const Polynomial& p);

/// polynomial_real_roots(char_poly(M)) for symmetric M (all roots real, and
/// multiplicities sum to the size).
std::vector<SpectrumEntry> numeric_spectrum(const ScalarMatrix& M);

}  // namespace liecurv
