#pragma once

#include <vector>

#include "liecurv/scalar.hpp"

namespace liecurv {

/// Dense matrix over the exact scalar field.  Sized for the small systems that
/// arise here (wedge dimension <= ~50); all operations are exact.
class ScalarMatrix {
 public:
  ScalarMatrix() : rows_(0), cols_(0) {}
  ScalarMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static ScalarMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& at(int i, int j) { return a_[i * cols_ + j]; }
  const Scalar& at(int i, int j) const { return a_[i * cols_ + j]; }

  ScalarMatrix transpose() const;
  Scalar trace() const;
  bool is_zero() const;
  bool is_symmetric() const;

  ScalarMatrix operator+(const ScalarMatrix& o) const;
  ScalarMatrix operator-(const ScalarMatrix& o) const;
  ScalarMatrix operator*(const ScalarMatrix& o) const;
  ScalarMatrix scaled(const Scalar& s) const;
  bool operator==(const ScalarMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool operator!=(const ScalarMatrix& o) const { return !(*this == o); }

  /// Rows and columns restricted to the given index lists (in order).
  ScalarMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;

  /// Exact determinant (Gaussian elimination over the field).
  Scalar determinant() const;

 private:
  int rows_, cols_;
  std::vector<Scalar> a_;
};

/// Matrix-vector product (columns are images of basis vectors).
std::vector<Scalar> mat_vec(const ScalarMatrix& M, const std::vector<Scalar>& v);

/// Complex number over the scalar field; enough for Hermitian determinants.
struct ComplexScalar {
  Scalar re, im;

  ComplexScalar() = default;
  ComplexScalar(Scalar r, Scalar i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  ComplexScalar operator+(const ComplexScalar& o) const { return {re + o.re, im + o.im}; }
  ComplexScalar operator-(const ComplexScalar& o) const { return {re - o.re, im - o.im}; }
  ComplexScalar operator*(const ComplexScalar& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  ComplexScalar invert() const;
};

/// Exact determinant of a square complex matrix (row-major).
ComplexScalar complex_determinant(std::vector<ComplexScalar> a, int n);

}  // namespace liecurv
