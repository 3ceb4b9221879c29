#include "liecurv/matrix.hpp"

#include "liecurv/error.hpp"

namespace liecurv {

ScalarMatrix ScalarMatrix::identity(int n) {
  ScalarMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

ScalarMatrix ScalarMatrix::transpose() const {
  ScalarMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Scalar ScalarMatrix::trace() const {
  Scalar t;
  for (int i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
  return t;
}

bool ScalarMatrix::is_zero() const {
  for (const Scalar& s : a_)
    if (!s.is_zero()) return false;
  return true;
}

bool ScalarMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

ScalarMatrix ScalarMatrix::operator+(const ScalarMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(errc::internal_error, "matrix shape mismatch");
  ScalarMatrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

ScalarMatrix ScalarMatrix::operator-(const ScalarMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(errc::internal_error, "matrix shape mismatch");
  ScalarMatrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& o) const {
  if (cols_ != o.rows_) fail(errc::internal_error, "matrix shape mismatch");
  ScalarMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) += aik * o.at(k, j);
      }
    }
  return r;
}

ScalarMatrix ScalarMatrix::scaled(const Scalar& s) const {
  ScalarMatrix r = *this;
  for (Scalar& v : r.a_) v *= s;
  return r;
}

ScalarMatrix ScalarMatrix::submatrix(const std::vector<int>& rows,
                                     const std::vector<int>& cols) const {
  ScalarMatrix r(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) r.at(i, j) = at(rows[i], cols[j]);
  return r;
}

Scalar ScalarMatrix::determinant() const {
  if (rows_ != cols_) fail(errc::internal_error, "determinant of non-square matrix");
  ScalarMatrix m = *this;
  int n = rows_;
  Scalar det(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!m.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Scalar(0);
    if (pivot != col) {
      for (int j = col; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      det = -det;
    }
    det *= m.at(col, col);
    Scalar inv = m.at(col, col).invert();
    for (int r = col + 1; r < n; ++r) {
      if (m.at(r, col).is_zero()) continue;
      Scalar factor = m.at(r, col) * inv;
      for (int j = col; j < n; ++j) m.at(r, j) -= factor * m.at(col, j);
    }
  }
  return det;
}

std::vector<Scalar> mat_vec(const ScalarMatrix& M, const std::vector<Scalar>& v) {
  std::vector<Scalar> out(M.rows());
  for (int j = 0; j < M.cols(); ++j) {
    if (v[j].is_zero()) continue;
    for (int i = 0; i < M.rows(); ++i)
      if (!M.at(i, j).is_zero()) out[i] += M.at(i, j) * v[j];
  }
  return out;
}

ComplexScalar ComplexScalar::invert() const {
  Scalar denom = re * re + im * im;
  Scalar inv = denom.invert();
  return {re * inv, -(im * inv)};
}

ComplexScalar complex_determinant(std::vector<ComplexScalar> a, int n) {
  auto at = [&](int i, int j) -> ComplexScalar& { return a[i * n + j]; };
  ComplexScalar det(Scalar(1), Scalar(0));
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return {Scalar(0), Scalar(0)};
    if (pivot != col) {
      for (int j = col; j < n; ++j) std::swap(at(pivot, j), at(col, j));
      det = det * ComplexScalar(Scalar(-1), Scalar(0));
    }
    det = det * at(col, col);
    ComplexScalar inv = at(col, col).invert();
    for (int r = col + 1; r < n; ++r) {
      if (at(r, col).is_zero()) continue;
      ComplexScalar factor = at(r, col) * inv;
      for (int j = col; j < n; ++j) at(r, j) = at(r, j) - factor * at(col, j);
    }
  }
  return det;
}

}  // namespace liecurv
