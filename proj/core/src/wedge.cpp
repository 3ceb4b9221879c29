#include "liecurv/wedge.hpp"

#include <algorithm>

#include "liecurv/error.hpp"

namespace liecurv {

namespace {

std::vector<int> build_pos(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<int> pos(static_cast<std::size_t>(n) * n, -1);
  for (int p = 0; p < static_cast<int>(pairs.size()); ++p) {
    auto [i, j] = pairs[p];
    if (i < 0 || j >= n || i >= j) fail(errc::basis_error, "pair indices must satisfy 0 <= i < j < n");
    int& slot = pos[i * n + j];
    if (slot != -1)
      fail(errc::basis_error,
           "duplicate pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
    slot = p;
  }
  return pos;
}

}  // namespace

WedgeBasis WedgeBasis::lexicographic(int n) {
  if (n < 2) fail(errc::degenerate_dimension, "wedge basis needs dimension >= 2");
  WedgeBasis b;
  b.n_ = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) b.pairs_.emplace_back(i, j);
  b.pos_ = build_pos(n, b.pairs_);
  return b;
}

WedgeBasis WedgeBasis::from_pairs(int n, std::vector<std::pair<int, int>> pairs) {
  if (n < 2) fail(errc::degenerate_dimension, "wedge basis needs dimension >= 2");
  if (static_cast<int>(pairs.size()) != n * (n - 1) / 2)
    fail(errc::basis_error, "expected " + std::to_string(n * (n - 1) / 2) + " pairs, got " +
                                std::to_string(pairs.size()));
  WedgeBasis b;
  b.n_ = n;
  b.pairs_ = std::move(pairs);
  b.pos_ = build_pos(n, b.pairs_);
  return b;
}

int WedgeBasis::position(int i, int j) const {
  if (i < 0 || j >= n_ || i >= j) fail(errc::basis_error, "pair indices must satisfy 0 <= i < j < n");
  return pos_[i * n_ + j];
}

std::pair<int, int> WedgeBasis::signed_position(int a, int b) const {
  if (a == b) fail(errc::basis_error, "wedge of equal indices is zero, not a basis element");
  if (a < b) return {position(a, b), 1};
  return {position(b, a), -1};
}

Scalar CurvatureOperator::entry(int a, int b, int c, int d) const {
  auto [p, s1] = basis.signed_position(a, b);
  auto [q, s2] = basis.signed_position(c, d);
  const Scalar& v = Q.at(p, q);
  return s1 * s2 < 0 ? -v : v;
}

CurvatureOperator curvature_operator(const RiemannTensor& R, const WedgeBasis& basis) {
  if (basis.dim() != R.dim()) fail(errc::basis_error, "basis dimension does not match the algebra");
  int N = basis.size();
  ScalarMatrix Q(N, N);
  for (int p = 0; p < N; ++p) {
    auto [i, j] = basis.pair(p);
    for (int q = 0; q < N; ++q) {
      auto [k, l] = basis.pair(q);
      Q.at(p, q) = R.at(i, j, k, l);
    }
  }
  return {std::move(Q), basis};
}

CurvatureOperator curvature_operator(const MetricLieAlgebra& alg, const WedgeBasis& basis) {
  return curvature_operator(riemann(alg), basis);
}

CurvatureOperator curvature_operator(const MetricLieAlgebra& alg) {
  return curvature_operator(alg, WedgeBasis::lexicographic(alg.dim()));
}

namespace {

std::pair<std::vector<int>, std::vector<int>> codim2_split(int n,
                                                           const std::vector<int>& vertical) {
  auto [vert, horiz] = split_indices(n, vertical);
  if (horiz.size() != 2)
    fail(errc::codimension_error, "horizontal complement must have size 2, got " +
                                      std::to_string(horiz.size()));
  return {std::move(vert), std::move(horiz)};
}

}  // namespace

BlockSplit block_split(const CurvatureOperator& op, const std::vector<int>& vertical) {
  int n = op.basis.dim();
  auto [vert, horiz] = codim2_split(n, vertical);
  std::vector<char> is_vert(n, 0);
  for (int v : vert) is_vert[v] = 1;

  BlockSplit out;
  for (int p = 0; p < op.basis.size(); ++p) {
    auto [i, j] = op.basis.pair(p);
    (is_vert[i] == is_vert[j] ? out.pure : out.mixed).push_back(p);
  }
  out.pure_block = op.Q.submatrix(out.pure, out.pure);
  out.mixed_block = op.Q.submatrix(out.mixed, out.mixed);
  out.off_block = op.Q.submatrix(out.pure, out.mixed);
  return out;
}

ThetaIndependenceResult theta_independence_check(const CurvatureOperator& op,
                                                 const std::vector<int>& vertical) {
  auto [vert, horiz] = codim2_split(op.basis.dim(), vertical);
  ThetaIndependenceResult res;
  res.X = horiz[0];
  res.Y = horiz[1];
  int X = res.X, Y = res.Y;
  for (std::size_t a = 0; a < vert.size(); ++a)
    for (std::size_t b = a; b < vert.size(); ++b) {
      int u = vert[a], v = vert[b];
      Scalar lhs1 = op.entry(X, u, X, v);
      Scalar rhs1 = op.entry(Y, u, Y, v);
      if (lhs1 != rhs1) {
        res.holds = false;
        res.witness = {1, u, v, lhs1, rhs1};
        return res;
      }
      Scalar lhs2 = op.entry(X, u, Y, v) + op.entry(Y, u, X, v);
      if (!lhs2.is_zero()) {
        res.holds = false;
        res.witness = {2, u, v, lhs2, Scalar(0)};
        return res;
      }
    }
  return res;
}

HermitianWResult hermitian_W_check(const CurvatureOperator& op,
                                   const std::vector<int>& vertical) {
  auto [vert, horiz] = codim2_split(op.basis.dim(), vertical);
  {
    BlockSplit bs = block_split(op, vertical);
    if (!bs.invariant())
      fail(errc::split_not_invariant,
           "mixed block is not curvature-invariant: off-block residual is nonzero");
  }

  HermitianWResult res;
  res.X = horiz[0];
  res.Y = horiz[1];
  res.verticals = vert;
  int X = res.X, Y = res.Y;
  int m = static_cast<int>(vert.size());

  // R|_W in the ordered basis (X^U_1..X^U_m, Y^U_1..Y^U_m).
  auto leg = [&](int r) { return r < m ? std::pair<int, int>{X, vert[r]}
                                       : std::pair<int, int>{Y, vert[r - m]}; };
  ScalarMatrix M(2 * m, 2 * m);
  for (int r = 0; r < 2 * m; ++r) {
    auto [h1, u] = leg(r);
    for (int c = 0; c < 2 * m; ++c) {
      auto [h2, v] = leg(c);
      M.at(r, c) = op.entry(h1, u, h2, v);
    }
  }
  res.RW = M;

  // J maps column r < m to r + m and column r >= m to -(r - m):
  // (M J)_{rc} = -M_{r,c+m} for c < m, M_{r,c-m} for c >= m;
  // (J M)_{rc} =  M_{r+m,c} for r < m, -M_{r-m,c} for r >= m.
  for (int r = 0; r < 2 * m; ++r)
    for (int c = 0; c < 2 * m; ++c) {
      Scalar mj = c < m ? -M.at(r, c + m) : M.at(r, c - m);
      Scalar jm = r < m ? M.at(r + m, c) : -M.at(r - m, c);
      if (mj != jm) {
        res.commutes = false;
        res.witness = {r, c, mj, jm};
        return res;
      }
    }

  // Commutation gives M = [[A,-B],[B,A]]; M symmetric makes A symmetric and
  // B antisymmetric, so H = A + iB is Hermitian.
  res.H_re = ScalarMatrix(m, m);
  res.H_im = ScalarMatrix(m, m);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) {
      res.H_re.at(r, c) = M.at(r, c);
      res.H_im.at(r, c) = M.at(m + r, c);
    }
  res.det_RW = M.determinant();
  std::vector<ComplexScalar> H(static_cast<std::size_t>(m) * m);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) H[r * m + c] = {res.H_re.at(r, c), res.H_im.at(r, c)};
  ComplexScalar dh = complex_determinant(H, m);
  if (!dh.im.is_zero())
    fail(errc::internal_error, "Hermitian determinant has nonzero imaginary part");
  res.det_H = dh.re;
  res.det_H_sq = dh.re * dh.re;
  return res;
}

}  // namespace liecurv
