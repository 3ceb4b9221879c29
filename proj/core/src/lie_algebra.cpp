#include "liecurv/lie_algebra.hpp"

#include <sstream>

#include "liecurv/error.hpp"

namespace liecurv {

namespace {

std::vector<std::string> default_labels(int n, std::vector<std::string> labels) {
  if (labels.empty()) {
    for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
  }
  if (static_cast<int>(labels.size()) != n)
    fail(errc::invalid_params, "expected " + std::to_string(n) + " labels");
  return labels;
}

}  // namespace

MetricLieAlgebra MetricLieAlgebra::from_brackets(int n, const std::vector<BracketTerm>& brackets,
                                                 std::vector<std::string> labels) {
  if (n < 1) fail(errc::invalid_params, "dimension must be positive");
  MetricLieAlgebra alg;
  alg.n_ = n;
  alg.c_.assign(static_cast<std::size_t>(n) * n * n, Scalar());
  alg.labels_ = default_labels(n, std::move(labels));
  for (const auto& b : brackets) {
    if (b.i < 0 || b.j >= n || b.k < 0 || b.k >= n)
      fail(errc::invalid_params, "bracket index out of range");
    if (b.i >= b.j) fail(errc::invalid_params, "bracket records require i < j");
    alg.c_[(b.k * n + b.i) * n + b.j] += b.coeff;
    alg.c_[(b.k * n + b.j) * n + b.i] -= b.coeff;
  }
  return alg;
}

MetricLieAlgebra MetricLieAlgebra::from_components(int n, std::vector<Scalar> c,
                                                   std::vector<std::string> labels) {
  if (n < 1) fail(errc::invalid_params, "dimension must be positive");
  if (c.size() != static_cast<std::size_t>(n) * n * n)
    fail(errc::invalid_params, "structure constant table has wrong size");
  MetricLieAlgebra alg;
  alg.n_ = n;
  alg.c_ = std::move(c);
  alg.labels_ = default_labels(n, std::move(labels));
  return alg;
}

std::vector<Scalar> MetricLieAlgebra::bracket(int i, int j) const {
  std::vector<Scalar> v(n_);
  for (int k = 0; k < n_; ++k) v[k] = c(k, i, j);
  return v;
}

std::vector<Scalar> MetricLieAlgebra::bracket(const std::vector<Scalar>& x,
                                              const std::vector<Scalar>& y) const {
  std::vector<Scalar> v(n_);
  for (int i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < n_; ++j) {
      if (y[j].is_zero()) continue;
      Scalar w = x[i] * y[j];
      for (int k = 0; k < n_; ++k) {
        if (!c(k, i, j).is_zero()) v[k] += w * c(k, i, j);
      }
    }
  }
  return v;
}

int MetricLieAlgebra::index_of(const std::string& label) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[i] == label) return i;
  return -1;
}

// ============================ validation ============================

std::string ValidationIssue::describe(const MetricLieAlgebra& alg) const {
  std::ostringstream os;
  if (kind == Kind::antisymmetry) {
    os << "antisymmetry: c^" << alg.label(k) << "(" << alg.label(i) << "," << alg.label(j)
       << ") + c^" << alg.label(k) << "(" << alg.label(j) << "," << alg.label(i)
       << ") = " << defect.str();
  } else {
    os << "jacobi: component " << alg.label(k) << " of J(" << alg.label(i) << ","
       << alg.label(j) << "," << alg.label(l) << ") = " << defect.str();
  }
  return os.str();
}

ValidationReport validate(const MetricLieAlgebra& alg) {
  ValidationReport rep;
  int n = alg.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Scalar defect = alg.c(k, i, j) + alg.c(k, j, i);
        if (!defect.is_zero())
          rep.issues.push_back({ValidationIssue::Kind::antisymmetry, i, j, -1, k, defect});
      }
  // Jacobi: [[e_i,e_j],e_l] + [[e_j,e_l],e_i] + [[e_l,e_i],e_j] = 0.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int l = j + 1; l < n; ++l) {
        std::vector<Scalar> sum(n);
        auto add_term = [&](int a, int b, int c3) {
          for (int m = 0; m < n; ++m) {
            const Scalar& cm = alg.c(m, a, b);
            if (cm.is_zero()) continue;
            for (int k = 0; k < n; ++k) sum[k] += cm * alg.c(k, m, c3);
          }
        };
        add_term(i, j, l);
        add_term(j, l, i);
        add_term(l, i, j);
        for (int k = 0; k < n; ++k)
          if (!sum[k].is_zero())
            rep.issues.push_back({ValidationIssue::Kind::jacobi, i, j, l, k, sum[k]});
      }
  return rep;
}

// ============================ connection ============================

std::vector<Scalar> ConnectionTable::nabla(int i, int j) const {
  std::vector<Scalar> v(n_);
  for (int k = 0; k < n_; ++k) v[k] = gamma(i, j, k);
  return v;
}

std::vector<Scalar> ConnectionTable::nabla(const std::vector<Scalar>& x,
                                           const std::vector<Scalar>& y) const {
  std::vector<Scalar> v(n_);
  for (int i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < n_; ++j) {
      if (y[j].is_zero()) continue;
      Scalar w = x[i] * y[j];
      for (int k = 0; k < n_; ++k)
        if (!gamma(i, j, k).is_zero()) v[k] += w * gamma(i, j, k);
    }
  }
  return v;
}

namespace {

void require_valid(const MetricLieAlgebra& alg) {
  ValidationReport rep = validate(alg);
  if (!rep.valid())
    fail(errc::invalid_algebra, rep.issues.front().describe(alg) +
                                    (rep.issues.size() > 1
                                         ? " (+" + std::to_string(rep.issues.size() - 1) +
                                               " more issues)"
                                         : ""));
}

}  // namespace

ConnectionTable koszul_connection(const MetricLieAlgebra& alg) {
  require_valid(alg);
  int n = alg.dim();
  ConnectionTable t(n);
  Scalar half(Rational(1, 2));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        t.gamma(i, j, k) = half * (alg.c(k, i, j) - alg.c(i, j, k) + alg.c(j, k, i));
  return t;
}

// ============================ curvature ============================

namespace {

RiemannTensor riemann_from(const MetricLieAlgebra& alg, const ConnectionTable& nab) {
  int n = alg.dim();
  RiemannTensor R(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        // R(e_i,e_j)e_k = nabla_i nabla_j e_k - nabla_j nabla_i e_k - nabla_[e_i,e_j] e_k
        std::vector<Scalar> v(n);
        for (int m = 0; m < n; ++m) {
          const Scalar& gjm = nab.gamma(j, k, m);
          if (!gjm.is_zero())
            for (int l = 0; l < n; ++l) v[l] += gjm * nab.gamma(i, m, l);
          const Scalar& gim = nab.gamma(i, k, m);
          if (!gim.is_zero())
            for (int l = 0; l < n; ++l) v[l] -= gim * nab.gamma(j, m, l);
          const Scalar& cm = alg.c(m, i, j);
          if (!cm.is_zero())
            for (int l = 0; l < n; ++l) v[l] -= cm * nab.gamma(m, k, l);
        }
        for (int l = 0; l < n; ++l) {
          R.at(i, j, k, l) = v[l];
          R.at(j, i, k, l) = -v[l];
        }
      }
    }
  return R;
}

}  // namespace

RiemannTensor riemann(const MetricLieAlgebra& alg) {
  if (alg.dim() < 2)
    fail(errc::degenerate_dimension, "curvature needs dimension >= 2");
  return riemann_from(alg, koszul_connection(alg));
}

ScalarMatrix ricci_from_riemann(const RiemannTensor& R) {
  int n = R.dim();
  ScalarMatrix ric(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Scalar s;
      for (int k = 0; k < n; ++k) s += R.at(k, i, j, k);
      ric.at(i, j) = s;
    }
  return ric;
}

ScalarMatrix ricci(const MetricLieAlgebra& alg) { return ricci_from_riemann(riemann(alg)); }

EinsteinResult einstein_check(const MetricLieAlgebra& alg) {
  ScalarMatrix ric = ricci(alg);
  int n = alg.dim();
  EinsteinResult res;
  res.constant = ric.at(0, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Scalar expected = (i == j) ? res.constant : Scalar(0);
      if (ric.at(i, j) != expected) {
        res.einstein = false;
        res.witness = {i, j};
        res.witness_value = ric.at(i, j);
        res.witness_expected = expected;
        return res;
      }
    }
  res.einstein = true;
  return res;
}

CurvatureData curvature_data(const MetricLieAlgebra& alg) {
  if (alg.dim() < 2)
    fail(errc::degenerate_dimension, "curvature needs dimension >= 2");
  ConnectionTable nab = koszul_connection(alg);
  RiemannTensor R = riemann_from(alg, nab);
  ScalarMatrix ric = ricci_from_riemann(R);
  return {std::move(nab), std::move(R), std::move(ric)};
}

std::pair<std::vector<int>, std::vector<int>> split_indices(int n,
                                                            const std::vector<int>& vertical) {
  std::vector<char> seen(n, 0);
  for (int v : vertical) {
    if (v < 0 || v >= n)
      fail(errc::invalid_params, "vertical index " + std::to_string(v) + " out of range");
    if (seen[v]) fail(errc::invalid_params, "duplicate vertical index " + std::to_string(v));
    seen[v] = 1;
  }
  std::vector<int> vert, horiz;
  for (int i = 0; i < n; ++i) (seen[i] ? vert : horiz).push_back(i);
  return {std::move(vert), std::move(horiz)};
}

}  // namespace liecurv
