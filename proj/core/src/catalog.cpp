#include "liecurv/catalog.hpp"

#include <algorithm>
#include <map>

#include "liecurv/error.hpp"

namespace liecurv {

namespace {

Scalar frac_sqrt(long num, long den, std::uint64_t rad) {
  Rational q(num, den);
  q.canonicalize();
  return Scalar(q, rad);
}

MetricLieAlgebra build_nikonorov5() {
  Scalar a = frac_sqrt(1, 3, 6);  // sqrt(2/3)
  std::vector<BracketTerm> b{{0, 1, 2, a}, {0, 2, 3, a}};
  for (int j = 1; j <= 4; ++j) b.push_back({j - 1, 4, j - 1, Scalar::over_sqrt(Rational(-j), 30)});
  return MetricLieAlgebra::from_brackets(5, b, {"X1", "X2", "X3", "X4", "A"});
}

MetricLieAlgebra build_nikonorov4() {
  Scalar a = frac_sqrt(1, 3, 6);  // sqrt(2/3)
  std::vector<BracketTerm> b{{0, 1, 2, a}};
  const int beta[4] = {2, 2, 4, 3};
  for (int j = 1; j <= 4; ++j)
    b.push_back({j - 1, 4, j - 1, Scalar::over_sqrt(Rational(-beta[j - 1]), 33)});
  return MetricLieAlgebra::from_brackets(5, b, {"X1", "X2", "X3", "X4", "A"});
}

MetricLieAlgebra build_g1(int n) {
  if (n < 1) fail(errc::invalid_params, "g1 needs n >= 1");
  std::vector<BracketTerm> b;
  for (int k = 1; k <= n; ++k) b.push_back({0, k, k + 1, Scalar(1)});
  std::vector<std::string> labels{"W"};
  for (int k = 1; k <= n + 1; ++k) labels.push_back("X" + std::to_string(k));
  return MetricLieAlgebra::from_brackets(n + 2, b, std::move(labels));
}

MetricLieAlgebra build_g2(const std::vector<Scalar>& alpha) {
  int n = static_cast<int>(alpha.size());
  if (n < 1) fail(errc::invalid_params, "g2 needs at least one alpha value");
  std::vector<BracketTerm> b;
  for (int k = 1; k <= n; ++k)
    if (!alpha[k - 1].is_zero()) b.push_back({0, k, k, alpha[k - 1]});
  std::vector<std::string> labels{"W"};
  for (int k = 1; k <= n; ++k) labels.push_back("X" + std::to_string(k));
  return MetricLieAlgebra::from_brackets(n + 1, b, std::move(labels));
}

MetricLieAlgebra build_abelian(int n) {
  if (n < 1) fail(errc::invalid_params, "abelian needs n >= 1");
  return MetricLieAlgebra::from_brackets(n, {});
}

MetricLieAlgebra build_so3() {
  return MetricLieAlgebra::from_brackets(
      3, {{0, 1, 2, Scalar(1)}, {1, 2, 0, Scalar(1)}, {0, 2, 1, Scalar(-1)}});
}

MetricLieAlgebra build_heisenberg3() {
  return MetricLieAlgebra::from_brackets(3, {{0, 1, 2, Scalar(1)}}, {"X", "Y", "Z"});
}

std::vector<int> range_ints(int lo, int hi) {  // inclusive
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

const std::map<std::string, CatalogInfo>& info_table() {
  static const std::map<std::string, CatalogInfo> table = [] {
    std::map<std::string, CatalogInfo> t;
    t["nikonorov5"] = CatalogInfo{
        "nikonorov5",
        "5-dimensional Einstein solvable example: [X1,X2]=sqrt(2/3)X3, "
        "[X1,X3]=sqrt(2/3)X4, [A,Xj]=(j/sqrt(30))Xj",
        "",
        {{"A,X2,X4", {1, 3, 4}, "totally geodesic fibers, not conformal"},
         {"X2,X3,X4", {1, 2, 3}, "conformal, not minimal"}},
        {{0, 2}, {1, 4}, {3, 4}, {1, 3}, {0, 4}, {2, 4}, {0, 1}, {1, 2}, {0, 3}, {2, 3}}};
    t["nikonorov4"] = CatalogInfo{
        "nikonorov4",
        "5-dimensional Einstein solvable example: [X1,X2]=sqrt(2/3)X3, "
        "[A,Xj]=(beta_j/sqrt(33))Xj with beta=(2,2,4,3)",
        "",
        {{"A,X3,X4", {2, 3, 4}, "conformal with totally geodesic fibers"}},
        {{0, 1}, {2, 4}, {3, 4}, {2, 3}, {0, 4}, {1, 4}, {0, 2}, {1, 2}, {0, 3}, {1, 3}}};
    t["g1"] = CatalogInfo{"g1",
                          "(n+2)-dimensional nilpotent family: [W,Xk]=X{k+1} for k=1..n",
                          "--n N (default 2)",
                          {{"X2..X(n+1)", range_ints(2, 3), "fibers of the candidate map"}},
                          {}};
    t["g2"] = CatalogInfo{
        "g2",
        "(n+1)-dimensional solvable family: [W,Xk]=alpha_k Xk",
        "--alpha a1,a2,... (default 1,0,0) or --n N for alpha=(1,0,...,0)",
        {{"X2..Xn", range_ints(2, 3), "totally geodesic iff alpha_2=..=alpha_n=0"}},
        {}};
    t["abelian"] = CatalogInfo{"abelian", "n-dimensional abelian algebra (flat metric)",
                               "--dim N (default 4)", {}, {}};
    t["so3"] = CatalogInfo{
        "so3", "compact 3-dimensional algebra: [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2", "", {}, {}};
    t["heisenberg3"] =
        CatalogInfo{"heisenberg3", "3-dimensional Heisenberg algebra: [X,Y]=Z", "", {}, {}};
    return t;
  }();
  return table;
}

void require_no_params(const std::string& name, const CatalogParams& p) {
  if (p.n || p.alpha) fail(errc::invalid_params, name + " takes no parameters");
}

}  // namespace

MetricLieAlgebra catalog_build(const std::string& name, const CatalogParams& params) {
  if (name == "nikonorov5") {
    require_no_params(name, params);
    return build_nikonorov5();
  }
  if (name == "nikonorov4") {
    require_no_params(name, params);
    return build_nikonorov4();
  }
  if (name == "g1") {
    if (params.alpha) fail(errc::invalid_params, "g1 takes --n only");
    return build_g1(params.n.value_or(2));
  }
  if (name == "g2") {
    std::vector<Scalar> alpha;
    if (params.alpha) {
      alpha = *params.alpha;
      if (params.n && *params.n != static_cast<int>(alpha.size()))
        fail(errc::invalid_params, "g2: --n disagrees with the number of alpha values");
    } else {
      int n = params.n.value_or(3);
      if (n < 1) fail(errc::invalid_params, "g2 needs n >= 1");
      alpha.assign(n, Scalar(0));
      alpha[0] = Scalar(1);
    }
    return build_g2(alpha);
  }
  if (name == "abelian") {
    if (params.alpha) fail(errc::invalid_params, "abelian takes --dim only");
    return build_abelian(params.n.value_or(4));
  }
  if (name == "so3") {
    require_no_params(name, params);
    return build_so3();
  }
  if (name == "heisenberg3") {
    require_no_params(name, params);
    return build_heisenberg3();
  }
  fail(errc::unknown_catalog_entry, "unknown catalog entry '" + name + "'");
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& [name, info] : info_table()) names.push_back(name);
  return names;
}

const CatalogInfo& catalog_info(const std::string& name) {
  auto it = info_table().find(name);
  if (it == info_table().end())
    fail(errc::unknown_catalog_entry, "unknown catalog entry '" + name + "'");
  return it->second;
}

WedgeBasis catalog_wedge_basis(const std::string& name, int dim) {
  const CatalogInfo& info = catalog_info(name);
  if (info.display_order.empty()) return WedgeBasis::lexicographic(dim);
  return WedgeBasis::from_pairs(dim, info.display_order);
}

}  // namespace liecurv
