#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liecurv/lie_algebra.hpp"
#include "liecurv/wedge.hpp"

namespace liecurv {

struct CatalogParams {
  std::optional<int> n;                          // family size (g1, g2, abelian)
  std::optional<std::vector<Scalar>> alpha;      // g2 eigenvalue list
};

/// A vertical index set documented for an entry, with its known behaviour.
struct CatalogSplit {
  std::string display;        // label form, e.g. "A,X2,X4"
  std::vector<int> vertical;
  std::string note;
};

struct CatalogInfo {
  std::string name;
  std::string description;
  std::string params_help;  // empty for fixed entries
  std::vector<CatalogSplit> splits;                 // for the default parameters
  std::vector<std::pair<int, int>> display_order;   // custom wedge order; empty = lexicographic
};

/// Errors: unknown_catalog_entry; invalid_params on bad or superfluous
/// parameters. Entries: nikonorov5, nikonorov4, g1(n), g2(alpha...),
/// abelian(n), so3, heisenberg3.
MetricLieAlgebra catalog_build(const std::string& name, const CatalogParams& params = {});

std::vector<std::string> catalog_names();

/// Errors: unknown_catalog_entry.
const CatalogInfo& catalog_info(const std::string& name);

/// The display wedge ordering for an entry, or the lexicographic default.
WedgeBasis catalog_wedge_basis(const std::string& name, int dim);

}  // namespace liecurv
