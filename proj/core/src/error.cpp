#include "liecurv/error.hpp"

namespace liecurv {

const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_radicand: return "invalid-radicand";
    case errc::division_by_zero: return "division-by-zero";
    case errc::field_degree_exceeded: return "field-degree-exceeded";
    case errc::invalid_algebra: return "invalid-algebra";
    case errc::degenerate_dimension: return "degenerate-dimension";
    case errc::basis_error: return "basis-error";
    case errc::codimension_error: return "codimension-error";
    case errc::split_not_invariant: return "split-not-invariant";
    case errc::not_subalgebra: return "not-subalgebra";
    case errc::conformality_required: return "conformality-required";
    case errc::adaptedness_required: return "adaptedness-required";
    case errc::compatibility_required: return "compatibility-required";
    case errc::dimension_parity: return "dimension-parity";
    case errc::unknown_catalog_entry: return "unknown-catalog-entry";
    case errc::invalid_params: return "invalid-params";
    case errc::parse_error: return "parse-error";
    case errc::io_error: return "io-error";
    case errc::internal_error: return "internal-error";
  }
  return "unknown-error";
}

}  // namespace liecurv
