#pragma once

#include <stdexcept>
#include <string>

namespace liecurv {

// Failure vocabulary used across the library.  Checks that produce verdicts
// return result structs instead; exceptions are reserved for violated
// preconditions and malformed input.
enum class errc {
  invalid_radicand,
  division_by_zero,
  field_degree_exceeded,
  invalid_algebra,
  degenerate_dimension,
  basis_error,
  codimension_error,
  split_not_invariant,
  not_subalgebra,
  conformality_required,
  adaptedness_required,
  compatibility_required,
  dimension_parity,
  unknown_catalog_entry,
  invalid_params,
  parse_error,
  io_error,
  internal_error,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code),
        message_(what) {}
  errc code() const noexcept { return code_; }
  /// The description without the errc-name prefix that what() carries.
  const std::string& message() const noexcept { return message_; }

 private:
  errc code_;
  std::string message_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace liecurv
