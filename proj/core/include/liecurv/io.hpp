#pragma once

#include <string>
#include <vector>

#include "liecurv/lie_algebra.hpp"
#include "liecurv/matrix.hpp"
#include "liecurv/wedge.hpp"

namespace liecurv {

/// Algebra file grammar (line oriented, '#' starts a comment):
///   dim N
///   labels L1 L2 ... LN          (optional)
///   metric identity              (optional; the only accepted value)
///   bracket I J K COEFF          (0 <= I < J < N, K in range, COEFF in the
///                                 scalar grammar; [e_I, e_J] += COEFF e_K)
/// Errors: parse_error.
MetricLieAlgebra parse_algebra(const std::string& text);

/// Errors: io_error on unreadable files, plus parse_algebra errors.
MetricLieAlgebra load_algebra(const std::string& path);

/// Canonical text form readable by parse_algebra.
std::string format_algebra(const MetricLieAlgebra& alg);

/// Wedge-order file: one 'I J' pair per line ('#' comments), a permutation of
/// the lexicographic pair list. Errors: parse_error, basis_error.
WedgeBasis parse_wedge_order(const std::string& text, int dim);
WedgeBasis load_wedge_order(const std::string& path, int dim);

/// Matrix file: square, one row per line, entries in the scalar grammar
/// separated by whitespace ('#' comments). Errors: parse_error.
ScalarMatrix parse_matrix(const std::string& text);
ScalarMatrix load_matrix(const std::string& path);

/// Comma-separated vertical list; each item is a basis label or a 0-based
/// index. Errors: invalid_params on unknown labels or bad indices.
std::vector<int> parse_vertical_list(const MetricLieAlgebra& alg, const std::string& text);

std::string read_file(const std::string& path);  // errors: io_error

}  // namespace liecurv
