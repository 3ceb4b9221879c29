#include "liecurv/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "liecurv/error.hpp"

namespace liecurv {

namespace {

/// Lines with comments stripped, tokenized on whitespace; empty lines dropped.
std::vector<std::vector<std::string>> token_lines(const std::string& text) {
  std::vector<std::vector<std::string>> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (!tokens.empty()) lines.push_back(std::move(tokens));
  }
  return lines;
}

int parse_int(const std::string& tok, const std::string& what) {
  std::size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    fail(errc::parse_error, "expected an integer for " + what + ", got '" + tok + "'");
  }
  if (pos != tok.size())
    fail(errc::parse_error, "trailing characters after " + what + " in '" + tok + "'");
  return value;
}

}  // namespace

MetricLieAlgebra parse_algebra(const std::string& text) {
  int dim = -1;
  std::vector<std::string> labels;
  std::vector<BracketTerm> brackets;
  for (const auto& tokens : token_lines(text)) {
    const std::string& head = tokens[0];
    if (head == "dim") {
      if (tokens.size() != 2) fail(errc::parse_error, "dim takes exactly one value");
      if (dim != -1) fail(errc::parse_error, "duplicate dim directive");
      dim = parse_int(tokens[1], "dim");
      if (dim < 1) fail(errc::parse_error, "dim must be positive");
    } else if (head == "labels") {
      if (dim == -1) fail(errc::parse_error, "labels must come after dim");
      if (static_cast<int>(tokens.size()) != dim + 1)
        fail(errc::parse_error, "labels needs exactly dim entries");
      labels.assign(tokens.begin() + 1, tokens.end());
    } else if (head == "metric") {
      if (tokens.size() != 2 || tokens[1] != "identity")
        fail(errc::parse_error, "only 'metric identity' is supported");
    } else if (head == "bracket") {
      if (dim == -1) fail(errc::parse_error, "bracket must come after dim");
      if (tokens.size() != 5) fail(errc::parse_error, "bracket takes I J K COEFF");
      int i = parse_int(tokens[1], "bracket index");
      int j = parse_int(tokens[2], "bracket index");
      int k = parse_int(tokens[3], "bracket index");
      if (i < 0 || j >= dim || k < 0 || k >= dim || i >= j)
        fail(errc::parse_error, "bracket indices need 0 <= I < J < dim and K in range");
      brackets.push_back({i, j, k, Scalar::parse(tokens[4])});
    } else {
      fail(errc::parse_error, "unknown directive '" + head + "'");
    }
  }
  if (dim == -1) fail(errc::parse_error, "missing dim directive");
  return MetricLieAlgebra::from_brackets(dim, brackets, std::move(labels));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::io_error, "cannot open '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  if (in.bad()) fail(errc::io_error, "error while reading '" + path + "'");
  return out.str();
}

MetricLieAlgebra load_algebra(const std::string& path) { return parse_algebra(read_file(path)); }

std::string format_algebra(const MetricLieAlgebra& alg) {
  std::ostringstream out;
  int n = alg.dim();
  out << "dim " << n << "\n";
  out << "labels";
  for (int i = 0; i < n; ++i) out << " " << alg.label(i);
  out << "\n";
  out << "metric identity\n";
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Scalar& c = alg.c(k, i, j);
        if (!c.is_zero())
          out << "bracket " << i << " " << j << " " << k << " " << c.str() << "\n";
      }
  return out.str();
}

WedgeBasis parse_wedge_order(const std::string& text, int dim) {
  std::vector<std::pair<int, int>> pairs;
  for (const auto& tokens : token_lines(text)) {
    if (tokens.size() != 2) fail(errc::parse_error, "wedge-order lines take exactly two indices");
    pairs.emplace_back(parse_int(tokens[0], "wedge index"), parse_int(tokens[1], "wedge index"));
  }
  return WedgeBasis::from_pairs(dim, std::move(pairs));
}

WedgeBasis load_wedge_order(const std::string& path, int dim) {
  return parse_wedge_order(read_file(path), dim);
}

ScalarMatrix parse_matrix(const std::string& text) {
  auto lines = token_lines(text);
  if (lines.empty()) fail(errc::parse_error, "matrix file is empty");
  int n = static_cast<int>(lines.size());
  ScalarMatrix M(n, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(lines[i].size()) != n)
      fail(errc::parse_error, "matrix row " + std::to_string(i) + " has " +
                                  std::to_string(lines[i].size()) + " entries, expected " +
                                  std::to_string(n));
    for (int j = 0; j < n; ++j) M.at(i, j) = Scalar::parse(lines[i][j]);
  }
  return M;
}

ScalarMatrix load_matrix(const std::string& path) { return parse_matrix(read_file(path)); }

std::vector<int> parse_vertical_list(const MetricLieAlgebra& alg, const std::string& text) {
  std::vector<int> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    // Trim surrounding whitespace.
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) fail(errc::invalid_params, "empty item in vertical list");
    item = item.substr(b, e - b + 1);
    int idx = alg.index_of(item);
    if (idx < 0) {
      bool numeric = !item.empty() && std::all_of(item.begin(), item.end(), [](unsigned char ch) {
        return std::isdigit(ch) != 0;
      });
      if (!numeric)
        fail(errc::invalid_params,
             "'" + item + "' is neither a basis label nor a nonnegative index");
      idx = parse_int(item, "vertical index");
      if (idx >= alg.dim())
        fail(errc::invalid_params, "vertical index " + item + " out of range");
    }
    out.push_back(idx);
  }
  if (out.empty()) fail(errc::invalid_params, "vertical list is empty");
  return out;
}

}  // namespace liecurv
