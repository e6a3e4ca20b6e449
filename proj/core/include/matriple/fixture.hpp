#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "matriple/algebra.hpp"

namespace matriple {

// Matrix text fixture format, shared by every tool in the project:
//   - first non-comment line: "<rows> <cols>"
//   - one line per row, entries as "re,im" pairs separated by whitespace
//   - '#' begins a comment line; encoding is ASCII
// Parsers reject dimension mismatches and non-finite entries.

/// Reads one matrix block; throws ParseError.
Matrix read_matrix(std::istream& in);
Matrix read_matrix_file(const std::filesystem::path& path);

/// Writes one matrix block with round-trip-exact precision.
void write_matrix(std::ostream& out, const Matrix& m);
void write_matrix_file(const std::filesystem::path& path, const Matrix& m,
                       const std::vector<std::string>& comments = {});

/// A witness file bundles "# key: value" header comments with the input
/// matrices a failed property was evaluated on.  A plain single-matrix
/// fixture parses as a witness with empty metadata.
struct Witness {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<Matrix> inputs;

  const std::string* find(const std::string& key) const;
};

Witness read_witness_file(const std::filesystem::path& path);
void write_witness_file(const std::filesystem::path& path, const Witness& w);

}  // namespace matriple
