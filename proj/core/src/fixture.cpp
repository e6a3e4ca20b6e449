#include "matriple/fixture.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace matriple {

namespace {

bool blank(const std::string& line) {
  for (char ch : line) {
    if (!std::isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

// Reads lines until the next content line; returns false on EOF.
// Comment lines are pushed to `comments` when requested.
bool next_content_line(std::istream& in, std::string& line,
                       std::vector<std::string>* comments = nullptr) {
  while (std::getline(in, line)) {
    if (blank(line)) continue;
    std::size_t first = line.find_first_not_of(" \t");
    if (line[first] == '#') {
      if (comments) comments->push_back(line.substr(first));
      continue;
    }
    return true;
  }
  return false;
}

Complex parse_entry(const std::string& token, int row) {
  std::size_t comma = token.find(',');
  if (comma == std::string::npos) {
    throw ParseError("fixture: entry '" + token + "' in row " +
                     std::to_string(row) + " is not a re,im pair");
  }
  std::size_t used_re = 0;
  std::size_t used_im = 0;
  double re;
  double im;
  try {
    re = std::stod(token.substr(0, comma), &used_re);
    im = std::stod(token.substr(comma + 1), &used_im);
  } catch (const std::exception&) {
    throw ParseError("fixture: cannot parse entry '" + token + "'");
  }
  if (used_re != comma || used_im != token.size() - comma - 1) {
    throw ParseError("fixture: trailing characters in entry '" + token + "'");
  }
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw ParseError("fixture: non-finite entry '" + token + "'");
  }
  return {re, im};
}

Matrix read_matrix_block(std::istream& in, const std::string& header) {
  std::istringstream hdr(header);
  long rows = 0;
  long cols = 0;
  std::string extra;
  if (!(hdr >> rows >> cols) || (hdr >> extra) || rows < 1 || cols < 1) {
    throw ParseError("fixture: bad dimension header '" + header + "'");
  }

  Matrix m(rows, cols);
  std::string line;
  for (long i = 0; i < rows; ++i) {
    if (!next_content_line(in, line)) {
      throw ParseError("fixture: expected " + std::to_string(rows) +
                       " rows, file ended after " + std::to_string(i));
    }
    std::istringstream row(line);
    std::string token;
    for (long j = 0; j < cols; ++j) {
      if (!(row >> token)) {
        throw ParseError("fixture: row " + std::to_string(i) + " has fewer than " +
                         std::to_string(cols) + " entries");
      }
      m(i, j) = parse_entry(token, static_cast<int>(i));
    }
    if (row >> token) {
      throw ParseError("fixture: row " + std::to_string(i) +
                       " has more than " + std::to_string(cols) + " entries");
    }
  }
  return m;
}

std::string format_entry(const Complex& z) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g,%.17g", z.real(), z.imag());
  return buf;
}

}  // namespace

Matrix read_matrix(std::istream& in) {
  std::string header;
  if (!next_content_line(in, header)) {
    throw ParseError("fixture: empty input");
  }
  return read_matrix_block(in, header);
}

Matrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("fixture: cannot open " + path.string());
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const Matrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ' ';
      out << format_entry(m(i, j));
    }
    out << '\n';
  }
}

void write_matrix_file(const std::filesystem::path& path, const Matrix& m,
                       const std::vector<std::string>& comments) {
  std::ofstream out(path);
  if (!out) throw Error("fixture: cannot write " + path.string());
  for (const std::string& c : comments) {
    out << "# " << c << '\n';
  }
  write_matrix(out, m);
}

const std::string* Witness::find(const std::string& key) const {
  for (const auto& [k, v] : meta) {
    if (k == key) return &v;
  }
  return nullptr;
}

Witness read_witness_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("witness: cannot open " + path.string());

  Witness w;
  std::string line;
  std::vector<std::string> comments;
  while (next_content_line(in, line, &comments)) {
    w.inputs.push_back(read_matrix_block(in, line));
  }
  for (const std::string& c : comments) {
    // "# key: value" comments become metadata; free-form comments are kept
    // under an empty key.
    std::size_t start = c.find_first_not_of("# \t");
    if (start == std::string::npos) continue;
    std::string body = c.substr(start);
    std::size_t colon = body.find(':');
    if (colon == std::string::npos) {
      w.meta.emplace_back("", body);
      continue;
    }
    std::string key = body.substr(0, colon);
    std::size_t vstart = body.find_first_not_of(" \t", colon + 1);
    w.meta.emplace_back(key, vstart == std::string::npos ? "" : body.substr(vstart));
  }
  return w;
}

void write_witness_file(const std::filesystem::path& path, const Witness& w) {
  std::ofstream out(path);
  if (!out) throw Error("witness: cannot write " + path.string());
  for (const auto& [key, value] : w.meta) {
    if (key.empty()) {
      out << "# " << value << '\n';
    } else {
      out << "# " << key << ": " << value << '\n';
    }
  }
  for (const Matrix& m : w.inputs) {
    write_matrix(out, m);
  }
}

}  // namespace matriple
