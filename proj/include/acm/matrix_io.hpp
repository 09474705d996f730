#pragma once

// Plain-text matrix format shared by every CLI subcommand:
//
//   d
//   RE+IMi RE+IMi ... (d entries)
//   ... (d rows)
//
// Entries such as `0.5-0.25i`, `1e-3+2E+01i`, `-1` (imaginary part omitted)
// or `2i` (real part omitted) are accepted.

#include <iosfwd>
#include <string>

#include "acm/linalg.hpp"

namespace acm {

Complex parse_complex(const std::string& token);
std::string format_complex(Complex z);

Matrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const Matrix& X);

Matrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const Matrix& X);

/// Self-dual pair file: a header line `selfdual N` followed by U and V, each
/// in the matrix format above with dimension 2N.
struct PairFile {
  int N = 0;
  Matrix U;
  Matrix V;
};

PairFile read_pair_file(const std::string& path);
void write_pair_file(const std::string& path, const PairFile& pair);

}  // namespace acm
