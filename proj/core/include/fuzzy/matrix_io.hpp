#pragma once

#include <iosfwd>
#include <string>

#include "fuzzy/fuzzy_matrix.hpp"

namespace fuzzy {

// Text dump: "# fuzzy-matrix dim=D block_size=S" then "row,col,re,im" and one
// line per non-zero entry with round-trip precision.
void write_matrix_csv(std::ostream& os, const FuzzyMatrix& m);
FuzzyMatrix read_matrix_csv(std::istream& is);

// Binary dump: 16-byte header (magic "FZM1", uint64 dim, uint32 S), then
// dim * dim little-endian (re, im) float64 pairs in row-major order.
void write_matrix_binary(std::ostream& os, const FuzzyMatrix& m);
FuzzyMatrix read_matrix_binary(std::istream& is);

void save_matrix(const std::string& path, const FuzzyMatrix& m);  // format from extension (.csv / .bin)
FuzzyMatrix load_matrix(const std::string& path);

}  // namespace fuzzy
