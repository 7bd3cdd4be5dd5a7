#include "fuzzy/matrix_io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "fuzzy/errors.hpp"

namespace fuzzy {

namespace {

constexpr std::array<char, 4> kMagic{'F', 'Z', 'M', '1'};

template <class T>
void put_le(std::ostream& os, T v) {
  std::array<unsigned char, sizeof(T)> b{};
  std::memcpy(b.data(), &v, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(b.begin(), b.end());
  os.write(reinterpret_cast<const char*>(b.data()), sizeof(T));
}

template <class T>
T get_le(std::istream& is) {
  std::array<unsigned char, sizeof(T)> b{};
  if (!is.read(reinterpret_cast<char*>(b.data()), sizeof(T))) throw ConfigError("truncated binary matrix");
  if constexpr (std::endian::native == std::endian::big) std::reverse(b.begin(), b.end());
  T v;
  std::memcpy(&v, b.data(), sizeof(T));
  return v;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

void write_matrix_csv(std::ostream& os, const FuzzyMatrix& m) {
  os << "# fuzzy-matrix dim=" << m.dim() << " block_size=" << m.meta().block_size << '\n';
  os << "row,col,re,im\n";
  char buf[96];
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) {
      const cplx v = m(r, c);
      if (v == cplx{}) continue;
      std::snprintf(buf, sizeof buf, "%d,%d,%.17g,%.17g\n", r, c, v.real(), v.imag());
      os << buf;
    }
}

FuzzyMatrix read_matrix_csv(std::istream& is) {
  std::string line;
  int dim = -1, s = 1;
  if (!std::getline(is, line) || std::sscanf(line.c_str(), "# fuzzy-matrix dim=%d block_size=%d", &dim, &s) != 2 ||
      dim < 0)
    throw ConfigError("missing fuzzy-matrix CSV header");
  if (!std::getline(is, line) || line != "row,col,re,im") throw ConfigError("missing CSV column header");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    int r = 0, c = 0;
    double re = 0, im = 0;
    if (std::sscanf(line.c_str(), "%d,%d,%lf,%lf", &r, &c, &re, &im) != 4)
      throw ConfigError("malformed CSV line: " + line);
    if (r < 0 || c < 0 || r >= dim || c >= dim) throw ConfigError("CSV entry out of range: " + line);
    m(r, c) = {re, im};
  }
  return FuzzyMatrix(std::move(m), s);
}

void write_matrix_binary(std::ostream& os, const FuzzyMatrix& m) {
  os.write(kMagic.data(), kMagic.size());
  put_le<std::uint64_t>(os, static_cast<std::uint64_t>(m.dim()));
  put_le<std::uint32_t>(os, static_cast<std::uint32_t>(m.meta().block_size));
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) {
      put_le<double>(os, m(r, c).real());
      put_le<double>(os, m(r, c).imag());
    }
}

FuzzyMatrix read_matrix_binary(std::istream& is) {
  std::array<char, 4> magic{};
  if (!is.read(magic.data(), magic.size()) || magic != kMagic) throw ConfigError("not a fuzzy-matrix binary dump");
  const auto dim = get_le<std::uint64_t>(is);
  const auto s = get_le<std::uint32_t>(is);
  if (dim > (1u << 16)) throw ConfigError("implausible matrix dimension");
  const int d = static_cast<int>(dim);
  Eigen::MatrixXcd m(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) {
      const double re = get_le<double>(is);
      const double im = get_le<double>(is);
      m(r, c) = {re, im};
    }
  return FuzzyMatrix(std::move(m), static_cast<int>(s));
}

void save_matrix(const std::string& path, const FuzzyMatrix& m) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ConfigError("cannot write " + path);
  if (ends_with(path, ".bin"))
    write_matrix_binary(os, m);
  else
    write_matrix_csv(os, m);
  if (!os) throw ConfigError("failed writing " + path);
}

FuzzyMatrix load_matrix(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ConfigError("cannot read " + path);
  return ends_with(path, ".bin") ? read_matrix_binary(is) : read_matrix_csv(is);
}

}  // namespace fuzzy
