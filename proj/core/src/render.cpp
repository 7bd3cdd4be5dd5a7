#include "fuzzy/render.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "fuzzy/errors.hpp"

namespace fuzzy {

namespace {

constexpr double kMinimalFraction = 0.06;

void append(std::string& out, const char* fmt, double a, double b, double c) {
  char buf[128];
  std::snprintf(buf, sizeof buf, fmt, a, b, c);
  out += buf;
}

}  // namespace

std::string render_dot_matrix(const Eigen::MatrixXcd& m, const RenderOptions& opt) {
  if (!(opt.threshold >= 0.0)) throw DomainError("render threshold must be >= 0");
  if (!(opt.cell > 0.0)) throw DomainError("render cell size must be positive");
  if (m.rows() != m.cols()) throw ShapeError("dot-matrix rendering needs a square matrix");
  const int dim = static_cast<int>(m.rows());
  const double side = dim * opt.cell;
  double amax = 0.0;
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) amax = std::max(amax, std::abs(m(r, c)));
  const double rmin = kMinimalFraction * opt.cell;

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  char head[256];
  std::snprintf(head, sizeof head,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 %.4f %.4f\" "
                "width=\"%.4f\" height=\"%.4f\">\n",
                side, side, side, side);
  out += head;
  std::snprintf(head, sizeof head, "<rect x=\"0\" y=\"0\" width=\"%.4f\" height=\"%.4f\" fill=\"white\"/>\n", side,
                side);
  out += head;
  out += "<g fill=\"black\" stroke=\"none\">\n";
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) {
      const double a = std::abs(m(r, c));
      double radius = rmin;
      if (amax > 0.0 && a >= opt.threshold && a > 0.0) radius = std::max(rmin, 0.5 * opt.cell * std::sqrt(a / amax));
      append(out, "<circle cx=\"%.4f\" cy=\"%.4f\" r=\"%.4f\"/>\n", (c + 0.5) * opt.cell, (r + 0.5) * opt.cell,
             radius);
    }
  out += "</g>\n</svg>\n";
  return out;
}

std::string render_dot_matrix(const FuzzyMatrix& m, const RenderOptions& opt) {
  return render_dot_matrix(m.data(), opt);
}

}  // namespace fuzzy
