#include "bttb/fast_apply.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bttb/error.hpp"

namespace bttb {

namespace {

void check_stack(const TransformStack& s) {
  if (s.forward.size() != std::size_t(s.grid.nz) || s.transpose.size() != s.forward.size())
    throw DimensionError("transform stack layer count does not match grid n_z");
  for (std::size_t r = 0; r < s.forward.size(); ++r) {
    if (s.forward[r].rows() != s.rows() || s.forward[r].cols() != s.cols() ||
        s.transpose[r].rows() != s.rows() || s.transpose[r].cols() != s.cols())
      throw DimensionError("transform stack layer " + std::to_string(r) +
                           " has the wrong shape for its grid");
  }
}

struct Residue {
  double max_im = 0.0;
  double max_re = 0.0;
  void observe(const ComplexBuffer& b) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      max_im = std::max(max_im, std::abs(b[i].imag()));
      max_re = std::max(max_re, std::abs(b[i].real()));
    }
  }
  double ratio() const { return max_re > 0.0 ? max_im / max_re : max_im; }
};

}  // namespace

std::vector<double> apply(const TransformStack& stack, std::span<const double> x, ApplyMode mode,
                          ApplyStats* stats) {
  check_stack(stack);
  const GridSpec& g = stack.grid;
  const std::size_t sx = std::size_t(g.sx), sy = std::size_t(g.sy);
  const std::size_t nx = std::size_t(g.nx()), ny = std::size_t(g.ny());
  const std::size_t nr = nx * ny;
  const std::size_t m = sx * sy;
  const std::size_t nz = std::size_t(g.nz);
  const std::size_t rows = stack.rows(), cols = stack.cols();
  const Fft2d& plan = fft_plan(rows, cols);
  Residue residue;

  if (mode == ApplyMode::forward) {
    if (x.size() != nr * nz)
      throw DimensionError("apply forward: expected length " + std::to_string(nr * nz) +
                           ", got " + std::to_string(x.size()));
    std::vector<double> b(m, 0.0);
    ComplexBuffer w(rows * cols);
    for (std::size_t layer = 0; layer < nz; ++layer) {
      // U (n_x x n_y, x fastest in the model vector) in the top-left corner.
      w.zero();
      const double* u = x.data() + layer * nr;
      for (std::size_t q = 0; q < ny; ++q)
        for (std::size_t p = 0; p < nx; ++p) w[p * cols + q] = cplx(u[q * nx + p], 0.0);
      plan.forward(w.data());
      const cplx* t = stack.forward[layer].data();
      for (std::size_t i = 0; i < rows * cols; ++i) w[i] *= t[i];
      plan.inverse(w.data());
      if (stats) residue.observe(w);
      for (std::size_t j = 0; j < sy; ++j)
        for (std::size_t i = 0; i < sx; ++i) b[j * sx + i] += w[i * cols + j].real();
    }
    if (stats) stats->imaginary_residue = residue.ratio();
    return b;
  }

  if (x.size() != m)
    throw DimensionError("apply transpose: expected length " + std::to_string(m) + ", got " +
                         std::to_string(x.size()));
  std::vector<double> d(nr * nz, 0.0);
  // Transformed once, shared by all layers.
  ComplexBuffer vhat(rows * cols);
  for (std::size_t j = 0; j < sy; ++j)
    for (std::size_t i = 0; i < sx; ++i) vhat[i * cols + j] = cplx(x[j * sx + i], 0.0);
  plan.forward(vhat.data());
  ComplexBuffer z(rows * cols);
  for (std::size_t layer = 0; layer < nz; ++layer) {
    const cplx* t = stack.transpose[layer].data();
    for (std::size_t i = 0; i < rows * cols; ++i) z[i] = vhat[i] * t[i];
    plan.inverse(z.data());
    if (stats) residue.observe(z);
    double* out = d.data() + layer * nr;
    for (std::size_t q = 0; q < ny; ++q)
      for (std::size_t p = 0; p < nx; ++p) out[q * nx + p] = z[p * cols + q].real();
  }
  if (stats) stats->imaginary_residue = residue.ratio();
  return d;
}

double relative_error(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size())
    throw DimensionError("relative_error: lengths " + std::to_string(a.size()) + " and " +
                         std::to_string(b.size()) + " differ");
  double diff = 0.0, norm = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double e = a[i] - b[i];
    diff += e * e;
    norm += a[i] * a[i];
  }
  if (norm == 0.0) return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return std::sqrt(diff) / std::sqrt(norm);
}

}  // namespace bttb
