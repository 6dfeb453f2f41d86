#include "bttb/dense_assembly.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <ostream>
#include <string>

#include "bttb/error.hpp"
#include "bttb/layer_response.hpp"

namespace bttb {

namespace {

// Writes toeplitz(c, r) into a row-major destination with leading dimension ld.
void toeplitz_into(std::span<const double> c, std::span<const double> r, double* dst,
                   std::size_t ld) {
  const std::size_t rows = c.size();
  const std::size_t cols = r.size();
  for (std::size_t i = 0; i < rows; ++i) {
    double* row = dst + i * ld;
    const std::size_t below = std::min(i, cols);
    for (std::size_t p = 0; p < below; ++p) row[p] = c[i - p];
    for (std::size_t p = below; p < cols; ++p) row[p] = r[p - i];
  }
}

}  // namespace

std::uint64_t dense_bytes(const GridSpec& grid) {
  return static_cast<std::uint64_t>(grid.m()) * static_cast<std::uint64_t>(grid.n()) *
         sizeof(double);
}

Matrix<double> toeplitz(std::span<const double> c, std::span<const double> r) {
  if (c.empty() || r.empty()) throw ValidationError("c", "defining vectors must be non-empty");
  if (c[0] != r[0]) throw ValidationError("c", "c[0] must equal r[0]");
  Matrix<double> t(c.size(), r.size());
  toeplitz_into(c, r, t.data(), t.cols());
  return t;
}

DenseSensitivity assemble_dense(const GridSpec& grid, const KernelParams& params,
                                std::uint64_t memory_guard) {
  validate(grid);
  const std::uint64_t need = dense_bytes(grid);
  if (need > memory_guard) throw MemoryGuardError(need, memory_guard);

  const std::size_t sx = std::size_t(grid.sx);
  const std::size_t sy = std::size_t(grid.sy);
  const std::size_t nx = std::size_t(grid.nx());
  const std::size_t ny = std::size_t(grid.ny());

  DenseSensitivity out;
  out.grid = grid;
  out.kind = params.kind;
  out.layers.reserve(std::size_t(grid.nz));

  const LayerTables tables = prepare_tables(grid, params.kind);
  for (std::size_t layer = 0; layer < std::size_t(grid.nz); ++layer) {
    const LayerResponse resp = LayerResponse::evaluate(grid, params, tables, layer);

    // Distinct blocks of the block-Toeplitz layer, indexed by y-offset
    // dy = q - p_yL - j in [min_dy, max_dy].
    std::vector<ToeplitzPair> blocks;
    blocks.reserve(std::size_t(resp.max_dy() - resp.min_dy() + 1));
    for (std::int64_t dy = resp.min_dy(); dy <= resp.max_dy(); ++dy)
      blocks.push_back(resp.defining_vectors(dy));

    Matrix<double> g(std::size_t(grid.m()), std::size_t(grid.nr()));
    for (std::size_t j = 0; j < sy; ++j) {
      double* strip = g.data() + j * sx * g.cols();
      for (std::size_t q = 0; q < ny; ++q) {
        const std::int64_t dy = std::int64_t(q) - grid.pyl - std::int64_t(j);
        const ToeplitzPair& b = blocks[std::size_t(dy - resp.min_dy())];
        toeplitz_into(b.c, b.r, strip + q * nx, g.cols());
      }
    }
    out.layers.push_back(std::move(g));
  }
  return out;
}

std::vector<double> dense_apply(const DenseSensitivity& g, std::span<const double> x,
                                ApplyMode mode) {
  const std::size_t m = std::size_t(g.grid.m());
  const std::size_t nr = std::size_t(g.grid.nr());
  const std::size_t nz = g.layers.size();
  if (mode == ApplyMode::forward) {
    if (x.size() != nr * nz)
      throw DimensionError("dense_apply forward: expected length " + std::to_string(nr * nz) +
                           ", got " + std::to_string(x.size()));
    std::vector<double> b(m, 0.0);
    for (std::size_t r = 0; r < nz; ++r) {
      const Matrix<double>& gr = g.layers[r];
      const double* xr = x.data() + r * nr;
      for (std::size_t k = 0; k < m; ++k) {
        const double* row = gr.data() + k * nr;
        double s = 0.0;
        for (std::size_t l = 0; l < nr; ++l) s += row[l] * xr[l];
        b[k] += s;
      }
    }
    return b;
  }
  if (x.size() != m)
    throw DimensionError("dense_apply transpose: expected length " + std::to_string(m) +
                         ", got " + std::to_string(x.size()));
  std::vector<double> d(nr * nz, 0.0);
  for (std::size_t r = 0; r < nz; ++r) {
    const Matrix<double>& gr = g.layers[r];
    double* dr = d.data() + r * nr;
    for (std::size_t k = 0; k < m; ++k) {
      const double* row = gr.data() + k * nr;
      const double v = x[k];
      for (std::size_t l = 0; l < nr; ++l) dr[l] += row[l] * v;
    }
  }
  return d;
}

void write_layer_csv(const DenseSensitivity& g, std::size_t layer, std::ostream& out) {
  if (layer >= g.layers.size()) throw DimensionError("layer index out of range");
  const Matrix<double>& gr = g.layers[layer];
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (std::size_t k = 0; k < gr.rows(); ++k) {
    for (std::size_t l = 0; l < gr.cols(); ++l) {
      if (l) out << ',';
      out << gr(k, l);
    }
    out << '\n';
  }
}

}  // namespace bttb
