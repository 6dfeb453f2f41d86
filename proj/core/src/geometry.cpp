#include "bttb/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bttb/error.hpp"

namespace bttb {

namespace {

void fill_products(DistanceTables& t) {
  const std::size_t nx = t.x.size();
  const std::size_t ny = t.y.size();
  t.xy = Matrix<double>(nx, ny);
  t.r2 = Matrix<double>(nx, ny);
  for (std::size_t l = 0; l < nx; ++l) {
    const double xl = t.x[l];
    for (std::size_t k = 0; k < ny; ++k) {
      t.xy(l, k) = xl * t.y[k];
      t.r2(l, k) = xl * xl + t.y[k] * t.y[k];
    }
  }
}

std::vector<double> staggered(std::int64_t count, std::int64_t shift, double spacing) {
  // entry l (0-based) = (l + shift - 1/2) * spacing
  std::vector<double> v(static_cast<std::size_t>(count));
  for (std::int64_t l = 0; l < count; ++l)
    v[static_cast<std::size_t>(l)] = (static_cast<double>(l + shift) - 0.5) * spacing;
  return v;
}

}  // namespace

void validate(const GridSpec& g) {
  if (g.sx < 1) throw ValidationError("sx", "station count must be >= 1");
  if (g.sy < 1) throw ValidationError("sy", "station count must be >= 1");
  if (g.nz < 1) throw ValidationError("nz", "layer count must be >= 1");
  if (g.pxl < 0) throw ValidationError("pxl", "padding must be >= 0");
  if (g.pxr < 0) throw ValidationError("pxr", "padding must be >= 0");
  if (g.pyl < 0) throw ValidationError("pyl", "padding must be >= 0");
  if (g.pyr < 0) throw ValidationError("pyr", "padding must be >= 0");
  if (!(g.dx > 0.0) || !std::isfinite(g.dx)) throw ValidationError("dx", "spacing must be > 0");
  if (!(g.dy > 0.0) || !std::isfinite(g.dy)) throw ValidationError("dy", "spacing must be > 0");
  if (static_cast<std::int64_t>(g.z_blocks.size()) != g.nz + 1)
    throw ValidationError("zblocks", "expected nz + 1 = " + std::to_string(g.nz + 1) +
                                         " depths, got " + std::to_string(g.z_blocks.size()));
  if (!(g.z_blocks.front() >= 0.0)) throw ValidationError("zblocks", "first depth must be >= 0");
  for (std::size_t r = 1; r < g.z_blocks.size(); ++r) {
    if (!(g.z_blocks[r] > g.z_blocks[r - 1]) || !std::isfinite(g.z_blocks[r]))
      throw ValidationError("zblocks", "depths must be strictly increasing (index " +
                                           std::to_string(r) + ")");
  }
}

GridSpec make_grid(std::int64_t sx, std::int64_t sy, std::int64_t nz, std::int64_t pxl,
                   std::int64_t pxr, std::int64_t pyl, std::int64_t pyr, double dx,
                   double dy, std::vector<double> z_blocks) {
  GridSpec g{sx, sy, nz, pxl, pxr, pyl, pyr, dx, dy, std::move(z_blocks)};
  validate(g);
  return g;
}

std::int64_t round_half_away(double value) {
  return static_cast<std::int64_t>(std::round(value));
}

GridSpec scaled_problem(std::int64_t k, double pad_fraction) {
  if (k < 1) throw ValidationError("problem", "problem index must be >= 1");
  if (!(pad_fraction >= 0.0)) throw ValidationError("padding", "padding fraction must be >= 0");
  const std::int64_t sx = 25 * k;
  const std::int64_t sy = 15 * k;
  const std::int64_t nz = 2 * k;
  const std::int64_t px = round_half_away(pad_fraction * static_cast<double>(sx));
  const std::int64_t py = round_half_away(pad_fraction * static_cast<double>(sy));
  std::vector<double> z(static_cast<std::size_t>(nz + 1));
  for (std::int64_t r = 0; r <= nz; ++r) z[static_cast<std::size_t>(r)] = static_cast<double>(r);
  return make_grid(sx, sy, nz, px, px, py, py, 1.0, 1.0, std::move(z));
}

DistanceTables sym_distances(const GridSpec& grid) {
  DistanceTables t;
  t.flavor = DistanceFlavor::sym;
  t.x = staggered(grid.sx + std::max(grid.pxl, grid.pxr) + 1, 0, grid.dx);
  t.y = staggered(grid.sy + std::max(grid.pyl, grid.pyr) + 1, 0, grid.dy);
  t.x_origin = 0;
  t.y_origin = 0;
  fill_products(t);
  return t;
}

DistanceTables full_distances(const GridSpec& grid) {
  const std::int64_t hx = grid.sx + std::max(grid.pxl, grid.pxr);
  const std::int64_t hy = grid.sy + std::max(grid.pyl, grid.pyr);
  DistanceTables t;
  t.flavor = DistanceFlavor::full;
  t.x = staggered(2 * hx, 1 - hx, grid.dx);
  t.y = staggered(2 * hy, 1 - hy, grid.dy);
  t.x_origin = 1 - hx;
  t.y_origin = 1 - hy;
  fill_products(t);
  return t;
}

DistanceTables window(const DistanceTables& tables, std::size_t x_begin, std::size_t x_rows,
                      std::size_t y_begin, std::size_t y_cols) {
  if (x_begin + x_rows + 1 > tables.x.size() || y_begin + y_cols + 1 > tables.y.size())
    throw DimensionError("distance window exceeds the table");
  DistanceTables t;
  t.flavor = tables.flavor;
  t.x.assign(tables.x.begin() + std::ptrdiff_t(x_begin),
             tables.x.begin() + std::ptrdiff_t(x_begin + x_rows + 1));
  t.y.assign(tables.y.begin() + std::ptrdiff_t(y_begin),
             tables.y.begin() + std::ptrdiff_t(y_begin + y_cols + 1));
  t.x_origin = tables.x_offset_of_row(x_begin);
  t.y_origin = tables.y_offset_of_col(y_begin);
  t.xy = Matrix<double>(t.x.size(), t.y.size());
  t.r2 = Matrix<double>(t.x.size(), t.y.size());
  for (std::size_t l = 0; l < t.x.size(); ++l)
    for (std::size_t k = 0; k < t.y.size(); ++k) {
      t.xy(l, k) = tables.xy(x_begin + l, y_begin + k);
      t.r2(l, k) = tables.r2(x_begin + l, y_begin + k);
    }
  return t;
}

}  // namespace bttb
