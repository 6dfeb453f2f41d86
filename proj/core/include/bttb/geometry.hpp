#pragma once

#include <cstdint>
#include <vector>

#include "bttb/matrix.hpp"

namespace bttb {

/// Survey and volume geometry of a padded, staggered prism grid.
///
/// Stations sit at cell centres a_i = (i - 1/2) dx, b_j = (j - 1/2) dy of the
/// unpadded footprint, on the surface z = 0. Prism columns extend the
/// footprint by `pxl`/`pxr` blocks in x and `pyl`/`pyr` blocks in y; padding
/// carries no stations. `z_blocks` holds the n_z + 1 layer interface depths
/// (positive down), so layers may have different thicknesses.
///
/// Obtain instances through make_grid() or scaled_problem(), which validate.
struct GridSpec {
  std::int64_t sx = 0;
  std::int64_t sy = 0;
  std::int64_t nz = 0;
  std::int64_t pxl = 0;
  std::int64_t pxr = 0;
  std::int64_t pyl = 0;
  std::int64_t pyr = 0;
  double dx = 0.0;
  double dy = 0.0;
  std::vector<double> z_blocks;

  std::int64_t nx() const noexcept { return sx + pxl + pxr; }
  std::int64_t ny() const noexcept { return sy + pyl + pyr; }
  /// Number of stations.
  std::int64_t m() const noexcept { return sx * sy; }
  /// Prisms per depth layer.
  std::int64_t nr() const noexcept { return nx() * ny(); }
  /// Total number of prisms.
  std::int64_t n() const noexcept { return nr() * nz; }

  bool padded() const noexcept { return pxl + pxr + pyl + pyr > 0; }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

GridSpec make_grid(std::int64_t sx, std::int64_t sy, std::int64_t nz, std::int64_t pxl,
                   std::int64_t pxr, std::int64_t pyl, std::int64_t pyr, double dx,
                   double dy, std::vector<double> z_blocks);

/// Throws ValidationError naming the first offending field.
void validate(const GridSpec& grid);

/// Round half away from zero, as used for the per-side padding counts.
std::int64_t round_half_away(double value);

/// Problem k of the scaling study: (s_x, s_y, n_z) = k (25, 15, 2) with
/// round(pad_fraction * s) prisms of padding on every side, unit spacings.
GridSpec scaled_problem(std::int64_t k, double pad_fraction);

enum class DistanceFlavor { sym, full };

/// Signed station-to-prism-edge distances shared by every depth layer.
///
/// `sym` tables hold distances from the first station only,
/// X_l = (l - 3/2) dx for l = 1 .. s_x + max(p_xL, p_xR) + 1.
/// `full` tables hold all station/edge pairs,
/// X_l = (l - N - 1/2) dx for l = 1 .. 2N with N = s_x + max(p_xL, p_xR).
/// Every entry is an odd multiple of half a spacing, so none is zero.
struct DistanceTables {
  DistanceFlavor flavor = DistanceFlavor::sym;
  std::vector<double> x;
  std::vector<double> y;
  Matrix<double> xy;  ///< xy(l, k) = x[l] * y[k]
  Matrix<double> r2;  ///< r2(l, k) = x[l]^2 + y[k]^2

  /// Signed prism offset of response row l (prism edges x[l], x[l+1]).
  std::int64_t x_offset_of_row(std::size_t l) const noexcept { return x_origin + std::int64_t(l); }
  std::int64_t y_offset_of_col(std::size_t k) const noexcept { return y_origin + std::int64_t(k); }

  /// Offset (prism block minus station block) of the first response row/column.
  std::int64_t x_origin = 0;
  std::int64_t y_origin = 0;
};

DistanceTables sym_distances(const GridSpec& grid);
DistanceTables full_distances(const GridSpec& grid);

/// Contiguous sub-table of `tables` starting at response row/column
/// (x_begin, y_begin) and spanning `x_rows` x `y_cols` responses.
DistanceTables window(const DistanceTables& tables, std::size_t x_begin, std::size_t x_rows,
                      std::size_t y_begin, std::size_t y_cols);

}  // namespace bttb
