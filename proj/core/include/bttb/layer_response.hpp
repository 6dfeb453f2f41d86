#pragma once

#include <cstdint>
#include <vector>

#include "bttb/geometry.hpp"
#include "bttb/kernels.hpp"

namespace bttb {

/// Distance tables prepared once per grid and shared by all layers.
///
/// Gravity uses the first-station (sym) tables and relies on the kernel's
/// evenness in x and y. Magnetic uses the window of the full tables that
/// covers exactly the offsets a real station can see.
struct LayerTables {
  KernelKind kind = KernelKind::gravity;
  DistanceTables tables;
};

LayerTables prepare_tables(const GridSpec& grid, KernelKind kind);

/// Defining vectors of the s_x x n_x Toeplitz block at y-offset dy:
/// the block is toeplitz(c, r) with c[0] == r[0].
struct ToeplitzPair {
  std::vector<double> c;  // length s_x
  std::vector<double> r;  // length n_x
};

/// Kernel response of one depth layer, addressed by the signed offset
/// (prism block - station block) in x and y.
///
/// Station i (0-based, real) sits over padded block i + p_xL, so entry
/// (k, l) of the layer matrix is at(p - p_xL - i, q - p_yL - j) with
/// k = j s_x + i and l = q n_x + p.
class LayerResponse {
 public:
  static LayerResponse evaluate(const GridSpec& grid, const KernelParams& params,
                                const LayerTables& tables, std::size_t layer);

  double at(std::int64_t dx, std::int64_t dy) const noexcept;

  /// c_q / r_q (or c-bar_j / r-bar_j) of the block whose y-offset is dy.
  ToeplitzPair defining_vectors(std::int64_t dy) const;

  std::int64_t min_dx() const noexcept { return -(sx_ + pxl_ - 1); }
  std::int64_t max_dx() const noexcept { return sx_ + pxr_ - 1; }
  std::int64_t min_dy() const noexcept { return -(sy_ + pyl_ - 1); }
  std::int64_t max_dy() const noexcept { return sy_ + pyr_ - 1; }

  const Matrix<double>& raw() const noexcept { return values_; }

 private:
  std::int64_t sx_ = 0, sy_ = 0, pxl_ = 0, pxr_ = 0, pyl_ = 0, pyr_ = 0;
  KernelKind kind_ = KernelKind::gravity;
  std::int64_t x_origin_ = 0;
  std::int64_t y_origin_ = 0;
  Matrix<double> values_;
};

}  // namespace bttb
