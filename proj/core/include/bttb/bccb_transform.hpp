#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "bttb/fft.hpp"
#include "bttb/geometry.hpp"
#include "bttb/kernels.hpp"
#include "bttb/layer_response.hpp"
#include "bttb/matrix.hpp"

namespace bttb {

/// Per-layer 2-D transforms of the BCCB embedding of each G^(r).
///
/// Every matrix is (s_x + n_x - 1) x (s_y + n_y - 1), row index along x.
/// `forward[r]` is fft2(T^circ) of layer r; `transpose[r]` is the transform
/// of its transpose layout.
struct TransformStack {
  GridSpec grid;
  KernelKind kind = KernelKind::gravity;
  std::vector<Matrix<cplx>> forward;
  std::vector<Matrix<cplx>> transpose;

  std::size_t rows() const noexcept { return std::size_t(grid.sx + grid.nx() - 1); }
  std::size_t cols() const noexcept { return std::size_t(grid.sy + grid.ny() - 1); }
  /// Complex values held per direction: n_z * rows * cols.
  std::uint64_t element_count() const noexcept {
    return std::uint64_t(grid.nz) * rows() * cols();
  }
};

/// First column of the circulant extension of toeplitz(c, r): c followed by
/// r[1..] in reverse order. Requires c[0] == r[0].
std::vector<double> circulant_extension_column(std::span<const double> c,
                                               std::span<const double> r);

/// Keeps column 0 and reverses columns 1..end, then keeps row 0 and reverses
/// rows 1..end. Maps the defining array of a BCCB matrix to that of its
/// transpose.
Matrix<double> transpose_layout(const Matrix<double>& t);

/// Defining array T^circ of one layer. Columns are the circulant extension
/// columns of the blocks with y-offset -p_yL, ..., -(p_yL + s_y - 1), then
/// s_y + p_yR - 1 down to 1, then 0, ..., -(p_yL - 1).
Matrix<double> assemble_tcirc(const GridSpec& grid, const LayerResponse& response);

/// 2-D transform of a real array (unnormalized).
Matrix<cplx> fft2(const Matrix<double>& t);

TransformStack build_transform_stack(const GridSpec& grid, const KernelParams& params);

/// Binary little-endian persistence: "BTTB", u32 version, u8 kernel kind,
/// grid as i64 sx sy nz pxl pxr pyl pyr, f64 dx dy, f64 z_blocks[nz+1],
/// i64 layer count, rows, cols, then every forward layer followed by every
/// transpose layer as row-major interleaved (re, im) f64 pairs.
void save_stack(const TransformStack& stack, std::ostream& out);
TransformStack load_stack(std::istream& in);
void save_stack(const TransformStack& stack, const std::string& path);
TransformStack load_stack(const std::string& path);

inline constexpr std::uint32_t kStackFormatVersion = 1;

}  // namespace bttb
