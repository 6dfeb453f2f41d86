#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "bttb/geometry.hpp"
#include "bttb/kernels.hpp"
#include "bttb/matrix.hpp"

namespace bttb {

inline constexpr std::uint64_t kDefaultMemoryGuard = std::uint64_t{4} << 30;  // 4 GiB

/// Explicit sensitivity matrix G = [G^(1), ..., G^(n_z)], one m x n_r
/// matrix per depth layer. Row k = j s_x + i is station (i, j); column
/// l = q n_x + p is prism (p, q) of the padded layer.
struct DenseSensitivity {
  GridSpec grid;
  KernelKind kind = KernelKind::gravity;
  std::vector<Matrix<double>> layers;
};

/// Bytes needed to hold the dense matrix of `grid`.
std::uint64_t dense_bytes(const GridSpec& grid);

/// toeplitz(c, r): entry (i, p) is c[i - p] for i >= p and r[p - i] otherwise.
Matrix<double> toeplitz(std::span<const double> c, std::span<const double> r);

/// Builds every layer from its Toeplitz defining vectors, block row by block
/// row. Throws MemoryGuardError when dense_bytes(grid) exceeds `memory_guard`.
DenseSensitivity assemble_dense(const GridSpec& grid, const KernelParams& params,
                                std::uint64_t memory_guard = kDefaultMemoryGuard);

/// Forward: sum_r G^(r) x_r (|x| = n, result m). Transpose: stacked
/// (G^(r))^T x (|x| = m, result n).
std::vector<double> dense_apply(const DenseSensitivity& g, std::span<const double> x,
                                ApplyMode mode);

/// Writes layer `layer` as comma separated rows.
void write_layer_csv(const DenseSensitivity& g, std::size_t layer, std::ostream& out);

}  // namespace bttb
