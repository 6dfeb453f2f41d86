#include "bttb/layer_response.hpp"

#include <cstdlib>

#include "bttb/error.hpp"

namespace bttb {

LayerTables prepare_tables(const GridSpec& grid, KernelKind kind) {
  validate(grid);
  LayerTables lt;
  lt.kind = kind;
  if (kind == KernelKind::gravity) {
    lt.tables = sym_distances(grid);
    return lt;
  }
  const DistanceTables full = full_distances(grid);
  const std::int64_t x_first = -(grid.sx + grid.pxl - 1);
  const std::int64_t y_first = -(grid.sy + grid.pyl - 1);
  lt.tables = window(full, std::size_t(x_first - full.x_origin), std::size_t(grid.sx + grid.nx() - 1),
                     std::size_t(y_first - full.y_origin), std::size_t(grid.sy + grid.ny() - 1));
  return lt;
}

LayerResponse LayerResponse::evaluate(const GridSpec& grid, const KernelParams& params,
                                      const LayerTables& tables, std::size_t layer) {
  if (tables.kind != params.kind)
    throw std::invalid_argument("distance tables were prepared for another kernel");
  if (layer >= static_cast<std::size_t>(grid.nz)) throw DimensionError("layer index out of range");
  LayerResponse lr;
  lr.sx_ = grid.sx;
  lr.sy_ = grid.sy;
  lr.pxl_ = grid.pxl;
  lr.pxr_ = grid.pxr;
  lr.pyl_ = grid.pyl;
  lr.pyr_ = grid.pyr;
  lr.kind_ = params.kind;
  lr.x_origin_ = tables.tables.x_origin;
  lr.y_origin_ = tables.tables.y_origin;
  lr.values_ =
      layer_response(grid.z_blocks[layer], grid.z_blocks[layer + 1], tables.tables, params);
  return lr;
}

double LayerResponse::at(std::int64_t dx, std::int64_t dy) const noexcept {
  if (kind_ == KernelKind::gravity) {
    dx = std::abs(dx);
    dy = std::abs(dy);
  }
  return values_(std::size_t(dx - x_origin_), std::size_t(dy - y_origin_));
}

ToeplitzPair LayerResponse::defining_vectors(std::int64_t dy) const {
  const std::int64_t nx = sx_ + pxl_ + pxr_;
  ToeplitzPair tp;
  tp.c.resize(std::size_t(sx_));
  tp.r.resize(std::size_t(nx));
  for (std::int64_t i = 0; i < sx_; ++i) tp.c[std::size_t(i)] = at(-pxl_ - i, dy);
  for (std::int64_t p = 0; p < nx; ++p) tp.r[std::size_t(p)] = at(p - pxl_, dy);
  return tp;
}

}  // namespace bttb
