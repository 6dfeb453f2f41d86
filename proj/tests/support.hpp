#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "bttb/dense_assembly.hpp"
#include "bttb/geometry.hpp"
#include "bttb/kernels.hpp"
#include "bttb/matrix.hpp"

namespace support {

inline std::vector<double> random_vector(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> v(n);
  for (double& x : v) x = dist(gen);
  return v;
}

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

// Distance tables for a single station/prism pair, built from coordinates.
inline bttb::DistanceTables pair_tables(double x0, double x1, double y0, double y1) {
  bttb::DistanceTables t;
  t.flavor = bttb::DistanceFlavor::full;
  t.x = {x0, x1};
  t.y = {y0, y1};
  t.xy = bttb::Matrix<double>(2, 2);
  t.r2 = bttb::Matrix<double>(2, 2);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      t.xy(a, b) = t.x[a] * t.y[b];
      t.r2(a, b) = t.x[a] * t.x[a] + t.y[b] * t.y[b];
    }
  return t;
}

// Entry (k, l) of layer r, evaluated from station and prism coordinates.
inline double direct_entry(const bttb::GridSpec& g, const bttb::KernelParams& params,
                           std::size_t r, std::int64_t k, std::int64_t l) {
  const std::int64_t i = k % g.sx, j = k / g.sx;
  const std::int64_t p = l % g.nx(), q = l / g.nx();
  const double ax = (double(i) + 0.5) * g.dx, by = (double(j) + 0.5) * g.dy;
  const double x0 = double(p - g.pxl) * g.dx - ax, x1 = double(p - g.pxl + 1) * g.dx - ax;
  const double y0 = double(q - g.pyl) * g.dy - by, y1 = double(q - g.pyl + 1) * g.dy - by;
  const auto t = pair_tables(x0, x1, y0, y1);
  return bttb::layer_response(g.z_blocks[r], g.z_blocks[r + 1], t, params)(0, 0);
}

inline std::vector<bttb::Matrix<double>> direct_dense(const bttb::GridSpec& g,
                                                      const bttb::KernelParams& params) {
  std::vector<bttb::Matrix<double>> layers;
  for (std::size_t r = 0; r < std::size_t(g.nz); ++r) {
    bttb::Matrix<double> m(std::size_t(g.m()), std::size_t(g.nr()));
    for (std::int64_t k = 0; k < g.m(); ++k)
      for (std::int64_t l = 0; l < g.nr(); ++l)
        m(std::size_t(k), std::size_t(l)) = direct_entry(g, params, r, k, l);
    layers.push_back(std::move(m));
  }
  return layers;
}

// Classical eight-corner prism formula for the vertical attraction (z down),
// evaluated at the origin for unit density.
inline double nagy_gz(double x0, double x1, double y0, double y1, double z0, double z1,
                      double gamma) {
  const double xs[2] = {x0, x1}, ys[2] = {y0, y1}, zs[2] = {z0, z1};
  double sum = 0.0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        const double x = xs[a], y = ys[b], z = zs[c];
        const double r = std::sqrt(x * x + y * y + z * z);
        const double sign = ((a + b + c) % 2 == 0) ? 1.0 : -1.0;
        double term = x * std::log(y + r) + y * std::log(x + r);
        if (z != 0.0) term -= z * std::atan(x * y / (z * r));
        sum += sign * term;
      }
  return gamma * sum;
}

// Midpoint rule for gamma * integral (z / r^3) over a box, station at origin.
inline double quadrature_gz(double x0, double x1, double y0, double y1, double z0, double z1,
                            int cells, double gamma) {
  const double hx = (x1 - x0) / cells, hy = (y1 - y0) / cells, hz = (z1 - z0) / cells;
  double sum = 0.0;
  for (int a = 0; a < cells; ++a) {
    const double x = x0 + (a + 0.5) * hx;
    for (int b = 0; b < cells; ++b) {
      const double y = y0 + (b + 0.5) * hy;
      const double xy2 = x * x + y * y;
      for (int c = 0; c < cells; ++c) {
        const double z = z0 + (c + 0.5) * hz;
        const double r2 = xy2 + z * z;
        sum += z / (r2 * std::sqrt(r2));
      }
    }
  }
  return gamma * sum * hx * hy * hz;
}

// Total-field anomaly (nT per unit susceptibility) of the dipole induced in
// volume `vol` at (x, y, z) relative to a station at the origin.
inline double dipole_total_field(double x, double y, double z, double vol, double D, double I,
                                 double F) {
  const auto f = bttb::direction_cosines(D, I);
  const double r = std::sqrt(x * x + y * y + z * z);
  const double fr = (f[0] * x + f[1] * y + f[2] * z) / r;
  return F * vol / (4.0 * std::numbers::pi) * (3.0 * fr * fr - 1.0) / (r * r * r);
}

// Explicit BCCB matrix defined by its first-column array T (rows along x):
// entry (a + b R, c + d R) is T((a - c) mod R, (b - d) mod C).
inline bttb::Matrix<double> bccb(const bttb::Matrix<double>& t) {
  const std::size_t R = t.rows(), C = t.cols();
  bttb::Matrix<double> out(R * C, R * C);
  for (std::size_t b = 0; b < C; ++b)
    for (std::size_t a = 0; a < R; ++a)
      for (std::size_t d = 0; d < C; ++d)
        for (std::size_t c = 0; c < R; ++c)
          out(a + b * R, c + d * R) = t((a + R - c) % R, (b + C - d) % C);
  return out;
}

inline bttb::Matrix<double> random_matrix(std::size_t rows, std::size_t cols,
                                          std::uint64_t seed) {
  const auto v = random_vector(rows * cols, seed);
  bttb::Matrix<double> m(rows, cols);
  for (std::size_t i = 0; i < v.size(); ++i) m.data()[i] = v[i];
  return m;
}

inline std::vector<double> layers_z(std::int64_t nz, double dz = 1.0, double top = 0.0) {
  std::vector<double> z(std::size_t(nz) + 1);
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = top + dz * double(i);
  return z;
}

}  // namespace support
