#include "bttb/kernels.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <string>

#include "bttb/error.hpp"

namespace bttb {

namespace {

std::atomic<std::uint64_t> g_evaluations{0};

void check_depths(double z1, double z2) {
  if (!(z1 >= 0.0)) throw ValidationError("z1", "depth must be >= 0");
  if (!(z2 >= z1)) throw ValidationError("z2", "bottom depth must not be above the top depth");
}

void check_finite(const Matrix<double>& g, const char* kernel) {
  for (double v : g.values())
    if (!std::isfinite(v))
      throw std::logic_error(std::string(kernel) + " response produced a non-finite value");
}

constexpr double deg2rad(double deg) { return deg * std::numbers::pi / 180.0; }

}  // namespace

KernelParams KernelParams::gravity(double gamma, double scale) {
  if (!(gamma > 0.0)) throw ValidationError("gamma", "gravitational constant must be > 0");
  KernelParams p;
  p.kind = KernelKind::gravity;
  p.gamma = gamma;
  p.scale = scale;
  return p;
}

KernelParams KernelParams::magnetic(double declination, double inclination, double intensity,
                                    double scale) {
  KernelParams p;
  p.kind = KernelKind::magnetic;
  p.declination = declination;
  p.inclination = inclination;
  p.intensity = intensity;
  p.scale = scale;
  p.gc = magnetic_constants(declination, inclination, intensity);
  return p;
}

std::array<double, 3> direction_cosines(double declination, double inclination) {
  const double d = deg2rad(declination);
  const double i = deg2rad(inclination);
  // Round-off at the cardinal angles is flushed to exact zero.
  auto clean = [](double v) { return std::abs(v) < 1e-15 ? 0.0 : v; };
  return {clean(std::cos(i) * std::cos(d)), clean(std::cos(i) * std::sin(d)),
          clean(std::sin(i))};
}

std::array<double, 5> magnetic_constants(double declination, double inclination,
                                         double intensity) {
  if (!(intensity > 0.0)) throw ValidationError("F", "field intensity must be > 0");
  const auto [l, m, n] = direction_cosines(declination, inclination);
  const double h = intensity / (4.0 * std::numbers::pi);
  return {h * (2.0 * m * n), h * (2.0 * l * n), h * (2.0 * l * m), h * (n * n - m * m),
          h * (n * n - l * l)};
}

namespace {

// a + rho where rho = sqrt(a^2 + rest), taken as rest / (rho - a) for a < 0.
inline double plus_rho(double a, double rho, double rest) noexcept {
  return a >= 0.0 ? a + rho : rest / (rho - a);
}

}  // namespace

Matrix<double> gravity_layer_response(double z1, double z2, const DistanceTables& t,
                                      const KernelParams& params) {
  check_depths(z1, z2);
  const std::size_t nx = t.x.size();
  const std::size_t ny = t.y.size();
  if (nx < 2 || ny < 2 || t.r2.rows() != nx || t.r2.cols() != ny || t.xy.rows() != nx ||
      t.xy.cols() != ny)
    throw DimensionError("gravity_layer_response: inconsistent distance tables");

  // With a, b >= 0 and L(u) = ln((u^2 + z1^2) / (u^2 + z2^2)):
  //   CM(-a, b) = -CM(a, b) - b L(b),  CM(a, -b) = -CM(a, b) - a L(a).
  // Corners are evaluated as sign(X) sign(Y) CM(|X|, |Y|); the L terms
  // survive the differencing only for prisms that straddle X = 0 or Y = 0.
  const double z1s = z1 * z1;
  const double z2s = z2 * z2;
  auto ell = [&](double u) { return u * std::log((u * u + z1s) / (u * u + z2s)); };
  Matrix<double> cm(nx, ny);
  for (std::size_t l = 0; l < nx; ++l) {
    const double x = std::abs(t.x[l]);
    for (std::size_t k = 0; k < ny; ++k) {
      const double y = std::abs(t.y[k]);
      const double xy = std::abs(t.xy(l, k));
      const double r1 = std::sqrt(t.r2(l, k) + z1s);
      const double r2 = std::sqrt(t.r2(l, k) + z2s);
      const double cmx = std::log((x + r1) / (x + r2)) * y;
      const double cmy = std::log((y + r1) / (y + r2)) * x;
      const double cm5z = std::atan2(xy, r1 * z1) * z1;
      const double cm6z = std::atan2(xy, r2 * z2) * z2;
      const double v = (cm5z - cm6z) - cmy - cmx;
      cm(l, k) = (t.x[l] < 0.0) != (t.y[k] < 0.0) ? -v : v;
    }
  }

  const double c = -params.gamma * params.scale;
  Matrix<double> g(nx - 1, ny - 1);
  for (std::size_t p = 0; p + 1 < nx; ++p) {
    const bool straddle_x = (t.x[p] < 0.0) != (t.x[p + 1] < 0.0);
    for (std::size_t q = 0; q + 1 < ny; ++q) {
      const bool straddle_y = (t.y[q] < 0.0) != (t.y[q + 1] < 0.0);
      const double upper = cm(p + 1, q + 1) - cm(p, q + 1);
      const double lower = cm(p + 1, q) - cm(p, q);
      double sum = upper - lower;
      if (straddle_x) sum += ell(t.y[q + 1]) - ell(t.y[q]);
      if (straddle_y) sum += ell(t.x[p + 1]) - ell(t.x[p]);
      g(p, q) = c * sum + 0.0;
    }
  }

  g_evaluations.fetch_add(g.size(), std::memory_order_relaxed);
  check_finite(g, "gravity");
  return g;
}

Matrix<double> magnetic_response(double z1, double z2, std::span<const double> x,
                                 std::span<const double> y, const Matrix<double>& r2,
                                 const std::array<double, 5>& gc) {
  check_depths(z1, z2);
  const std::size_t nx = x.size();
  const std::size_t ny = y.size();
  if (nx < 2 || ny < 2 || r2.rows() != nx || r2.cols() != ny)
    throw DimensionError("magnetic_response: inconsistent distance tables");

  // Corner-grid quantities, each shared by up to four prisms. The q* arrays
  // hold the per-corner ratios of F1..F3; the a* arrays hold the per-corner
  // arctangent differences (bottom minus top) of F4 and F5.
  const double z1s = z1 * z1;
  const double z2s = z2 * z2;
  Matrix<double> q1(nx, ny), q2(nx, ny), q3(nx, ny), a4(nx, ny), a5(nx, ny);
  for (std::size_t l = 0; l < nx; ++l) {
    const double xl = x[l];
    const double xs = xl * xl;
    for (std::size_t k = 0; k < ny; ++k) {
      const double yk = y[k];
      const double ys = yk * yk;
      const double rho1 = std::sqrt(r2(l, k) + z1s);
      const double rho2 = std::sqrt(r2(l, k) + z2s);
      q1(l, k) = plus_rho(xl, rho2, ys + z2s) / plus_rho(xl, rho1, ys + z1s);
      q2(l, k) = plus_rho(yk, rho2, xs + z2s) / plus_rho(yk, rho1, xs + z1s);
      q3(l, k) = (rho2 + z2) / (rho1 + z1);
      a4(l, k) = std::atan2(xl * z2, rho2 * yk) - std::atan2(xl * z1, rho1 * yk);
      a5(l, k) = std::atan2(yk * z2, rho2 * xl) - std::atan2(yk * z1, rho1 * xl);
    }
  }

  Matrix<double> g(nx - 1, ny - 1);
  for (std::size_t p = 0; p + 1 < nx; ++p) {
    for (std::size_t q = 0; q + 1 < ny; ++q) {
      auto ratio = [&](const Matrix<double>& r) {
        return (r(p, q) * r(p + 1, q + 1)) / (r(p + 1, q) * r(p, q + 1));
      };
      auto alternate = [&](const Matrix<double>& a) {
        return (a(p + 1, q + 1) - a(p, q + 1)) - (a(p + 1, q) - a(p, q));
      };
      const double f1 = ratio(q1);
      const double f2 = ratio(q2);
      const double f3 = ratio(q3);
      const double f4 = alternate(a4);
      const double f5 = alternate(a5);
      g(p, q) = gc[0] * std::log(f1) + gc[1] * std::log(f2) + gc[2] * std::log(f3) +
                gc[3] * f4 + gc[4] * f5 + 0.0;
    }
  }

  g_evaluations.fetch_add(g.size(), std::memory_order_relaxed);
  check_finite(g, "magnetic");
  return g;
}

Matrix<double> layer_response(double z1, double z2, const DistanceTables& tables,
                              const KernelParams& params) {
  if (params.kind == KernelKind::gravity) return gravity_layer_response(z1, z2, tables, params);
  std::array<double, 5> gc = params.gc;
  if (params.scale != 1.0)
    for (double& v : gc) v *= params.scale;
  return magnetic_response(z1, z2, tables.x, tables.y, tables.r2, gc);
}

std::uint64_t kernel_evaluations() noexcept {
  return g_evaluations.load(std::memory_order_relaxed);
}

void reset_kernel_evaluations() noexcept { g_evaluations.store(0, std::memory_order_relaxed); }

}  // namespace bttb
