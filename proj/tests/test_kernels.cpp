#include <doctest.h>

#include <cmath>
#include <numbers>
#include <tuple>

#include "bttb/error.hpp"
#include "bttb/kernels.hpp"
#include "support.hpp"

using namespace bttb;
using support::pair_tables;

namespace {

double response(double x0, double x1, double y0, double y1, double z1, double z2,
                const KernelParams& p) {
  return layer_response(z1, z2, pair_tables(x0, x1, y0, y1), p)(0, 0);
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("direction cosines") {
    CHECK(direction_cosines(0.0, 90.0) == std::array<double, 3>{0.0, 0.0, 1.0});
    CHECK(direction_cosines(0.0, 0.0) == std::array<double, 3>{1.0, 0.0, 0.0});
    const auto f = direction_cosines(30.0, 45.0);
    CHECK(f[0] == doctest::Approx(std::cos(std::numbers::pi / 4) * std::cos(std::numbers::pi / 6)));
    CHECK(f[1] == doctest::Approx(std::cos(std::numbers::pi / 4) * 0.5));
    CHECK(f[0] * f[0] + f[1] * f[1] + f[2] * f[2] == doctest::Approx(1.0));
  }

  TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(KernelParams::gravity(0.0), ValidationError);
    CHECK_THROWS_AS(KernelParams::gravity(-1.0), ValidationError);
    CHECK_THROWS_AS(magnetic_constants(0.0, 45.0, 0.0), ValidationError);
    CHECK_THROWS_AS(KernelParams::magnetic(0.0, 45.0, -5.0), ValidationError);
    const auto t = pair_tables(-0.5, 0.5, -0.5, 0.5);
    CHECK_THROWS_AS(layer_response(2.0, 1.0, t, KernelParams::gravity()), ValidationError);
    CHECK_THROWS_AS(layer_response(-1.0, 1.0, t, KernelParams::magnetic(0, 60, 5e4)),
                    ValidationError);
  }

  TEST_CASE("magnetic constants are deterministic and scale with F") {
    const auto a = magnetic_constants(12.0, 63.0, 48000.0);
    CHECK(a == KernelParams::magnetic(12.0, 63.0, 48000.0).gc);
    const auto b = magnetic_constants(12.0, 63.0, 96000.0);
    for (std::size_t i = 0; i < 5; ++i) CHECK(b[i] == 2.0 * a[i]);
  }

  TEST_CASE("unit cube against volume quadrature") {
    const double gamma = kGravitationalConstant;
    const double closed = response(-0.5, 0.5, -0.5, 0.5, 0.5, 1.5, KernelParams::gravity(gamma));
    const double quad = support::quadrature_gz(-0.5, 0.5, -0.5, 0.5, 0.5, 1.5, 200, gamma);
    CHECK(rel(closed, quad) < 5e-7);
    CHECK(closed > 0.0);
  }

  TEST_CASE("offset prism against volume quadrature") {
    const double closed = response(1.5, 2.5, -3.5, -2.5, 0.0, 2.0, KernelParams::gravity(1.0));
    const double quad = support::quadrature_gz(1.5, 2.5, -3.5, -2.5, 0.0, 2.0, 200, 1.0);
    CHECK(rel(closed, quad) < 5e-6);
  }

  TEST_CASE("gravity agrees with the eight-corner formula") {
    for (double x0 : {-3.5, -0.5, 0.5, 4.5})
      for (double y0 : {-2.5, -0.5, 1.5})
        for (auto [z1, z2] : {std::pair{0.0, 1.0}, std::pair{1.0, 2.5}, std::pair{3.0, 3.5}}) {
          const double got = response(x0, x0 + 1, y0, y0 + 1, z1, z2, KernelParams::gravity(1.0));
          const double want = support::nagy_gz(x0, x0 + 1, y0, y0 + 1, z1, z2, 1.0);
          CHECK(rel(got, want) < 1e-11);
        }
  }

  TEST_CASE("Bouguer slab") {
    const int s = 101;
    const double t = 0.1;
    DistanceTables tab;
    for (int l = 0; l <= s; ++l) {
      tab.x.push_back(double(l) - s / 2.0);
      tab.y.push_back(double(l) - s / 2.0);
    }
    tab.xy = Matrix<double>(tab.x.size(), tab.y.size());
    tab.r2 = Matrix<double>(tab.x.size(), tab.y.size());
    for (std::size_t a = 0; a < tab.x.size(); ++a)
      for (std::size_t b = 0; b < tab.y.size(); ++b) {
        tab.xy(a, b) = tab.x[a] * tab.y[b];
        tab.r2(a, b) = tab.x[a] * tab.x[a] + tab.y[b] * tab.y[b];
      }
    const Matrix<double> g = layer_response(0.0, t, tab, KernelParams::gravity(1.0));
    double sum = 0.0;
    for (double v : g.values()) sum += v;
    CHECK(rel(sum, 2.0 * std::numbers::pi * t) < 0.01);
  }

  TEST_CASE("far-field dipole") {
    const double h = 0.5;
    for (auto [D, I] : {std::pair{0.0, 90.0}, std::pair{12.0, 63.0}, std::pair{-20.0, 35.0}})
      for (auto [cx, cy, cz] : {std::tuple{22.0, 0.0, 3.0}, std::tuple{0.0, -25.0, 4.0},
                                std::tuple{15.0, 17.0, 20.0}}) {
        CAPTURE(D);
        CAPTURE(I);
        CAPTURE(cx);
        CAPTURE(cy);
        const KernelParams p = KernelParams::magnetic(D, I, 50000.0);
        const double got = response(cx - h, cx + h, cy - h, cy + h, cz - h, cz + h, p);
        const double want = support::dipole_total_field(cx, cy, cz, 1.0, D, I, 50000.0);
        CHECK(rel(got, want) < 0.01);
      }
  }

  TEST_CASE("vertical field is symmetric under x<->y") {
    const KernelParams p = KernelParams::magnetic(37.0, 90.0, 50000.0);
    for (auto [x0, y0] : {std::pair{-1.5, 0.5}, std::pair{2.5, -3.5}, std::pair{-0.5, -0.5}}) {
      const double a = response(x0, x0 + 1, y0, y0 + 1, 0.5, 2.0, p);
      const double b = response(y0, y0 + 1, x0, x0 + 1, 0.5, 2.0, p);
      CHECK(std::abs(a - b) <= 1e-13 * std::abs(a));
    }
  }

  TEST_CASE("gravity is even, magnetic is not") {
    const KernelParams g = KernelParams::gravity(1.0);
    const KernelParams m = KernelParams::magnetic(12.0, 63.0, 50000.0);
    for (auto [x0, y0] : {std::pair{0.5, 1.5}, std::pair{1.5, -2.5}, std::pair{-0.5, 0.5}}) {
      const double base = response(x0, x0 + 1, y0, y0 + 1, 0.0, 1.0, g);
      const double fx = response(-x0 - 1, -x0, y0, y0 + 1, 0.0, 1.0, g);
      const double fy = response(x0, x0 + 1, -y0 - 1, -y0, 0.0, 1.0, g);
      CHECK(std::abs(fx - base) <= 1e-14 * std::abs(base));
      CHECK(std::abs(fy - base) <= 1e-14 * std::abs(base));
    }
    for (double x0 : {-40.5, -7.5, -1.5, -0.5, 3.5, 100.5})
      for (double y0 : {-12.5, -0.5, 0.5, 9.5})
        for (double z1 : {0.0, 2.0}) {
          const double base = response(x0, x0 + 1, y0, y0 + 3, z1, z1 + 1.5, g);
          CHECK(response(-x0 - 1, -x0, y0, y0 + 3, z1, z1 + 1.5, g) == base);
          CHECK(response(x0, x0 + 1, -y0 - 3, -y0, z1, z1 + 1.5, g) == base);
        }
    const double base = response(1.5, 2.5, 0.5, 1.5, 0.0, 1.0, m);
    const double fx = response(-2.5, -1.5, 0.5, 1.5, 0.0, 1.0, m);
    const double fy = response(1.5, 2.5, -1.5, -0.5, 0.0, 1.0, m);
    CHECK(std::abs(fx - base) > 1e-3 * std::abs(base));
    CHECK(std::abs(fy - base) > 1e-3 * std::abs(base));
  }

  TEST_CASE("zero thickness is exactly +0") {
    const GridSpec grid = make_grid(4, 3, 1, 2, 1, 0, 1, 1.0, 1.0, {0.0, 1.0});
    for (const DistanceTables& t : {sym_distances(grid), full_distances(grid)})
      for (const KernelParams& p :
           {KernelParams::gravity(), KernelParams::magnetic(12.0, 63.0, 50000.0)})
        for (double z : {0.0, 0.7, 3.0}) {
          const Matrix<double> r = layer_response(z, z, t, p);
          for (double v : r.values()) {
            CHECK(v == 0.0);
            CHECK_FALSE(std::signbit(v));
          }
        }
  }

  TEST_CASE("finite for extreme depths") {
    const GridSpec grid = scaled_problem(1, 0.05);
    const double depths[] = {0.0, 1e-3, 0.5, 1.0, 1e3, 1e6};
    for (const DistanceTables& t : {sym_distances(grid), full_distances(grid)})
      for (const KernelParams& p :
           {KernelParams::gravity(), KernelParams::magnetic(-8.0, 71.0, 50000.0),
            KernelParams::magnetic(0.0, 0.0, 50000.0), KernelParams::magnetic(0.0, 90.0, 50000.0)})
        for (std::size_t a = 0; a < std::size(depths); ++a)
          for (std::size_t b = a + 1; b < std::size(depths); ++b) {
            bool finite = true;
            const Matrix<double> r = layer_response(depths[a], depths[b], t, p);
            for (double v : r.values()) finite = finite && std::isfinite(v);
            CHECK(finite);
          }
  }

  TEST_CASE("linearity in the physical constant") {
    const GridSpec grid = make_grid(3, 4, 1, 1, 0, 2, 1, 1.0, 0.5, {0.5, 1.5});
    const DistanceTables t = full_distances(grid);
    const Matrix<double> g1 = layer_response(0.5, 1.5, t, KernelParams::gravity(3e-11));
    const Matrix<double> g2 = layer_response(0.5, 1.5, t, KernelParams::gravity(6e-11));
    const Matrix<double> m1 = layer_response(0.5, 1.5, t, KernelParams::magnetic(5, 40, 3e4));
    const Matrix<double> m2 = layer_response(0.5, 1.5, t, KernelParams::magnetic(5, 40, 6e4));
    for (std::size_t i = 0; i < g1.size(); ++i) {
      CHECK(g2.data()[i] == 2.0 * g1.data()[i]);
      CHECK(m2.data()[i] == 2.0 * m1.data()[i]);
    }
  }

  TEST_CASE("output scale") {
    const auto t = pair_tables(-0.5, 0.5, -0.5, 0.5);
    const double si = layer_response(0.5, 1.5, t, KernelParams::gravity())(0, 0);
    const double mgal = layer_response(0.5, 1.5, t, KernelParams::gravity(kGravitationalConstant, 1e5))(0, 0);
    CHECK(mgal == doctest::Approx(1e5 * si).epsilon(1e-15));
  }

  TEST_CASE("evaluation counter") {
    const GridSpec grid = make_grid(3, 2, 1, 0, 0, 0, 0, 1.0, 1.0, {0.0, 1.0});
    const DistanceTables t = sym_distances(grid);
    reset_kernel_evaluations();
    const Matrix<double> r = layer_response(0.0, 1.0, t, KernelParams::gravity());
    CHECK(kernel_evaluations() == r.size());
  }
}
