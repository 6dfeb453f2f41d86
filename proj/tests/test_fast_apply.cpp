#include <doctest.h>

#include <cmath>
#include <limits>

#include "bttb/bccb_transform.hpp"
#include "bttb/dense_assembly.hpp"
#include "bttb/error.hpp"
#include "bttb/fast_apply.hpp"
#include "support.hpp"

using namespace bttb;

namespace {

struct Pads {
  std::int64_t xl, xr, yl, yr;
};

const Pads kPads[] = {{0, 0, 0, 0}, {1, 1, 1, 1}, {2, 1, 1, 2}, {3, 0, 0, 2}};

KernelParams kernel(KernelKind kind) {
  return kind == KernelKind::gravity ? KernelParams::gravity(kGravitationalConstant, 1e5)
                                     : KernelParams::magnetic(12.0, 63.0, 48000.0);
}

GridSpec grid_652(const Pads& p) {
  return make_grid(6, 5, 2, p.xl, p.xr, p.yl, p.yr, 1.0, 1.0, {0.0, 1.0, 2.5});
}

}  // namespace

TEST_SUITE("fast_apply") {
  TEST_CASE("zero input gives exact zero") {
    const GridSpec g = grid_652(kPads[2]);
    for (KernelKind kind : {KernelKind::gravity, KernelKind::magnetic}) {
      const TransformStack s = build_transform_stack(g, kernel(kind));
      for (double v : apply(s, std::vector<double>(std::size_t(g.n()), 0.0), ApplyMode::forward))
        CHECK(v == 0.0);
      for (double v : apply(s, std::vector<double>(std::size_t(g.m()), 0.0), ApplyMode::transpose))
        CHECK(v == 0.0);
    }
  }

  TEST_CASE("unit vectors reproduce dense columns") {
    const GridSpec g = grid_652(kPads[3]);
    for (KernelKind kind : {KernelKind::gravity, KernelKind::magnetic}) {
      const KernelParams params = kernel(kind);
      const DenseSensitivity dense = assemble_dense(g, params);
      const TransformStack s = build_transform_stack(g, params);
      for (std::int64_t col : {std::int64_t{0}, g.nr() - 1, g.nr() + 7, g.n() - 1}) {
        std::vector<double> e(std::size_t(g.n()), 0.0);
        e[std::size_t(col)] = 1.0;
        const auto got = apply(s, e, ApplyMode::forward);
        const std::size_t r = std::size_t(col / g.nr()), l = std::size_t(col % g.nr());
        std::vector<double> want(std::size_t(g.m()));
        for (std::size_t k = 0; k < want.size(); ++k) want[k] = dense.layers[r](k, l);
        CAPTURE(std::string(to_string(kind)));
        CAPTURE(col);
        CHECK(relative_error(want, got) <= 1e-12);
      }
    }
  }

  TEST_CASE("padded configurations match the brute-force oracle") {
    for (const Pads& p : kPads)
      for (KernelKind kind : {KernelKind::gravity, KernelKind::magnetic}) {
        CAPTURE(p.xl);
        CAPTURE(p.xr);
        CAPTURE(p.yl);
        CAPTURE(p.yr);
        CAPTURE(std::string(to_string(kind)));
        const GridSpec g = grid_652(p);
        const KernelParams params = kernel(kind);
        const auto oracle = support::direct_dense(g, params);
        const TransformStack s = build_transform_stack(g, params);
        const double tol = kind == KernelKind::gravity ? 1e-13 : 1e-12;
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
          const auto u = support::random_vector(std::size_t(g.n()), 100 + seed);
          const auto v = support::random_vector(std::size_t(g.m()), 200 + seed);
          std::vector<double> fwd(std::size_t(g.m()), 0.0), tr(std::size_t(g.n()), 0.0);
          for (std::size_t r = 0; r < oracle.size(); ++r)
            for (std::size_t k = 0; k < std::size_t(g.m()); ++k)
              for (std::size_t l = 0; l < std::size_t(g.nr()); ++l) {
                fwd[k] += oracle[r](k, l) * u[r * std::size_t(g.nr()) + l];
                tr[r * std::size_t(g.nr()) + l] += oracle[r](k, l) * v[k];
              }
          ApplyStats stats;
          CHECK(relative_error(fwd, apply(s, u, ApplyMode::forward, &stats)) <= tol);
          CHECK(stats.imaginary_residue <= 1e-10);
          CHECK(relative_error(tr, apply(s, v, ApplyMode::transpose, &stats)) <= tol);
          CHECK(stats.imaginary_residue <= 1e-10);
        }
      }
  }

  TEST_CASE("adjoint identity and linearity") {
    for (const Pads& p : kPads)
      for (KernelKind kind : {KernelKind::gravity, KernelKind::magnetic}) {
        const GridSpec g = grid_652(p);
        const TransformStack s = build_transform_stack(g, kernel(kind));
        const auto u = support::random_vector(std::size_t(g.n()), 7);
        const auto w = support::random_vector(std::size_t(g.n()), 8);
        const auto v = support::random_vector(std::size_t(g.m()), 9);
        const auto gu = apply(s, u, ApplyMode::forward);
        const auto gtv = apply(s, v, ApplyMode::transpose);
        const double gap = std::abs(support::dot(gu, v) - support::dot(u, gtv));
        CHECK(gap <= 1e-10 * support::norm(u) * support::norm(v) *
                         std::sqrt(double(g.m()) * double(g.n())));
        CHECK(gap <= 1e-13 * support::norm(gu) * support::norm(v));

        const double alpha = 2.5, beta = -0.75;
        std::vector<double> mix(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) mix[i] = alpha * u[i] + beta * w[i];
        const auto gw = apply(s, w, ApplyMode::forward);
        std::vector<double> want(gu.size());
        for (std::size_t i = 0; i < gu.size(); ++i) want[i] = alpha * gu[i] + beta * gw[i];
        CHECK(relative_error(want, apply(s, mix, ApplyMode::forward)) <= 1e-12);
      }
  }

  TEST_CASE("dimension mismatch throws") {
    const GridSpec g = grid_652(kPads[1]);
    const TransformStack s = build_transform_stack(g, kernel(KernelKind::gravity));
    CHECK_THROWS_AS(apply(s, std::vector<double>(std::size_t(g.m()), 1.0), ApplyMode::forward),
                    DimensionError);
    CHECK_THROWS_AS(apply(s, std::vector<double>(std::size_t(g.n()), 1.0), ApplyMode::transpose),
                    DimensionError);
  }

  TEST_CASE("relative_error") {
    const std::vector<double> a{3.0, 4.0}, z{0.0, 0.0};
    CHECK(relative_error(a, a) == 0.0);
    CHECK(relative_error(a, z) == 1.0);
    CHECK(relative_error(z, z) == 0.0);
    CHECK(relative_error(z, a) == std::numeric_limits<double>::infinity());
    CHECK(relative_error(std::vector<double>{1.0, 0.0}, std::vector<double>{1.0, 1e-13}) ==
          doctest::Approx(1e-13).epsilon(1e-12));
    CHECK_THROWS_AS(relative_error(a, std::vector<double>{1.0}), DimensionError);
  }
}
