#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "bttb/geometry.hpp"
#include "bttb/matrix.hpp"

namespace bttb {

inline constexpr double kGravitationalConstant = 6.67430e-11;  // m^3 kg^-1 s^-2

/// Kernel selection and physical constants.
///
/// Gravity responses are vertical attraction per unit density; magnetic
/// responses are total-field anomaly in nT per unit susceptibility under
/// induced magnetization parallel to the geomagnetic field (x north, y east,
/// z down). `scale` multiplies every response (1e5 turns m/s^2 into mGal).
struct KernelParams {
  KernelKind kind = KernelKind::gravity;
  double gamma = kGravitationalConstant;
  double declination = 0.0;  // degrees
  double inclination = 0.0;  // degrees
  double intensity = 0.0;    // nT
  double scale = 1.0;
  std::array<double, 5> gc{};  // magnetic only, derived from (D, I, F)

  static KernelParams gravity(double gamma = kGravitationalConstant, double scale = 1.0);
  static KernelParams magnetic(double declination, double inclination, double intensity,
                               double scale = 1.0);
};

/// (l, m, n) = (cos I cos D, cos I sin D, sin I) for angles in degrees.
std::array<double, 3> direction_cosines(double declination, double inclination);

/// The five constants g_i = (F / 4 pi) G_i of the prism total-field formula
/// for induced magnetization:
///   G1 = 2 m n, G2 = 2 l n, G3 = 2 l m, G4 = n^2 - m^2, G5 = n^2 - l^2.
std::array<double, 5> magnetic_constants(double declination, double inclination,
                                         double intensity);

/// Vertical gravity of every prism spanned by consecutive distance entries.
///
/// Entry (p, q) is the response of the prism with x-edges x[p], x[p+1],
/// y-edges y[q], y[q+1] and depths [z1, z2] at the origin, evaluated through
/// the log-ratio form CM = (z1 atan2(XY, R1 z1) - z2 atan2(XY, R2 z2))
///   - X ln((Y + R1)/(Y + R2)) - Y ln((X + R1)/(X + R2))
/// differenced over the four corners. Result is (len x - 1) x (len y - 1).
Matrix<double> gravity_layer_response(double z1, double z2, const DistanceTables& tables,
                                      const KernelParams& params);

/// Total-field magnetic response g1 ln F1 + g2 ln F2 + g3 ln F3 + g4 F4 + g5 F5,
/// same layout as gravity_layer_response.
Matrix<double> magnetic_response(double z1, double z2, std::span<const double> x,
                                 std::span<const double> y, const Matrix<double>& r2,
                                 const std::array<double, 5>& gc);

/// Dispatch on params.kind; applies params.scale.
Matrix<double> layer_response(double z1, double z2, const DistanceTables& tables,
                              const KernelParams& params);

/// Number of response entries computed since the last reset (all threads).
std::uint64_t kernel_evaluations() noexcept;
void reset_kernel_evaluations() noexcept;

}  // namespace bttb
