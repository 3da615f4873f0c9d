#pragma once

#include <Eigen/Dense>
#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

#include "trapforge/constants.hpp"

// Analytic unit-voltage potentials of planar electrodes in the gapless
// plane approximation (electrode plane y=0, field region y>0, trap axis z).

namespace trapforge {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

// Strip electrode, infinitely long along z.
struct StripElectrode {
  double x_lo = 0.0;
  double x_hi = 0.0;
  StripElectrode() = default;
  StripElectrode(double lo, double hi) : x_lo(lo), x_hi(hi) {
    if (!(lo < hi)) throw std::invalid_argument("StripElectrode: x_lo < x_hi required");
  }
};

// Finite rectangular electrode.
struct RectPatch {
  double x_lo = 0.0, x_hi = 0.0;
  double z_lo = 0.0, z_hi = 0.0;
  RectPatch() = default;
  RectPatch(double xl, double xh, double zl, double zh)
      : x_lo(xl), x_hi(hh_check(xl, xh)), z_lo(zl), z_hi(zh) {
    if (!(zl < zh)) throw std::invalid_argument("RectPatch: z_lo < z_hi required");
  }
 private:
  static double hh_check(double xl, double xh) {
    if (!(xl < xh)) throw std::invalid_argument("RectPatch: x_lo < x_hi required");
    return xh;
  }
};

struct RfDrive {
  double v_rf = 0.0;      // peak volts
  double omega_rf = 0.0;  // rad/s
  RfDrive() = default;
  RfDrive(double v, double omega) : v_rf(v), omega_rf(omega) {
    if (!(v > 0.0) || !(omega > 0.0))
      throw std::invalid_argument("RfDrive: v_rf > 0 and omega_rf > 0 required");
  }
};

struct IonSpecies {
  double mass = 0.0;    // kg
  double charge = 0.0;  // C
  IonSpecies() = default;
  IonSpecies(double m, double q) : mass(m), charge(q) {
    if (!(m > 0.0) || !(q > 0.0))
      throw std::invalid_argument("IonSpecies: mass > 0 and charge > 0 required");
  }
  static IonSpecies yb171() { return IonSpecies(from_amu(170.936323), k_elementary_charge); }
};

// Value plus exact analytic derivatives at an evaluation point.
struct FieldSample {
  double value = 0.0;   // volts, or joules for energies
  Vec3 gradient = Vec3::Zero();
  Mat3 hessian = Mat3::Zero();
};

struct BiasedPatch {
  RectPatch patch;
  double volts = 0.0;
};

// --- strip basis -----------------------------------------------------------
// A strip is the imaginary part of f(w) = (1/pi)[Log(w - x_hi) - Log(w - x_lo)],
// w = x + i y. Complex derivatives give all field derivatives in closed form.

std::complex<double> strip_fderiv(const StripElectrode& s, std::complex<double> w, int order);

FieldSample strip_basis(const StripElectrode& strip, const Vec3& p);

// gradient of the summed unit-voltage strip potential in the x-y plane
Eigen::Vector2d strips_gradient_xy(std::span<const StripElectrode> strips, double x, double y);
// complex first/second derivative of the summed analytic potential
std::complex<double> strips_fderiv(std::span<const StripElectrode> strips,
                                   std::complex<double> w, int order);

// --- rectangular patch basis -----------------------------------------------

FieldSample patch_basis(const RectPatch& patch, const Vec3& p);
double patch_value(const RectPatch& patch, const Vec3& p);
Vec3 patch_gradient(const RectPatch& patch, const Vec3& p);

// --- composition (Eq. of the effective potential) --------------------------

// e^2 V^2 / (4 m Omega^2)
double pseudopotential_factor(const RfDrive& drive, const IonSpecies& ion);

// time-averaged pseudopotential energy (J) of the rf strip set
FieldSample pseudopotential(std::span<const StripElectrode> rf_strips, const RfDrive& drive,
                            const IonSpecies& ion, const Vec3& p);

// static potential (V) of a set of biased patches
FieldSample static_potential(std::span<const BiasedPatch> patches, const Vec3& p);

// pseudopotential + charge * static potential (J)
FieldSample total_effective_potential(std::span<const StripElectrode> rf_strips,
                                      const RfDrive& drive, const IonSpecies& ion,
                                      std::span<const BiasedPatch> patches, const Vec3& p);

// force work horses (gradient only, no FieldSample assembly)
Vec3 pseudopotential_gradient(std::span<const StripElectrode> rf_strips, double factor,
                              const Vec3& p);
Vec3 static_gradient(std::span<const BiasedPatch> patches, const Vec3& p);

namespace detail {
inline void require_above_plane(double y) {
  if (!(y > 0.0))
    throw std::invalid_argument("evaluation point must satisfy y > 0 (above the electrode plane)");
}
} // namespace detail

} // namespace trapforge
