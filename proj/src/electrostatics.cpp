#include "trapforge/electrostatics.hpp"

#include <cmath>

namespace trapforge {

// ---------------------------------------------------------------------------
// strip
// ---------------------------------------------------------------------------

std::complex<double> strip_fderiv(const StripElectrode& s, std::complex<double> w, int order) {
  // f(w)   = (1/pi) [Log(w - x_hi) - Log(w - x_lo)]
  // f^(n)  = (1/pi) (-1)^(n-1) (n-1)! [ (w-x_hi)^-n - (w-x_lo)^-n ]
  const std::complex<double> dh = w - s.x_hi;
  const std::complex<double> dl = w - s.x_lo;
  switch (order) {
    case 1: return (1.0 / k_pi) * (1.0 / dh - 1.0 / dl);
    case 2: return (-1.0 / k_pi) * (1.0 / (dh * dh) - 1.0 / (dl * dl));
    case 3: return (2.0 / k_pi) * (1.0 / (dh * dh * dh) - 1.0 / (dl * dl * dl));
    default: throw std::invalid_argument("strip_fderiv: order must be 1..3");
  }
}

std::complex<double> strips_fderiv(std::span<const StripElectrode> strips,
                                   std::complex<double> w, int order) {
  std::complex<double> acc{0.0, 0.0};
  for (const auto& s : strips) acc += strip_fderiv(s, w, order);
  return acc;
}

FieldSample strip_basis(const StripElectrode& strip, const Vec3& p) {
  detail::require_above_plane(p.y());
  const double x = p.x(), y = p.y();
  FieldSample out;
  out.value = (std::atan2(strip.x_hi - x, y) - std::atan2(strip.x_lo - x, y)) / k_pi;

  const std::complex<double> w{x, y};
  const auto f1 = strip_fderiv(strip, w, 1);
  const auto f2 = strip_fderiv(strip, w, 2);
  // theta_x = Im f', theta_y = Re f'; theta_xx = Im f'', theta_xy = Re f''
  out.gradient = Vec3(f1.imag(), f1.real(), 0.0);
  out.hessian.setZero();
  out.hessian(0, 0) = f2.imag();
  out.hessian(0, 1) = out.hessian(1, 0) = f2.real();
  out.hessian(1, 1) = -f2.imag();
  return out;
}

Eigen::Vector2d strips_gradient_xy(std::span<const StripElectrode> strips, double x, double y) {
  const auto f1 = strips_fderiv(strips, {x, y}, 1);
  return {f1.imag(), f1.real()};
}

// ---------------------------------------------------------------------------
// rectangular patch
// ---------------------------------------------------------------------------
//
// phi = (1/2pi) sum_{i,j} sigma_ij atan( X_i Z_j / (y R_ij) ),
// X_i = x_i - x, Z_j = z_j - z, R = sqrt(X^2 + y^2 + Z^2),
// sigma = +1 for (hi,hi),(lo,lo) and -1 otherwise.
// The derivatives below use P = X^2+y^2, Q = y^2+Z^2 and the factorization
// y^2 R^2 + X^2 Z^2 = P Q.

namespace {

struct CornerDerivs {
  double value, gx, gy, gz;
  double hxx, hxy, hxz, hyy, hzz, hyz;
};

inline CornerDerivs corner(double X, double y, double Z) {
  CornerDerivs d;
  const double X2 = X * X, y2 = y * y, Z2 = Z * Z;
  const double R2 = X2 + y2 + Z2;
  const double R = std::sqrt(R2);
  const double P = X2 + y2;
  const double Q = y2 + Z2;
  const double R3 = R2 * R;

  d.value = std::atan2(X * Z, y * R);
  d.gx = -y * Z / (R * P);
  d.gz = -y * X / (R * Q);
  d.gy = -X * Z * (R2 + y2) / (R * P * Q);

  d.hxx = -y * Z * X * (P + 2.0 * R2) / (R3 * P * P);
  d.hzz = -y * X * Z * (Q + 2.0 * R2) / (R3 * Q * Q);
  d.hxy = -Z * (R2 * P - y2 * (P + 2.0 * R2)) / (R3 * P * P);
  d.hyz = -X * (R2 * Q - y2 * (Q + 2.0 * R2)) / (R3 * Q * Q);
  d.hxz = y / R3;
  // from differentiating gy; harmonicity (hyy = -hxx - hzz) holds analytically
  const double G = R2 + y2;
  d.hyy = -X * Z * y * (4.0 * R * P * Q - G * (P * Q / R + 2.0 * R * Q + 2.0 * R * P))
          / (R * P * Q) / (R * P * Q);
  return d;
}

} // namespace

double patch_value(const RectPatch& patch, const Vec3& p) {
  detail::require_above_plane(p.y());
  const double y = p.y();
  const double Xh = patch.x_hi - p.x(), Xl = patch.x_lo - p.x();
  const double Zh = patch.z_hi - p.z(), Zl = patch.z_lo - p.z();
  auto term = [y](double X, double Z) {
    return std::atan2(X * Z, y * std::sqrt(X * X + y * y + Z * Z));
  };
  return (term(Xh, Zh) - term(Xh, Zl) - term(Xl, Zh) + term(Xl, Zl)) / (2.0 * k_pi);
}

Vec3 patch_gradient(const RectPatch& patch, const Vec3& p) {
  const double y = p.y();
  const double Xh = patch.x_hi - p.x(), Xl = patch.x_lo - p.x();
  const double Zh = patch.z_hi - p.z(), Zl = patch.z_lo - p.z();
  Vec3 g = Vec3::Zero();
  auto add = [&](double X, double Z, double sgn) {
    const double X2 = X * X, y2 = y * y, Z2 = Z * Z;
    const double R = std::sqrt(X2 + y2 + Z2);
    const double P = X2 + y2, Q = y2 + Z2;
    g.x() += sgn * (-y * Z / (R * P));
    g.y() += sgn * (-X * Z * (R * R + y2) / (R * P * Q));
    g.z() += sgn * (-y * X / (R * Q));
  };
  add(Xh, Zh, +1.0);
  add(Xh, Zl, -1.0);
  add(Xl, Zh, -1.0);
  add(Xl, Zl, +1.0);
  return g / (2.0 * k_pi);
}

FieldSample patch_basis(const RectPatch& patch, const Vec3& p) {
  detail::require_above_plane(p.y());
  const double y = p.y();
  const double Xh = patch.x_hi - p.x(), Xl = patch.x_lo - p.x();
  const double Zh = patch.z_hi - p.z(), Zl = patch.z_lo - p.z();

  FieldSample out;
  auto add = [&](double X, double Z, double sgn) {
    const CornerDerivs d = corner(X, y, Z);
    out.value += sgn * d.value;
    out.gradient += sgn * Vec3(d.gx, d.gy, d.gz);
    Mat3 H;
    H << d.hxx, d.hxy, d.hxz,
         d.hxy, d.hyy, d.hyz,
         d.hxz, d.hyz, d.hzz;
    out.hessian += sgn * H;
  };
  add(Xh, Zh, +1.0);
  add(Xh, Zl, -1.0);
  add(Xl, Zh, -1.0);
  add(Xl, Zl, +1.0);

  const double norm = 1.0 / (2.0 * k_pi);
  out.value *= norm;
  out.gradient *= norm;
  out.hessian *= norm;
  return out;
}

// ---------------------------------------------------------------------------
// composition
// ---------------------------------------------------------------------------

double pseudopotential_factor(const RfDrive& drive, const IonSpecies& ion) {
  const double ev = ion.charge * drive.v_rf;
  return ev * ev / (4.0 * ion.mass * drive.omega_rf * drive.omega_rf);
}

FieldSample pseudopotential(std::span<const StripElectrode> rf_strips, const RfDrive& drive,
                            const IonSpecies& ion, const Vec3& p) {
  detail::require_above_plane(p.y());
  if (rf_strips.empty()) throw std::invalid_argument("pseudopotential: empty rf strip list");

  const double C = pseudopotential_factor(drive, ion);
  const std::complex<double> w{p.x(), p.y()};
  const auto f1 = strips_fderiv(rf_strips, w, 1);
  const auto f2 = strips_fderiv(rf_strips, w, 2);
  const auto f3 = strips_fderiv(rf_strips, w, 3);

  const double tx = f1.imag(), ty = f1.real();          // grad theta
  const double axx = f2.imag(), axy = f2.real();        // hessian of theta
  // third derivatives: t_xxx = Im f3, t_xxy = Re f3, t_xyy = -Im f3, t_yyy = -Re f3
  const double txxx = f3.imag(), txxy = f3.real();

  FieldSample out;
  out.value = C * (tx * tx + ty * ty);
  // grad |grad theta|^2 = 2 H_theta grad theta
  out.gradient = 2.0 * C * Vec3(axx * tx + axy * ty, axy * tx - axx * ty, 0.0);
  // hess |grad theta|^2 = 2 (H^2 + sum_k theta_k theta_kij)
  const double h2xx = axx * axx + axy * axy;            // (H^2) is isotropic in 2-D
  Mat3 H = Mat3::Zero();
  H(0, 0) = 2.0 * C * (h2xx + tx * txxx + ty * txxy);
  H(0, 1) = H(1, 0) = 2.0 * C * (tx * txxy - ty * txxx);
  H(1, 1) = 2.0 * C * (h2xx - tx * txxx - ty * txxy);
  out.hessian = H;
  return out;
}

FieldSample static_potential(std::span<const BiasedPatch> patches, const Vec3& p) {
  detail::require_above_plane(p.y());
  FieldSample out;
  for (const auto& bp : patches) {
    if (bp.volts == 0.0) continue;
    const FieldSample s = patch_basis(bp.patch, p);
    out.value += bp.volts * s.value;
    out.gradient += bp.volts * s.gradient;
    out.hessian += bp.volts * s.hessian;
  }
  return out;
}

FieldSample total_effective_potential(std::span<const StripElectrode> rf_strips,
                                      const RfDrive& drive, const IonSpecies& ion,
                                      std::span<const BiasedPatch> patches, const Vec3& p) {
  FieldSample out = pseudopotential(rf_strips, drive, ion, p);
  const FieldSample st = static_potential(patches, p);
  out.value += ion.charge * st.value;
  out.gradient += ion.charge * st.gradient;
  out.hessian += ion.charge * st.hessian;
  return out;
}

Vec3 pseudopotential_gradient(std::span<const StripElectrode> rf_strips, double factor,
                              const Vec3& p) {
  const std::complex<double> w{p.x(), p.y()};
  const auto f1 = strips_fderiv(rf_strips, w, 1);
  const auto f2 = strips_fderiv(rf_strips, w, 2);
  const double tx = f1.imag(), ty = f1.real();
  const double axx = f2.imag(), axy = f2.real();
  return 2.0 * factor * Vec3(axx * tx + axy * ty, axy * tx - axx * ty, 0.0);
}

Vec3 static_gradient(std::span<const BiasedPatch> patches, const Vec3& p) {
  Vec3 g = Vec3::Zero();
  for (const auto& bp : patches) {
    if (bp.volts == 0.0) continue;
    g += bp.volts * patch_gradient(bp.patch, p);
  }
  return g;
}

} // namespace trapforge
