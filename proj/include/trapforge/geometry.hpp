#pragma once

#include <optional>
#include <vector>

#include "trapforge/electrostatics.hpp"

// Five-wire surface-trap geometry: rf node, trap depth, geometric factor
// kappa and electrode-ratio optimization.
//
// Cross-section along x (plane y=0):
//   [ rail | d | rf width c | ground width a | rf width b | rail ]
// with the origin at the boundary between the width-c rf electrode and the
// central ground, so the rf node sits at x0 = a c/(b+c), h = sqrt(abc(a+b+c))/(b+c).

namespace trapforge {

enum class RatioMode { equal, half, custom };
enum class Design { outer_segmented, centre_segmented };
enum class ElectrodeRole { ground, endcap, control, wedge };

struct FiveWireParams {
  double a = 0.0;    // rf separation (central ground width), m
  double b = 0.0;    // wide rf electrode width, m
  double c = 0.0;    // narrow rf electrode width, m
  double gap = 0.0;  // physical inter-electrode gap, recorded only; a,b,c are
                     // effective (gap-absorbed) extents
  RatioMode ratio_mode = RatioMode::custom;

  static FiveWireParams equal_widths(double a, double zeta);
  static FiveWireParams half_width(double a, double zeta);
  static FiveWireParams custom(double a, double b, double c, double gap = 0.0);
  void validate() const;
};

struct SegmentWidths {
  double endcap = 0.0;   // E
  double wedge = 0.0;    // W
  double control = 0.0;  // C_w
};

struct VoltageSet {
  double endcap = 0.0;
  double wedge = 0.0;
  double control = 0.0;
};

inline VoltageSet lerp(const VoltageSet& a, const VoltageSet& b, double t) {
  return {a.endcap + (b.endcap - a.endcap) * t,
          a.wedge + (b.wedge - a.wedge) * t,
          a.control + (b.control - a.control) * t};
}

struct TrapLayout {
  FiveWireParams five_wire;
  Design design = Design::outer_segmented;
  SegmentWidths widths;
  int n_segments = 9;       // per rail; pattern E C W C E padded with grounds
  double comp_width = 0.0;  // d, ground between the narrow rf electrode and its rail

  struct Segment {
    RectPatch patch;
    ElectrodeRole role;
  };

  std::vector<StripElectrode> rf_strips() const;
  std::vector<Segment> segments() const;
  std::vector<BiasedPatch> biased_patches(const VoltageSet& volts) const;
};

// comp_width < 0 requests the automatic value from compensation_width()
TrapLayout make_layout(Design design, const FiveWireParams& fw, const SegmentWidths& w,
                       double comp_width = -1.0, int n_segments = 9);

struct NodeInfo {
  double x0 = 0.0;                    // m
  double h = 0.0;                     // m
  double depth_ev = 0.0;              // eV
  Vec3 escape_point = Vec3::Zero();
  double principal_axis_angle = 0.0;  // rad, in [0, pi/2]
  double omega_x = 0.0;               // rad/s
  double omega_y = 0.0;               // rad/s
};

struct RadialModes {
  double omega_x = 0.0;
  double omega_y = 0.0;
  double angle = 0.0;  // rad
};

// closed-form node position (x0, h)
std::pair<double, double> rf_node_analytic(const FiveWireParams& p);

// Newton search for grad(theta_rf) = 0; fills depth, escape point and radial modes
NodeInfo rf_node_numeric(const TrapLayout& layout, const RfDrive& drive, const IonSpecies& ion);

double kappa_exact(double a, double b, double c);
double kappa_parameterised(double zeta, RatioMode mode);

struct ZetaOptimum {
  double zeta = 0.0;
  double kappa = 0.0;
};
ZetaOptimum optimize_zeta(RatioMode mode);

double compensation_width(const FiveWireParams& p);

// energy difference between the pseudopotential saddle above the trap and the
// node, in eV
double trap_depth_numeric(const TrapLayout& layout, const RfDrive& drive, const IonSpecies& ion);

double trap_depth_analytic(double h, double kappa, const RfDrive& drive, const IonSpecies& ion);

// secular frequencies and principal-axis angle of the radial pseudopotential
// well, probed at a physical scale (h/50) around the node
RadialModes radial_modes(const TrapLayout& layout, const RfDrive& drive, const IonSpecies& ion);

} // namespace trapforge
