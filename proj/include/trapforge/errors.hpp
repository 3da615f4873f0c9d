#pragma once

#include <stdexcept>
#include <string>

namespace trapforge {

struct NoTrappingPoint : std::runtime_error {
  explicit NoTrappingPoint(const std::string& what) : std::runtime_error(what) {}
};

struct NoEscapePoint : std::runtime_error {
  explicit NoEscapePoint(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateModes : std::runtime_error {
  explicit DegenerateModes(const std::string& what) : std::runtime_error(what) {}
};

struct NonConfining : std::runtime_error {
  explicit NonConfining(const std::string& what) : std::runtime_error(what) {}
};

struct IllConditioned : std::runtime_error {
  explicit IllConditioned(const std::string& what) : std::runtime_error(what) {}
};

struct WindowTooShort : std::runtime_error {
  explicit WindowTooShort(const std::string& what) : std::runtime_error(what) {}
};

struct StepFailure : std::runtime_error {
  explicit StepFailure(const std::string& what) : std::runtime_error(what) {}
};

// carries the diagnostic state at the moment an ion left the trap
struct IonLost : std::runtime_error {
  double time_s;
  double v_wedge, v_control;
  IonLost(const std::string& what, double t, double vw, double vc)
      : std::runtime_error(what), time_s(t), v_wedge(vw), v_control(vc) {}
};

} // namespace trapforge
