#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <variant>

namespace fvlim {

struct AdvectionModel {
  double speed = 1.0;
};

struct EulerModel {
  double gamma = 1.4;
};

using PhysicsModel = std::variant<AdvectionModel, EulerModel>;

inline int n_components(const PhysicsModel& m) {
  return std::holds_alternative<EulerModel>(m) ? 3 : 1;
}

struct EulerPrimitive {
  double rho = 0.0;
  double v = 0.0;
  double p = 0.0;
};

struct EulerConservative {
  double rho = 0.0;
  double mom = 0.0;
  double energy = 0.0;
};

// Raised when a state needed for wave-speed or flux evaluation has
// nonpositive density or pressure. The solver enriches the cell/step/time
// fields as the error propagates out of the run loop.
class PositivityError : public std::runtime_error {
 public:
  std::string variable;
  double value = 0.0;
  int cell = -1;
  long long step = -1;
  double time = std::numeric_limits<double>::quiet_NaN();

  PositivityError(std::string variable_, double value_, int cell_ = -1, long long step_ = -1,
                  double time_ = std::numeric_limits<double>::quiet_NaN())
      : std::runtime_error(format(variable_, value_, cell_, step_, time_)),
        variable(std::move(variable_)),
        value(value_),
        cell(cell_),
        step(step_),
        time(time_) {}

  static std::string format(const std::string& variable, double value, int cell, long long step,
                            double time);
};

// The conversions are total algebra: nonpositive values pass through and the
// solver decides where to abort (wave-speed evaluation is the gate).
inline EulerConservative to_conservative(const EulerPrimitive& w, double gamma) {
  return {w.rho, w.rho * w.v, w.p / (gamma - 1.0) + 0.5 * w.rho * w.v * w.v};
}

inline EulerPrimitive to_primitive(const EulerConservative& u, double gamma) {
  const double v = u.mom / u.rho;
  return {u.rho, v, (gamma - 1.0) * (u.energy - 0.5 * u.rho * v * v)};
}

inline std::array<double, 3> euler_flux(const EulerConservative& u, double gamma) {
  if (!(u.rho > 0.0)) throw PositivityError("density", u.rho);
  const double v = u.mom / u.rho;
  const double p = (gamma - 1.0) * (u.energy - 0.5 * u.mom * v);
  return {u.mom, u.mom * v + p, v * (u.energy + p)};
}

// Flux from primitive inputs; total, so transient nonpositive face values
// flow through the algebra instead of poisoning wave speeds.
inline std::array<double, 3> euler_flux_primitive(const EulerPrimitive& w, double gamma) {
  const double energy = w.p / (gamma - 1.0) + 0.5 * w.rho * w.v * w.v;
  return {w.rho * w.v, w.rho * w.v * w.v + w.p, w.v * (energy + w.p)};
}

// Central flux with prescribed dissipation speed; the solver feeds the
// largest wave speed of the two adjacent cells.
inline std::array<double, 3> rusanov_flux_with_speed(const EulerPrimitive& wl,
                                                     const EulerPrimitive& wr, double s,
                                                     double gamma) {
  const EulerConservative ul = to_conservative(wl, gamma);
  const EulerConservative ur = to_conservative(wr, gamma);
  const auto fl = euler_flux_primitive(wl, gamma);
  const auto fr = euler_flux_primitive(wr, gamma);
  return {0.5 * (fl[0] + fr[0]) - 0.5 * s * (ur.rho - ul.rho),
          0.5 * (fl[1] + fr[1]) - 0.5 * s * (ur.mom - ul.mom),
          0.5 * (fl[2] + fr[2]) - 0.5 * s * (ur.energy - ul.energy)};
}

inline double sound_speed(const EulerPrimitive& w, double gamma) {
  if (!(w.rho > 0.0)) throw PositivityError("density", w.rho);
  if (!(w.p > 0.0)) throw PositivityError("pressure", w.p);
  return std::sqrt(gamma * w.p / w.rho);
}

inline double max_wave_speed(const EulerPrimitive& w, const EulerModel& m) {
  return std::abs(w.v) + sound_speed(w, m.gamma);
}

inline double max_wave_speed(const AdvectionModel& m) { return std::abs(m.speed); }

inline double upwind_flux(double ul, double ur, const AdvectionModel& m) {
  return m.speed >= 0.0 ? m.speed * ul : m.speed * ur;
}

inline std::array<double, 3> rusanov_flux(const EulerConservative& ul, const EulerConservative& ur,
                                          double gamma) {
  const double sl = max_wave_speed(to_primitive(ul, gamma), EulerModel{gamma});
  const double sr = max_wave_speed(to_primitive(ur, gamma), EulerModel{gamma});
  const double s = std::max(sl, sr);
  const auto fl = euler_flux(ul, gamma);
  const auto fr = euler_flux(ur, gamma);
  return {0.5 * (fl[0] + fr[0]) - 0.5 * s * (ur.rho - ul.rho),
          0.5 * (fl[1] + fr[1]) - 0.5 * s * (ur.mom - ul.mom),
          0.5 * (fl[2] + fr[2]) - 0.5 * s * (ur.energy - ul.energy)};
}

inline std::array<double, 3> hll_flux(const EulerConservative& ul, const EulerConservative& ur,
                                      double gamma) {
  const auto wl = to_primitive(ul, gamma);
  const auto wr = to_primitive(ur, gamma);
  const double cl = sound_speed(wl, gamma);
  const double cr = sound_speed(wr, gamma);
  const double sl = std::min(wl.v - cl, wr.v - cr);
  const double sr = std::max(wl.v + cl, wr.v + cr);
  const auto fl = euler_flux(ul, gamma);
  const auto fr = euler_flux(ur, gamma);
  if (sl >= 0.0) return fl;
  if (sr <= 0.0) return fr;
  const double inv = 1.0 / (sr - sl);
  return {(sr * fl[0] - sl * fr[0] + sl * sr * (ur.rho - ul.rho)) * inv,
          (sr * fl[1] - sl * fr[1] + sl * sr * (ur.mom - ul.mom)) * inv,
          (sr * fl[2] - sl * fr[2] + sl * sr * (ur.energy - ul.energy)) * inv};
}

// HLL with wave-speed estimates taken from prescribed signal bounds.
inline std::array<double, 3> hll_flux_with_speeds(const EulerPrimitive& wl,
                                                  const EulerPrimitive& wr, double sl, double sr,
                                                  double gamma) {
  const auto fl = euler_flux_primitive(wl, gamma);
  const auto fr = euler_flux_primitive(wr, gamma);
  if (sl >= 0.0) return fl;
  if (sr <= 0.0) return fr;
  const EulerConservative ul = to_conservative(wl, gamma);
  const EulerConservative ur = to_conservative(wr, gamma);
  const double inv = 1.0 / (sr - sl);
  return {(sr * fl[0] - sl * fr[0] + sl * sr * (ur.rho - ul.rho)) * inv,
          (sr * fl[1] - sl * fr[1] + sl * sr * (ur.mom - ul.mom)) * inv,
          (sr * fl[2] - sl * fr[2] + sl * sr * (ur.energy - ul.energy)) * inv};
}

enum class FluxKind { Rusanov, Hll };

inline std::array<double, 3> numerical_flux(const EulerConservative& ul,
                                            const EulerConservative& ur, const EulerModel& m,
                                            FluxKind flux = FluxKind::Rusanov) {
  return flux == FluxKind::Hll ? hll_flux(ul, ur, m.gamma) : rusanov_flux(ul, ur, m.gamma);
}

inline double numerical_flux(double ul, double ur, const AdvectionModel& m) {
  return upwind_flux(ul, ur, m);
}

}  // namespace fvlim
