#include "fvlim/ic.hpp"

#include <cmath>
#include <stdexcept>

namespace fvlim {
namespace ic {

InitialCondition sine() {
  InitialCondition c;
  c.name = "sine";
  c.x_left = -1.0;
  c.x_right = 1.0;
  c.value = [](double x) { return std::sin(M_PI * x); };
  c.derivative = [](double x) { return M_PI * std::cos(M_PI * x); };
  c.second_derivative = [](double x) { return -M_PI * M_PI * std::sin(M_PI * x); };
  return c;
}

InitialCondition smooth_bump() {
  InitialCondition c;
  c.name = "smooth-bump";
  c.x_left = 0.0;
  c.x_right = 1.0;
  auto inside = [](double x) { return x >= 0.3 && x <= 0.7; };
  c.value = [inside](double x) {
    if (!inside(x)) return 0.0;
    const double g = 0.5 + 0.5 * std::cos(5.0 * M_PI * (x - 0.5));
    return g * g * g * g;
  };
  c.derivative = [inside](double x) {
    if (!inside(x)) return 0.0;
    const double a = 5.0 * M_PI * (x - 0.5);
    const double g = 0.5 + 0.5 * std::cos(a);
    return 4.0 * g * g * g * (-2.5 * M_PI * std::sin(a));
  };
  c.second_derivative = [inside](double x) {
    if (!inside(x)) return 0.0;
    const double a = 5.0 * M_PI * (x - 0.5);
    const double g = 0.5 + 0.5 * std::cos(a);
    const double gp = -2.5 * M_PI * std::sin(a);
    const double gpp = -12.5 * M_PI * M_PI * std::cos(a);
    return 12.0 * g * g * gp * gp + 4.0 * g * g * g * gpp;
  };
  c.breakpoints = {0.3, 0.7};
  return c;
}

InitialCondition square_wave(double shift) {
  InitialCondition c;
  c.name = shift == 0.0 ? "square-wave" : "square-wave+" + std::to_string(shift);
  c.x_left = -1.0;
  c.x_right = 1.0;
  c.value = [shift](double x) { return (x > -0.5 && x < 0.5 ? 1.0 : 0.0) + shift; };
  c.derivative = [](double) { return 0.0; };
  c.second_derivative = [](double) { return 0.0; };
  c.breakpoints = {-0.5, 0.5};
  return c;
}

InitialCondition mixed_features() {
  InitialCondition c;
  c.name = "mixed-features";
  c.x_left = 0.0;
  c.x_right = 1.0;
  auto osc = [](double x) {
    const double t = (x - 0.7) / 0.15;
    return std::exp(-(t * t * t * t)) * std::sin(30.0 * M_PI * x);
  };
  c.value = [osc](double x) {
    const double s = x / 0.1 - 2.0;
    const double tri = std::max(std::min(s, -s) + 1.0, 0.0);
    return tri + osc(x);
  };
  c.derivative = [](double x) {
    double tri_p = 0.0;
    if (x > 0.1 && x < 0.2) tri_p = 10.0;
    if (x > 0.2 && x < 0.3) tri_p = -10.0;
    const double t = (x - 0.7) / 0.15;
    const double env = std::exp(-(t * t * t * t));
    const double envp = env * (-4.0 * t * t * t / 0.15);
    return tri_p + envp * std::sin(30.0 * M_PI * x) +
           env * 30.0 * M_PI * std::cos(30.0 * M_PI * x);
  };
  c.second_derivative = [](double x) {
    const double t = (x - 0.7) / 0.15;
    const double env = std::exp(-(t * t * t * t));
    const double envp = env * (-4.0 * t * t * t / 0.15);
    const double envpp = env * (16.0 * t * t * t * t * t * t - 12.0 * t * t) / (0.15 * 0.15);
    const double s = std::sin(30.0 * M_PI * x);
    const double sp = 30.0 * M_PI * std::cos(30.0 * M_PI * x);
    const double spp = -900.0 * M_PI * M_PI * s;
    return envpp * s + 2.0 * envp * sp + env * spp;  // triangle is linear a.e.
  };
  c.breakpoints = {0.1, 0.2, 0.3};
  return c;
}

InitialCondition sod() {
  InitialCondition c;
  c.name = "sod";
  c.components = 3;
  c.x_left = -2.0;
  c.x_right = 2.0;
  c.primitive = [](double x) {
    return x < 0.0 ? EulerPrimitive{1.0, 0.0, 1.0} : EulerPrimitive{0.125, 0.0, 0.1};
  };
  c.value = [](double x) { return x < 0.0 ? 1.0 : 0.125; };
  c.derivative = [](double) { return 0.0; };
  c.second_derivative = [](double) { return 0.0; };
  c.breakpoints = {0.0};
  return c;
}

InitialCondition shu_osher() {
  InitialCondition c;
  c.name = "shu-osher";
  c.components = 3;
  c.x_left = -4.5;
  c.x_right = 4.5;
  c.primitive = [](double x) {
    if (x < -4.0) return EulerPrimitive{3.857143, 2.629369, 10.33333};
    return EulerPrimitive{1.0 + 0.2 * std::sin(5.0 * x), 0.0, 1.0};
  };
  c.value = [](double x) { return x < -4.0 ? 3.857143 : 1.0 + 0.2 * std::sin(5.0 * x); };
  c.derivative = [](double x) { return x < -4.0 ? 0.0 : std::cos(5.0 * x); };
  c.second_derivative = [](double x) { return x < -4.0 ? 0.0 : -5.0 * std::sin(5.0 * x); };
  c.breakpoints = {-4.0};
  return c;
}

InitialCondition by_name(const std::string& name, double shift) {
  if (name == "sine") return sine();
  if (name == "smooth-bump") return smooth_bump();
  if (name == "square-wave") return square_wave(shift);
  if (name == "mixed-features") return mixed_features();
  if (name == "sod") return sod();
  if (name == "shu-osher") return shu_osher();
  throw std::invalid_argument("unknown initial condition '" + name + "'");
}

std::vector<std::string> names() {
  return {"sine", "smooth-bump", "square-wave", "mixed-features", "sod", "shu-osher"};
}

}  // namespace ic

InitialCondition advected(const InitialCondition& base, double displacement) {
  const double xl = base.x_left;
  const double length = base.x_right - base.x_left;
  double s = std::fmod(displacement, length);
  if (s < 0.0) s += length;

  auto wrap = [xl, length, s](double x) {
    double y = x - s;
    while (y < xl) y += length;
    while (y >= xl + length) y -= length;
    return y;
  };

  InitialCondition out = base;
  out.name = base.name + "@shifted";
  out.value = [f = base.value, wrap](double x) { return f(wrap(x)); };
  if (base.derivative)
    out.derivative = [f = base.derivative, wrap](double x) { return f(wrap(x)); };
  if (base.second_derivative)
    out.second_derivative = [f = base.second_derivative, wrap](double x) { return f(wrap(x)); };
  if (base.primitive)
    out.primitive = [f = base.primitive, wrap](double x) { return f(wrap(x)); };

  out.breakpoints.clear();
  for (double b : base.breakpoints) {
    double y = std::fmod(b + s - xl, length);
    if (y < 0.0) y += length;
    out.breakpoints.push_back(xl + y);
  }
  // the seam where the wrapped coordinate jumps
  double seam = std::fmod(s, length);
  if (seam != 0.0) out.breakpoints.push_back(xl + seam);
  return out;
}

}  // namespace fvlim
