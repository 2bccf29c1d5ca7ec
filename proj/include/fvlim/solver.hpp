#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fvlim/diagnostics.hpp"
#include "fvlim/grid.hpp"
#include "fvlim/ic.hpp"
#include "fvlim/physics.hpp"
#include "fvlim/scheme.hpp"

namespace fvlim {

// A complete experiment description. Presets populate it with frozen values;
// prepare() derives alpha / the epsilon coefficient from the initial
// condition when the scheme needs them and the config left them unset.
struct RunConfig {
  std::string name = "custom";
  PhysicsModel model = AdvectionModel{1.0};
  double x_left = 0.0;
  double x_right = 1.0;
  int n_cells = 100;
  double cfl = 0.8;
  double t_end = 1.0;
  BoundaryCondition::Kind bc = BoundaryCondition::Kind::Periodic;
  InitialCondition ic;
  double ic_shift = 0.0;
  LimiterScheme scheme;
  // Experiment-level smoothness constants, applied to schemes that need them.
  double alpha = std::numeric_limits<double>::quiet_NaN();
  double yc_coefficient = std::numeric_limits<double>::quiet_NaN();
  FluxKind flux = FluxKind::Rusanov;
  std::optional<std::pair<double, double>> error_range;
  bool frozen_dt = false;  // wave speed frozen at t = 0
  bool record_tv = false;
  std::vector<double> snapshot_times;  // capture the field at these times
  std::vector<int> sweep_n;            // resolutions used by convergence sweeps
  int reference_n = 0;                 // fine grid for reference solutions

  double gamma_or(double fallback) const {
    if (const auto* e = std::get_if<EulerModel>(&model)) return e->gamma;
    return fallback;
  }
  std::string canonical() const;    // full-precision serialization
  std::string config_hash() const;  // FNV-1a over canonical()
};

// Copies experiment-level constants into the scheme and derives whatever is
// still unset from the initial condition.
void prepare(RunConfig& config);

CellField initial_field(const RunConfig& config);

// Semi-discrete right-hand side -(f_{i+1/2} - f_{i-1/2})/dx. Refreshes the
// ghost layers through bc before evaluating.
CellField rhs(CellField& field, const LimiterScheme& scheme, const PhysicsModel& model,
              const BoundaryCondition& bc, FluxKind flux = FluxKind::Rusanov);

// Largest |wave speed| over interior cells; 0 only for degenerate problems.
double max_field_speed(const CellField& field, const PhysicsModel& model);

// dt = cfl * dx / max speed. Throws on zero wave speed.
double compute_dt(const CellField& field, const PhysicsModel& model, double cfl);

// Three-stage strong-stability-preserving Runge-Kutta step.
CellField ssp_rk3_step(const CellField& u, double dt,
                       const std::function<CellField(const CellField&)>& rhs_of);

// Scalar variant for time-integrator tests: du/dt = L(u).
template <class L>
double ssp_rk3_step_scalar(double u, double dt, L&& rhs_of) {
  const double u1 = u + dt * rhs_of(u);
  const double u2 = 0.75 * u + 0.25 * (u1 + dt * rhs_of(u1));
  return u / 3.0 + (2.0 / 3.0) * (u2 + dt * rhs_of(u2));
}

struct TvSample {
  double t;
  double tv;
};

struct RunResult {
  CellField field;
  double t = 0.0;
  long long steps = 0;
  std::vector<TvSample> tv_history;  // density component for Euler
  std::vector<std::pair<double, CellField>> snapshots;
};

// Initializes exact cell averages, then loops fill ghosts / compute dt /
// RK3 until t_end. Deterministic for a fixed config. Positivity failures
// abort with full context attached.
RunResult run(const RunConfig& config);

ReferenceSolution make_reference(const RunConfig& config);

}  // namespace fvlim
