#include "fvlim/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "fvlim/limiters.hpp"
#include "fvlim/reconstruction.hpp"
#include "fvlim/textio.hpp"
#include "fvlim/weno3.hpp"

namespace fvlim {

std::string RunConfig::canonical() const {
  char buf[512];
  const char* model_name = std::holds_alternative<EulerModel>(model) ? "euler" : "advection";
  const double model_param = std::holds_alternative<EulerModel>(model)
                                 ? std::get<EulerModel>(model).gamma
                                 : std::get<AdvectionModel>(model).speed;
  std::snprintf(buf, sizeof(buf),
                "name=%s;model=%s:%.17g;domain=%.17g:%.17g;n=%d;cfl=%.17g;t_end=%.17g;bc=%d;"
                "ic=%s;shift=%.17g;scheme=%s;alpha=%.17g;ycc=%.17g;flux=%d;frozen=%d",
                name.c_str(), model_name, model_param, x_left, x_right, n_cells, cfl, t_end,
                static_cast<int>(bc), ic.name.c_str(), ic_shift, scheme.canonical().c_str(), alpha,
                yc_coefficient, static_cast<int>(flux), frozen_dt ? 1 : 0);
  std::string s = buf;
  if (error_range) s += ";range=" + fmt17(error_range->first) + ":" + fmt17(error_range->second);
  return s;
}

std::string RunConfig::config_hash() const {
  const std::string s = canonical();
  unsigned long long h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx", h);
  return buf;
}

void prepare(RunConfig& config) {
  if (!(config.cfl > 0.0 && config.cfl <= 1.0))
    throw std::invalid_argument("config: cfl must be in (0, 1]");
  if (const auto* e = std::get_if<EulerModel>(&config.model)) {
    if (!(e->gamma > 1.0)) throw std::invalid_argument("config: gamma must be > 1");
  }
  if (!config.ic.value) throw std::invalid_argument("config: no initial condition");
  if (config.scheme.needs_alpha() && std::isnan(config.scheme.alpha)) {
    config.scheme.alpha = !std::isnan(config.alpha)
                              ? config.alpha
                              : alpha_from_ic(config.ic.second_derivative, config.ic.x_left,
                                              config.ic.x_right);
  }
  if (config.scheme.needs_epsilon_coefficient()) {
    config.scheme.eps.value =
        !std::isnan(config.yc_coefficient)
            ? config.yc_coefficient
            : epsilon_yc_coefficient(config.ic.value, config.ic.derivative, config.ic.x_left,
                                     config.ic.x_right, config.ic.breakpoints);
  }
}

CellField initial_field(const RunConfig& config) {
  const Grid1D grid(config.n_cells, config.x_left, config.x_right);
  return cell_averages(config.ic, grid, config.gamma_or(1.4));
}

namespace {

// Face values for cells first..last (inclusive) of one component.
// faces[k - first] holds the pair of cell k.
void reconstruct_range(const std::vector<double>& u, int offset, int first, int last,
                       const LimiterScheme& scheme, double dx, std::vector<InterfacePair>& faces) {
  faces.resize(last - first + 1);
  for (int k = first; k <= last; ++k) {
    const double um = u[offset + k - 1];
    const double ui = u[offset + k];
    const double up = u[offset + k + 1];
    faces[k - first] = interface_values(um, ui, up, scheme, dx);
  }
}

void rhs_scalar(const CellField& field, const LimiterScheme& scheme, const AdvectionModel& model,
                CellField& out) {
  const int n = field.grid().n;
  const double dx = field.grid().dx();
  static thread_local std::vector<double> u;
  static thread_local std::vector<InterfacePair> faces;
  u.resize(n + 4);
  for (int k = -2; k < n + 2; ++k) u[k + 2] = field(k);
  reconstruct_range(u, 2, -1, n, scheme, dx, faces);
  // flux through interface k (between cells k-1 and k), k = 0..n
  static thread_local std::vector<double> fhat;
  fhat.resize(n + 1);
  for (int k = 0; k <= n; ++k)
    fhat[k] = upwind_flux(faces[k].right, faces[k + 1].left, model);
  for (int i = 0; i < n; ++i) out(i) = -(fhat[i + 1] - fhat[i]) / dx;
}

void rhs_euler(const CellField& field, const LimiterScheme& scheme, const EulerModel& model,
               FluxKind flux, CellField& out) {
  const int n = field.grid().n;
  const double dx = field.grid().dx();
  const double gamma = model.gamma;
  // Primitive variables and wave speeds on cells -2..n+1; the cell averages
  // must be admissible at every stage, and this is where that is enforced.
  static thread_local std::vector<double> rho, vel, pre, spd;
  rho.resize(n + 4);
  vel.resize(n + 4);
  pre.resize(n + 4);
  spd.resize(n + 4);
  for (int k = -2; k < n + 2; ++k) {
    const EulerConservative u{field(k, 0), field(k, 1), field(k, 2)};
    const int report = std::clamp(k, 0, n - 1);
    if (!(u.rho > 0.0)) throw PositivityError("density", u.rho, report);
    const EulerPrimitive w = to_primitive(u, gamma);
    if (!(w.p > 0.0)) throw PositivityError("pressure", w.p, report);
    rho[k + 2] = w.rho;
    vel[k + 2] = w.v;
    pre[k + 2] = w.p;
    spd[k + 2] = max_wave_speed(w, model);
  }
  static thread_local std::vector<InterfacePair> frho, fvel, fpre;
  reconstruct_range(rho, 2, -1, n, scheme, dx, frho);
  reconstruct_range(vel, 2, -1, n, scheme, dx, fvel);
  reconstruct_range(pre, 2, -1, n, scheme, dx, fpre);

  // Face values may transiently leave the admissible set (the unlimited
  // reconstruction does so at strong jumps); the flux algebra is total and
  // the dissipation speed comes from the two adjacent cells.
  static thread_local std::vector<std::array<double, 3>> fhat;
  fhat.resize(n + 1);
  for (int k = 0; k <= n; ++k) {
    const int jl = k;  // slot of cell k-1
    const int jr = k + 1;
    const EulerPrimitive wl{frho[jl].right, fvel[jl].right, fpre[jl].right};
    const EulerPrimitive wr{frho[jr].left, fvel[jr].left, fpre[jr].left};
    if (flux == FluxKind::Hll) {
      const double cl = std::sqrt(gamma * pre[k + 1] / rho[k + 1]);
      const double cr = std::sqrt(gamma * pre[k + 2] / rho[k + 2]);
      const double sl = std::min(vel[k + 1] - cl, vel[k + 2] - cr);
      const double sr = std::max(vel[k + 1] + cl, vel[k + 2] + cr);
      fhat[k] = hll_flux_with_speeds(wl, wr, sl, sr, gamma);
    } else {
      fhat[k] = rusanov_flux_with_speed(wl, wr, std::max(spd[k + 1], spd[k + 2]), gamma);
    }
  }
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < 3; ++c) out(i, c) = -(fhat[i + 1][c] - fhat[i][c]) / dx;
}

}  // namespace

CellField rhs(CellField& field, const LimiterScheme& scheme, const PhysicsModel& model,
              const BoundaryCondition& bc, FluxKind flux) {
  fill_ghosts(field, bc);
  CellField out(field.grid(), field.components());
  if (const auto* adv = std::get_if<AdvectionModel>(&model)) {
    rhs_scalar(field, scheme, *adv, out);
  } else {
    rhs_euler(field, scheme, std::get<EulerModel>(model), flux, out);
  }
  return out;
}

double max_field_speed(const CellField& field, const PhysicsModel& model) {
  if (const auto* adv = std::get_if<AdvectionModel>(&model)) return max_wave_speed(*adv);
  const EulerModel& e = std::get<EulerModel>(model);
  double s = 0.0;
  for (int i = 0; i < field.grid().n; ++i) {
    try {
      const EulerPrimitive w = to_primitive({field(i, 0), field(i, 1), field(i, 2)}, e.gamma);
      s = std::max(s, max_wave_speed(w, e));
    } catch (PositivityError& err) {
      throw PositivityError(err.variable, err.value, i, err.step, err.time);
    }
  }
  return s;
}

double compute_dt(const CellField& field, const PhysicsModel& model, double cfl) {
  if (!(cfl > 0.0)) throw std::invalid_argument("compute_dt: cfl must be > 0");
  const double s = max_field_speed(field, model);
  if (s == 0.0) throw std::runtime_error("compute_dt: degenerate time step (zero wave speed)");
  return cfl * field.grid().dx() / s;
}

namespace {

// u <- a*u + b*v + c*w  (w may be null)
void lincomb(CellField& u, double a, double b, const CellField& v, double c,
             const CellField* w) {
  auto& ud = u.raw();
  const auto& vd = v.raw();
  if (w) {
    const auto& wd = w->raw();
    for (std::size_t k = 0; k < ud.size(); ++k) ud[k] = a * ud[k] + b * vd[k] + c * wd[k];
  } else {
    for (std::size_t k = 0; k < ud.size(); ++k) ud[k] = a * ud[k] + b * vd[k];
  }
}

}  // namespace

CellField ssp_rk3_step(const CellField& u, double dt,
                       const std::function<CellField(const CellField&)>& rhs_of) {
  CellField u1 = u;
  {
    const CellField k = rhs_of(u1);
    lincomb(u1, 1.0, dt, k, 0.0, nullptr);
  }
  CellField u2 = u1;
  {
    const CellField k = rhs_of(u1);
    // u2 = 3/4 u + 1/4 (u1 + dt k)
    lincomb(u2, 0.25, 0.75, u, 0.25 * dt, &k);
  }
  CellField out = u2;
  {
    const CellField k = rhs_of(u2);
    // u_{n+1} = 1/3 u + 2/3 (u2 + dt k)
    lincomb(out, 2.0 / 3.0, 1.0 / 3.0, u, (2.0 / 3.0) * dt, &k);
  }
  return out;
}

RunResult run(const RunConfig& config_in) {
  RunConfig config = config_in;
  prepare(config);

  RunResult result;
  result.field = initial_field(config);
  CellField& u = result.field;
  const bool euler = std::holds_alternative<EulerModel>(config.model);
  const bool periodic = config.bc == BoundaryCondition::Kind::Periodic;
  BoundaryCondition bc{config.bc, {}, {}};
  if (config.bc == BoundaryCondition::Kind::Fixed) {
    // fixed states are the initial profile's endpoint values
    const double gamma = config.gamma_or(1.4);
    if (euler) {
      const auto l = to_conservative(config.ic.primitive(config.x_left), gamma);
      const auto r = to_conservative(config.ic.primitive(config.x_right), gamma);
      bc.left = {l.rho, l.mom, l.energy};
      bc.right = {r.rho, r.mom, r.energy};
    } else {
      bc.left = {config.ic.value(config.x_left)};
      bc.right = {config.ic.value(config.x_right)};
    }
  }

  std::vector<double> wanted = config.snapshot_times;
  std::sort(wanted.begin(), wanted.end());
  std::size_t next_snap = 0;
  auto record = [&](double t) {
    if (config.record_tv)
      result.tv_history.push_back({t, total_variation(u, 0, periodic)});
    // capture the first state at or past each requested time
    while (next_snap < wanted.size() && t >= wanted[next_snap]) {
      result.snapshots.emplace_back(t, u);
      ++next_snap;
    }
  };
  record(0.0);

  auto rhs_of = [&](const CellField& v) {
    CellField tmp = v;
    return rhs(tmp, config.scheme, config.model, bc, config.flux);
  };

  double t = 0.0;
  double frozen_speed = -1.0;
  try {
    while (t < config.t_end) {
      double speed = config.frozen_dt && frozen_speed > 0.0 ? frozen_speed
                                                            : max_field_speed(u, config.model);
      if (config.frozen_dt && frozen_speed <= 0.0) frozen_speed = speed;
      if (speed == 0.0) {
        t = config.t_end;  // nothing moves
        break;
      }
      double dt = config.cfl * u.grid().dx() / speed;
      bool last = false;
      if (t + dt >= config.t_end) {
        dt = config.t_end - t;
        last = true;
      }
      u = ssp_rk3_step(u, dt, rhs_of);
      t = last ? config.t_end : t + dt;
      ++result.steps;
      record(t);
    }
  } catch (PositivityError& err) {
    throw PositivityError(err.variable, err.value, err.cell, result.steps + 1, t);
  }
  result.t = t;
  return result;
}

ReferenceSolution make_reference(const RunConfig& config_in) {
  RunConfig config = config_in;
  if (config.reference_n > 0) config.n_cells = config.reference_n;
  const RunResult r = run(config);
  return ReferenceSolution::from_field(r.field, config.scheme.name(), config.t_end,
                                       config.gamma_or(0.0), config.config_hash());
}

}  // namespace fvlim
