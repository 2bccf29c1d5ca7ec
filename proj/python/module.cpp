// Python bindings for the main operations: limiter evaluations in the slope
// plane, the experiment presets, and complete solver runs.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fvlim/config.hpp"
#include "fvlim/experiments.hpp"
#include "fvlim/limiters.hpp"
#include "fvlim/reconstruction.hpp"
#include "fvlim/textio.hpp"
#include "fvlim/weno3.hpp"

namespace py = pybind11;
using namespace fvlim;

namespace {

LimiterScheme scheme_with(const std::string& name, double alpha, double eps) {
  LimiterScheme s = LimiterScheme::parse(name);
  if (s.needs_alpha() && std::isnan(s.alpha) && alpha >= 0.0) s.alpha = alpha;
  if (s.kind == LimiterKind::WenoYC && std::isnan(s.eps.value) && eps > 0.0) s.eps.value = eps;
  return s;
}

py::dict run_result_to_dict(const RunConfig& config, const RunResult& r) {
  py::dict out;
  const Grid1D& g = r.field.grid();
  std::vector<double> x(g.n);
  for (int i = 0; i < g.n; ++i) x[i] = g.center(i);
  out["x"] = x;
  out["t"] = r.t;
  out["steps"] = r.steps;
  if (r.field.components() == 3) {
    std::vector<double> rho(g.n), v(g.n), p(g.n);
    const double gamma = config.gamma_or(1.4);
    for (int i = 0; i < g.n; ++i) {
      const EulerPrimitive w = to_primitive({r.field(i, 0), r.field(i, 1), r.field(i, 2)}, gamma);
      rho[i] = w.rho;
      v[i] = w.v;
      p[i] = w.p;
    }
    out["rho"] = rho;
    out["v"] = v;
    out["p"] = p;
  } else {
    std::vector<double> u(g.n);
    for (int i = 0; i < g.n; ++i) u[i] = r.field(i);
    out["u"] = u;
    out["tv"] = total_variation(r.field, 0, config.bc == BoundaryCondition::Kind::Periodic);
  }
  if (!r.tv_history.empty()) {
    std::vector<std::pair<double, double>> hist;
    for (const TvSample& s : r.tv_history) hist.emplace_back(s.t, s.tv);
    out["tv_history"] = hist;
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(pyfvlim, m) {
  m.doc() = "1D finite-volume solver with two-parameter slope limiters and WENO3";

  py::register_exception<PositivityError>(m, "PositivityError");

  m.def("phi3", &phi3, py::arg("theta"));
  m.def("phi_ct", &phi_ct, py::arg("theta"));
  m.def("phi_ct_tvd", &phi_ct_tvd, py::arg("theta"));
  m.def("phi_as", &phi_as, py::arg("theta"), py::arg("q") = 1.4);
  m.def("h3", [](double dm, double dp) { return h3(SlopePair(dm, dp)); }, py::arg("dm"),
        py::arg("dp"));
  m.def("h3l", [](double dm, double dp) { return h3l(SlopePair(dm, dp)); }, py::arg("dm"),
        py::arg("dp"));
  m.def(
      "eta",
      [](double dm, double dp, double alpha, double dx) {
        return eta(SlopePair(dm, dp), SmoothnessContext(alpha, dx));
      },
      py::arg("dm"), py::arg("dp"), py::arg("alpha"), py::arg("dx"));
  m.def(
      "eta_ct",
      [](double dm, double dp, double r, double dx) {
        return eta_ct(SlopePair(dm, dp), SmoothnessContext(0.0, dx, r));
      },
      py::arg("dm"), py::arg("dp"), py::arg("r"), py::arg("dx"));
  m.def(
      "h3l_combined",
      [](double dm, double dp, double alpha, double dx) {
        return h3l_combined(SlopePair(dm, dp), SmoothnessContext(alpha, dx));
      },
      py::arg("dm"), py::arg("dp"), py::arg("alpha"), py::arg("dx"));
  m.def(
      "weights_js",
      [](double dm, double dp, double eps, int p) {
        WenoParams params;
        params.epsilon = eps;
        params.power_p = p;
        const WenoWeights w = weights_js(SlopePair(dm, dp), params);
        return std::make_pair(w.wm, w.wp);
      },
      py::arg("dm"), py::arg("dp"), py::arg("eps") = 1e-6, py::arg("p") = 2);
  m.def(
      "weights_yc",
      [](double dm, double dp, double eps) {
        const WenoWeights w = weights_yc(SlopePair(dm, dp), eps);
        return std::make_pair(w.wm, w.wp);
      },
      py::arg("dm"), py::arg("dp"), py::arg("eps"));

  // evaluate any catalog scheme in the slope plane
  m.def(
      "scheme_h",
      [](const std::string& scheme, double dm, double dp, double dx, double alpha, double eps) {
        return scheme_with(scheme, alpha, eps).h(SlopePair(dm, dp), dx);
      },
      py::arg("scheme"), py::arg("dm"), py::arg("dp"), py::arg("dx") = 0.1,
      py::arg("alpha") = -1.0, py::arg("eps") = 0.0);

  m.def("presets", [] { return preset_names(); });
  m.def("scheme_names", [] {
    return std::vector<std::string>{"h3",  "ct",   "ct-tvd",  "ct-c",    "as",
                                    "h3l", "h3l-c", "weno-js", "weno-yc", "weno-pow"};
  });

  m.def(
      "run_preset",
      [](const std::string& name, const std::string& scheme, int n, double t_end, double cfl,
         double eps, double alpha, bool record_tv) {
        RunConfig config = preset(name);
        if (!scheme.empty()) apply_config_key(config, "scheme", scheme);
        if (n > 0) config.n_cells = n;
        if (t_end >= 0.0) config.t_end = t_end;
        if (cfl > 0.0) config.cfl = cfl;
        if (eps > 0.0) apply_config_key(config, "eps", fmt17(eps));
        if (alpha >= 0.0) apply_config_key(config, "alpha", fmt17(alpha));
        config.record_tv = record_tv;
        const RunResult r = run(config);
        py::dict out = run_result_to_dict(config, r);
        if (std::holds_alternative<AdvectionModel>(config.model)) {
          const CellField truth = advection_truth(config, r.field.grid());
          out["l1"] = l1_error(r.field, truth, 0, config.error_range);
          out["linf"] = linf_error(r.field, truth, 0, config.error_range);
        }
        return out;
      },
      py::arg("name"), py::arg("scheme") = "", py::arg("n") = 0, py::arg("t_end") = -1.0,
      py::arg("cfl") = 0.0, py::arg("eps") = 0.0, py::arg("alpha") = -1.0,
      py::arg("record_tv") = false);

  m.def(
      "alpha_from_ic",
      [](const std::function<double(double)>& d2, double xl, double xr) {
        return alpha_from_ic(d2, xl, xr);
      },
      py::arg("second_derivative"), py::arg("x_left"), py::arg("x_right"));
  m.def(
      "epsilon_yc_coefficient",
      [](const std::function<double(double)>& u0, const std::function<double(double)>& du0,
         double xl, double xr, const std::vector<double>& splits) {
        return epsilon_yc_coefficient(u0, du0, xl, xr, splits);
      },
      py::arg("u0"), py::arg("du0"), py::arg("x_left"), py::arg("x_right"),
      py::arg("split_points") = std::vector<double>{});
}
