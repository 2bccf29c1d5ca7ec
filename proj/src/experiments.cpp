#include "fvlim/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace fvlim {

namespace {

RunConfig sine_advection_base() {
  RunConfig c;
  c.model = AdvectionModel{1.0};
  c.x_left = -1.0;
  c.x_right = 1.0;
  c.n_cells = 80;
  c.cfl = 0.9;
  c.t_end = 1.0;
  c.bc = BoundaryCondition::Kind::Periodic;
  c.ic = ic::sine();
  c.sweep_n = {20, 40, 80, 160, 320};
  return c;
}

}  // namespace

RunConfig preset(const std::string& name) {
  if (name == "prelim-sine-ct-r-scan") {
    RunConfig c = sine_advection_base();
    c.name = name;
    c.scheme = LimiterScheme::parse("ct-c:r=1");
    return c;
  }
  if (name == "prelim-sine-weno-eps-scan") {
    RunConfig c = sine_advection_base();
    c.name = name;
    c.scheme = LimiterScheme::parse("weno-js:eps=1e-6");
    return c;
  }
  if (name == "prelim-weno-yc-eps-scan") {
    RunConfig c = sine_advection_base();
    c.name = name;
    c.scheme = LimiterScheme::parse("weno-yc");  // coefficient derived from the profile
    return c;
  }
  if (name == "smooth-bump") {
    RunConfig c;
    c.name = name;
    c.model = AdvectionModel{1.0};
    c.x_left = 0.0;
    c.x_right = 1.0;
    c.n_cells = 170;
    c.cfl = 0.8;
    c.t_end = 10.0;
    c.bc = BoundaryCondition::Kind::Periodic;
    c.ic = ic::smooth_bump();
    c.alpha = 493.48;
    c.yc_coefficient = 20.67;
    c.scheme = LimiterScheme::parse("h3l-c");
    c.sweep_n = {20, 40, 50, 100, 120, 170, 200, 300, 500, 700, 1000, 1500, 3000};
    return c;
  }
  if (name == "square-wave" || name == "square-wave-100") {
    RunConfig c;
    c.name = name;
    c.model = AdvectionModel{1.0};
    c.x_left = -1.0;
    c.x_right = 1.0;
    c.n_cells = 320;
    c.cfl = 0.8;
    c.t_end = 10.0;
    c.bc = BoundaryCondition::Kind::Periodic;
    c.ic_shift = name == "square-wave-100" ? 100.0 : 0.0;
    c.ic = ic::square_wave(c.ic_shift);
    c.alpha = 0.0;
    c.yc_coefficient = name == "square-wave-100" ? 20201.0 : 1.0;
    c.scheme = LimiterScheme::parse("h3l-c");
    c.sweep_n = {160, 320, 640, 1280};
    c.record_tv = true;
    return c;
  }
  if (name == "mixed-features") {
    RunConfig c;
    c.name = name;
    c.model = AdvectionModel{1.0};
    c.x_left = 0.0;
    c.x_right = 1.0;
    c.n_cells = 640;
    c.cfl = 0.8;
    c.t_end = 10.0;
    c.bc = BoundaryCondition::Kind::Periodic;
    c.ic = ic::mixed_features();
    c.alpha = 8887.87;
    c.yc_coefficient = 1042.83;
    c.scheme = LimiterScheme::parse("h3l-c");
    c.error_range = {{0.4, 1.0}};
    c.sweep_n = {20, 40, 80, 160, 320, 640, 1280, 2560};
    return c;
  }
  if (name == "sod") {
    RunConfig c;
    c.name = name;
    c.model = EulerModel{1.4};
    c.x_left = -2.0;
    c.x_right = 2.0;
    c.n_cells = 100;
    c.cfl = 0.95;
    c.t_end = 0.8;
    c.bc = BoundaryCondition::Kind::Transmissive;
    c.ic = ic::sod();
    c.alpha = 0.0;
    c.scheme = LimiterScheme::parse("h3l-c");
    return c;
  }
  if (name == "shu-osher") {
    RunConfig c;
    c.name = name;
    c.model = EulerModel{1.4};
    c.x_left = -4.5;
    c.x_right = 4.5;
    c.n_cells = 640;
    c.cfl = 0.95;
    c.t_end = 1.8;
    c.bc = BoundaryCondition::Kind::Transmissive;
    c.ic = ic::shu_osher();
    c.alpha = 5.0;
    c.yc_coefficient = 21.932;
    c.scheme = LimiterScheme::parse("h3l-c");
    c.sweep_n = {640, 1280};
    c.reference_n = 10000;
    return c;
  }
  throw std::invalid_argument("unknown preset '" + name + "'");
}

std::vector<std::string> preset_names() {
  return {"prelim-sine-ct-r-scan", "prelim-sine-weno-eps-scan", "prelim-weno-yc-eps-scan",
          "smooth-bump",           "square-wave",               "square-wave-100",
          "mixed-features",        "sod",                       "shu-osher"};
}

std::string preset_catalog_canonical() {
  std::string all;
  for (const auto& name : preset_names()) {
    all += preset(name).canonical();
    all += "\n";
  }
  return all;
}

std::uint64_t preset_catalog_checksum() {
  const std::string s = preset_catalog_canonical();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

CellField advection_truth(const RunConfig& config, const Grid1D& grid) {
  const auto* adv = std::get_if<AdvectionModel>(&config.model);
  if (!adv) throw std::invalid_argument("advection_truth: not an advection problem");
  const InitialCondition moved = advected(config.ic, adv->speed * config.t_end);
  return cell_averages(moved.value, grid, moved.breakpoints);
}

std::vector<SweepRow> sweep(const RunConfig& base, const std::vector<LimiterScheme>& schemes,
                            const std::vector<int>& resolutions) {
  std::vector<int> ns = resolutions;
  std::sort(ns.begin(), ns.end());
  const bool advection = std::holds_alternative<AdvectionModel>(base.model);

  std::vector<SweepRow> rows;
  for (const LimiterScheme& scheme : schemes) {
    std::vector<ErrorReport> reports;
    std::vector<std::size_t> row_of_report;
    for (int n : ns) {
      RunConfig config = base;
      config.scheme = scheme;
      config.n_cells = n;
      SweepRow row;
      row.scheme = scheme.name();
      row.n = n;
      row.dx = (config.x_right - config.x_left) / n;
      try {
        const RunResult r = run(config);
        row.tv = total_variation(r.field, 0, config.bc == BoundaryCondition::Kind::Periodic);
        if (advection) {
          const CellField truth = advection_truth(config, r.field.grid());
          row.l1 = l1_error(r.field, truth, 0, config.error_range);
          row.linf = linf_error(r.field, truth, 0, config.error_range);
          reports.push_back({n, row.dx, row.l1, row.linf, row.tv});
          row_of_report.push_back(rows.size());
        }
      } catch (const std::exception& err) {
        row.status = err.what();
      }
      rows.push_back(row);
    }
    annotate_orders(reports);
    for (std::size_t k = 0; k < reports.size(); ++k) {
      rows[row_of_report[k]].order_l1 = reports[k].order_l1;
      rows[row_of_report[k]].order_linf = reports[k].order_linf;
    }
  }
  return rows;
}

}  // namespace fvlim
