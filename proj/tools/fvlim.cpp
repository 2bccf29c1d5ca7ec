// Command-line front end: run experiments, convergence sweeps, and slope-plane
// exports of the limiter functions. Exit codes: 0 ok, 2 configuration error,
// 3 positivity abort (with a JSON diagnostic on stderr).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fvlim/config.hpp"
#include "fvlim/experiments.hpp"
#include "fvlim/textio.hpp"

using nlohmann::json;
using namespace fvlim;

namespace {

struct OutputTarget {
  std::string path = "-";
  std::string format = "csv";

  std::unique_ptr<std::ostream> stream;
  std::ostream& open(const std::string& suffix = "") {
    if (path == "-") return std::cout;
    std::string p = path;
    if (!suffix.empty()) {
      const auto dot = p.rfind('.');
      p = dot == std::string::npos ? p + suffix : p.substr(0, dot) + suffix + p.substr(dot);
    }
    stream = std::make_unique<std::ofstream>(p);
    if (!*stream) throw ConfigError("cannot open output file '" + p + "'");
    return *stream;
  }
};

void write_table(std::ostream& out, const std::string& format,
                 const std::vector<std::string>& columns,
                 const std::vector<std::vector<double>>& rows) {
  if (format == "json") {
    json j;
    j["columns"] = columns;
    auto& data = j["data"];
    for (const auto& row : rows) data.push_back(row);
    out << j.dump(2) << "\n";
    return;
  }
  for (std::size_t c = 0; c < columns.size(); ++c)
    out << columns[c] << (c + 1 < columns.size() ? "," : "\n");
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c)
      out << fmt17(row[c]) << (c + 1 < row.size() ? "," : "\n");
  }
}

struct CommonOpts {
  std::string preset_name;
  std::string config_path;
  std::string scheme;
  int n = 0;
  double cfl = 0.0;
  double t_end = -1.0;
  double alpha = -1.0;
  double eps = 0.0;
  std::string eps_policy;
  std::vector<double> error_range;

  void add(CLI::App* cmd) {
    add_without_n(cmd);
    cmd->add_option("--n", n, "number of grid cells");
  }

  void add_without_n(CLI::App* cmd) {
    cmd->add_option("--preset", preset_name, "preset experiment name");
    cmd->add_option("--config", config_path, "config file (key = value lines)");
    cmd->add_option("--scheme", scheme, "reconstruction scheme, e.g. h3l-c or weno-js");
    cmd->add_option("--cfl", cfl, "CFL number in (0, 1]");
    cmd->add_option("--t-end", t_end, "final time");
    cmd->add_option("--alpha", alpha, "largest |u0''| outside discontinuities");
    cmd->add_option("--eps", eps, "WENO epsilon (coefficient of dx^2 for weno-yc)");
    cmd->add_option("--eps-policy", eps_policy, "js | yc | pow");
    cmd->add_option("--error-range", error_range, "restrict error norms to [a, b]")->expected(2);
  }

  RunConfig build() const {
    RunConfig config;
    if (!preset_name.empty() && !config_path.empty())
      throw ConfigError("give either --preset or --config, not both");
    if (!config_path.empty()) config = parse_config_file(config_path);
    else if (!preset_name.empty()) config = preset(preset_name);
    else throw ConfigError("one of --preset or --config is required");
    if (!scheme.empty()) apply_config_key(config, "scheme", scheme);
    if (n > 0) apply_config_key(config, "n", std::to_string(n));
    if (cfl > 0.0) apply_config_key(config, "cfl", fmt17(cfl));
    if (t_end >= 0.0) apply_config_key(config, "t_end", fmt17(t_end));
    if (alpha >= 0.0) apply_config_key(config, "alpha", fmt17(alpha));
    if (eps > 0.0) apply_config_key(config, "eps", fmt17(eps));
    if (!eps_policy.empty()) apply_config_key(config, "eps_policy", eps_policy);
    if (error_range.size() == 2)
      apply_config_key(config, "error_range", fmt17(error_range[0]) + " " + fmt17(error_range[1]));
    return config;
  }
};

void write_solution(std::ostream& out, const std::string& format, const RunConfig& config,
                    const CellField& field) {
  const Grid1D& g = field.grid();
  std::vector<std::vector<double>> rows;
  std::vector<std::string> columns;
  if (field.components() == 3) {
    columns = {"x", "rho", "v", "p"};
    const double gamma = config.gamma_or(1.4);
    for (int i = 0; i < g.n; ++i) {
      const EulerPrimitive w = to_primitive({field(i, 0), field(i, 1), field(i, 2)}, gamma);
      rows.push_back({g.center(i), w.rho, w.v, w.p});
    }
  } else {
    columns = {"x", "u"};
    for (int i = 0; i < g.n; ++i) rows.push_back({g.center(i), field(i)});
  }
  write_table(out, format, columns, rows);
}

int cmd_run(const CommonOpts& opts, OutputTarget& target, const std::string& what,
            const std::string& save_reference) {
  RunConfig config = opts.build();
  const std::string kind = what == "tv" ? "tv-history" : what;
  if (kind == "tv-history") config.record_tv = true;
  const RunResult result = run(config);

  if (!save_reference.empty()) {
    const ReferenceSolution ref = ReferenceSolution::from_field(
        result.field, config.scheme.name(), config.t_end, config.gamma_or(0.0),
        config.config_hash());
    ref.save(save_reference);
  }

  if (kind == "solution") {
    write_solution(target.open(), target.format, config, result.field);
  } else if (kind == "tv-history") {
    std::vector<std::vector<double>> rows;
    for (const TvSample& s : result.tv_history) rows.push_back({s.t, s.tv});
    write_table(target.open(), target.format, {"t", "tv"}, rows);
  } else if (kind == "errors") {
    if (!std::holds_alternative<AdvectionModel>(config.model))
      throw ConfigError("--out errors needs an exact solution (advection only)");
    const CellField truth = advection_truth(config, result.field.grid());
    const bool periodic = config.bc == BoundaryCondition::Kind::Periodic;
    std::vector<std::vector<double>> rows = {
        {static_cast<double>(config.n_cells), result.field.grid().dx(),
         l1_error(result.field, truth, 0, config.error_range),
         linf_error(result.field, truth, 0, config.error_range),
         total_variation(result.field, 0, periodic)}};
    write_table(target.open(), target.format, {"n", "dx", "l1", "linf", "tv"}, rows);
  } else {
    throw ConfigError("unknown --out kind '" + kind + "'");
  }
  return 0;
}

int cmd_convergence(const CommonOpts& opts, OutputTarget& target,
                    const std::vector<std::string>& scheme_names, const std::vector<int>& ns,
                    const std::string& reference_path) {
  RunConfig base = opts.build();
  std::vector<LimiterScheme> schemes;
  if (scheme_names.empty()) schemes.push_back(base.scheme);
  for (const auto& s : scheme_names) schemes.push_back(LimiterScheme::parse(s));
  std::vector<int> resolutions = ns.empty() ? base.sweep_n : ns;
  if (resolutions.empty()) resolutions = {base.n_cells};

  if (!reference_path.empty()) {
    // Euler sweeps measure the density error against a stored fine solution.
    const ReferenceSolution ref = ReferenceSolution::load(reference_path);
    std::vector<std::vector<double>> rows;
    std::ostream& out = target.open();
    std::vector<std::string> names;
    for (const auto& scheme : schemes) {
      std::vector<ErrorReport> reports;
      for (int n : resolutions) {
        RunConfig config = base;
        config.scheme = scheme;
        config.n_cells = n;
        const RunResult r = run(config);
        const CellField coarse_ref = ref.restrict_to(r.field.grid());
        reports.push_back({n, r.field.grid().dx(), l1_error(r.field, coarse_ref, 0),
                           linf_error(r.field, coarse_ref, 0),
                           total_variation(r.field, 0, false)});
      }
      annotate_orders(reports);
      for (const auto& rep : reports) {
        names.push_back(scheme.name());
        rows.push_back({static_cast<double>(rep.n_cells), rep.dx, rep.l1, rep.linf, rep.order_l1,
                        rep.order_linf, rep.tv});
      }
    }
    if (target.format == "json") {
      json j;
      j["columns"] = {"scheme", "n", "dx", "l1", "linf", "order_l1", "order_linf", "tv"};
      auto& data = j["data"];
      for (std::size_t k = 0; k < rows.size(); ++k) {
        json row = {names[k]};
        for (double v : rows[k]) row.push_back(v);
        data.push_back(row);
      }
      out << j.dump(2) << "\n";
    } else {
      out << "scheme,n,dx,l1,linf,order_l1,order_linf,tv\n";
      for (std::size_t k = 0; k < rows.size(); ++k) {
        out << names[k];
        for (double v : rows[k]) out << "," << fmt17(v);
        out << "\n";
      }
    }
    return 0;
  }

  const auto rows = sweep(base, schemes, resolutions);
  std::ostream& out = target.open();
  if (target.format == "json") {
    json j;
    j["columns"] = {"scheme", "n", "dx", "l1", "linf", "order_l1", "order_linf", "tv", "status"};
    auto& data = j["data"];
    for (const auto& r : rows)
      data.push_back({r.scheme, r.n, r.dx, r.l1, r.linf, r.order_l1, r.order_linf, r.tv, r.status});
    out << j.dump(2) << "\n";
  } else {
    out << "scheme,n,dx,l1,linf,order_l1,order_linf,tv\n";
    for (const auto& r : rows) {
      if (r.status != "ok") {
        std::cerr << "# " << r.scheme << " n=" << r.n << ": " << r.status << "\n";
      }
      out << r.scheme << "," << r.n << "," << fmt17(r.dx) << "," << fmt17(r.l1) << ","
          << fmt17(r.linf) << "," << fmt17(r.order_l1) << "," << fmt17(r.order_linf) << ","
          << fmt17(r.tv) << "\n";
    }
  }
  return 0;
}

LimiterScheme surface_scheme(const std::string& name, double alpha, double eps) {
  LimiterScheme scheme = LimiterScheme::parse(name);
  if (scheme.needs_alpha() && std::isnan(scheme.alpha) && alpha >= 0.0) scheme.alpha = alpha;
  if (scheme.kind == LimiterKind::WenoYC && std::isnan(scheme.eps.value) && eps > 0.0)
    scheme.eps.value = eps;
  return scheme;
}

int cmd_surface(const std::string& scheme_name, OutputTarget& target, double lo, double hi,
                int points, double dx, double alpha, double eps) {
  const LimiterScheme scheme = surface_scheme(scheme_name, alpha, eps);
  std::vector<std::vector<double>> rows;
  const double step = (hi - lo) / (points - 1);
  for (int j = 0; j < points; ++j) {
    const double dp = lo + j * step;
    for (int i = 0; i < points; ++i) {
      const double dm = lo + i * step;
      rows.push_back({dm, dp, scheme.h(SlopePair(dm, dp), dx)});
    }
  }
  write_table(target.open(), target.format, {"delta_minus", "delta_plus", "H"}, rows);
  return 0;
}

int cmd_section(const std::string& scheme_name, OutputTarget& target,
                const std::vector<double>& delta_plus, double lo, double hi, int points, double dx,
                double alpha, double eps) {
  const LimiterScheme scheme = surface_scheme(scheme_name, alpha, eps);
  const double step = (hi - lo) / (points - 1);
  for (double dp : delta_plus) {
    std::vector<std::vector<double>> rows;
    for (int i = 0; i < points; ++i) {
      const double dm = lo + i * step;
      rows.push_back({dm, scheme.h(SlopePair(dm, dp), dx)});
    }
    char suffix[64];
    std::snprintf(suffix, sizeof(suffix), "_dp%g", dp);
    std::ostream& out = target.open(delta_plus.size() > 1 ? suffix : "");
    if (target.path == "-") out << "# delta_plus = " << fmt17(dp) << "\n";
    write_table(out, target.format, {"delta_minus", "H"}, rows);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"1D finite-volume solver with two-parameter slope limiters and WENO3"};
  app.require_subcommand(1);

  CommonOpts opts;
  OutputTarget target;
  std::string out_what = "solution";
  std::string save_reference;
  std::vector<std::string> scheme_names;
  std::vector<int> ns;
  std::string reference_path;
  std::string surface_name;
  double lo = -2.0, hi = 2.0;
  int points = 201;
  double surf_dx = 0.1, surf_alpha = -1.0, surf_eps = 0.0;
  std::vector<double> delta_plus = {2.0, 1.0, 0.5, 0.1};

  auto* run_cmd = app.add_subcommand("run", "run one experiment and export the result");
  opts.add(run_cmd);
  run_cmd->add_option("--out", out_what, "solution | errors | tv-history");
  run_cmd->add_option("--output", target.path, "output path ('-' = stdout)");
  run_cmd->add_option("--format", target.format, "csv | json");
  run_cmd->add_option("--save-reference", save_reference, "also store the final field as a reference file");

  auto* conv_cmd = app.add_subcommand("convergence", "error table over a resolution sweep");
  CommonOpts conv_opts;
  conv_opts.add_without_n(conv_cmd);
  conv_cmd->add_option("--schemes", scheme_names, "comma-separated scheme list")->delimiter(',');
  conv_cmd->add_option("--n", ns, "resolutions (defaults to the preset's list)")->delimiter(',');
  conv_cmd->add_option("--output", target.path, "output path ('-' = stdout)");
  conv_cmd->add_option("--format", target.format, "csv | json");
  conv_cmd->add_option("--reference", reference_path, "reference solution file for error norms");

  auto* surf_cmd = app.add_subcommand("surface", "sample H(delta_minus, delta_plus) on a grid");
  surf_cmd->add_option("--scheme", surface_name, "scheme name")->required();
  surf_cmd->add_option("--min", lo, "lower slope bound");
  surf_cmd->add_option("--max", hi, "upper slope bound");
  surf_cmd->add_option("--points", points, "samples per axis");
  surf_cmd->add_option("--dx", surf_dx, "grid spacing seen by grid-aware schemes");
  surf_cmd->add_option("--alpha", surf_alpha, "alpha for h3l-c");
  surf_cmd->add_option("--eps", surf_eps, "epsilon coefficient for weno-yc");
  surf_cmd->add_option("--output", target.path, "output path ('-' = stdout)");
  surf_cmd->add_option("--format", target.format, "csv | json");

  auto* sect_cmd = app.add_subcommand("section", "sample H along delta_minus at fixed delta_plus");
  sect_cmd->add_option("--scheme", surface_name, "scheme name")->required();
  sect_cmd->add_option("--delta-plus", delta_plus, "fixed delta_plus values")->delimiter(',');
  sect_cmd->add_option("--min", lo, "lower delta_minus bound");
  sect_cmd->add_option("--max", hi, "upper delta_minus bound");
  sect_cmd->add_option("--points", points, "number of samples");
  sect_cmd->add_option("--dx", surf_dx, "grid spacing seen by grid-aware schemes");
  sect_cmd->add_option("--alpha", surf_alpha, "alpha for h3l-c");
  sect_cmd->add_option("--eps", surf_eps, "epsilon coefficient for weno-yc");
  sect_cmd->add_option("--output", target.path, "output path ('-' = stdout)");
  sect_cmd->add_option("--format", target.format, "csv | json");

  try {
    app.parse(argc, argv);
    if (target.format != "csv" && target.format != "json")
      throw ConfigError("--format must be csv or json");
    if (run_cmd->parsed()) return cmd_run(opts, target, out_what, save_reference);
    if (conv_cmd->parsed())
      return cmd_convergence(conv_opts, target, scheme_names, ns, reference_path);
    if (surf_cmd->parsed())
      return cmd_surface(surface_name, target, lo, hi, points, surf_dx, surf_alpha, surf_eps);
    if (sect_cmd->parsed())
      return cmd_section(surface_name, target, delta_plus, lo, hi, points, surf_dx, surf_alpha,
                         surf_eps);
    return 2;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  } catch (const PositivityError& e) {
    json diag;
    diag["error"] = "positivity-abort";
    diag["variable"] = e.variable;
    diag["value"] = e.value;
    diag["cell"] = e.cell;
    diag["step"] = e.step;
    diag["time"] = e.time;
    std::cerr << diag.dump() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
