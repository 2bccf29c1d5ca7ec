#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "fvlim/experiments.hpp"
#include "fvlim/solver.hpp"

using namespace fvlim;

TEST_CASE("rhs vanishes on constant data") {
  RunConfig c = preset("square-wave");
  prepare(c);
  c.n_cells = 16;
  CellField f(Grid1D(16, -1.0, 1.0), 1);
  for (int i = 0; i < 16; ++i) f(i) = 2.5;
  const CellField d = rhs(f, c.scheme, c.model, BoundaryCondition::periodic());
  for (int i = 0; i < 16; ++i) CHECK(d(i) == 0.0);

  // constant Euler state, transmissive walls
  CellField u(Grid1D(12, -2.0, 2.0), 3);
  const EulerConservative s = to_conservative({1.0, 0.3, 2.0}, 1.4);
  for (int i = 0; i < 12; ++i) {
    u(i, 0) = s.rho;
    u(i, 1) = s.mom;
    u(i, 2) = s.energy;
  }
  const CellField du = rhs(u, LimiterScheme::parse("h3l"), EulerModel{1.4},
                           BoundaryCondition::transmissive());
  for (int i = 0; i < 12; ++i)
    for (int c2 = 0; c2 < 3; ++c2) CHECK(du(i, c2) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("rhs is exact on linear data away from the boundary") {
  const int n = 32;
  Grid1D g(n, 0.0, 1.0);
  CellField f(g, 1);
  const double a0 = 2.0, b = 3.0;
  for (int i = 0; i < n; ++i) f(i) = a0 + b * g.center(i);
  const CellField d = rhs(f, LimiterScheme::parse("h3"), AdvectionModel{1.0},
                          BoundaryCondition::transmissive());
  for (int i = 2; i < n - 2; ++i) CHECK(d(i) == doctest::Approx(-b).epsilon(1e-12));
}

TEST_CASE("rhs telescopes to zero total mass change on periodic grids") {
  RunConfig c = preset("square-wave");
  c.n_cells = 64;
  CellField f = initial_field(c);
  for (const char* name : {"h3l", "weno-js", "weno-yc:eps=1", "h3l-c:alpha=0"}) {
    const CellField d = rhs(f, LimiterScheme::parse(name), c.model, BoundaryCondition::periodic());
    double sum = 0.0;
    for (int i = 0; i < 64; ++i) sum += d(i);
    CHECK(std::abs(sum) <= 1e-13);
  }
}

TEST_CASE("three-stage Runge-Kutta core") {
  // on du/dt = u one step reproduces the cubic Taylor polynomial
  const double one = ssp_rk3_step_scalar(1.0, 0.1, [](double u) { return u; });
  CHECK(one == doctest::Approx(1.1051666666666667).epsilon(1e-15));
  CHECK(ssp_rk3_step_scalar(4.2, 0.3, [](double) { return 0.0; }) == 4.2);

  // linearity on the field version with a linear right-hand side
  Grid1D g(24, -1.0, 1.0);
  CellField u(g, 1), v(g, 1);
  for (int i = 0; i < 24; ++i) {
    u(i) = std::sin(M_PI * g.center(i));
    v(i) = std::cos(3.0 * M_PI * g.center(i));
  }
  const LimiterScheme h3s = LimiterScheme::parse("h3");
  auto L = [&](const CellField& w) {
    CellField tmp = w;
    return rhs(tmp, h3s, AdvectionModel{1.0}, BoundaryCondition::periodic());
  };
  const CellField su = ssp_rk3_step(u, 0.01, L);
  const CellField sv = ssp_rk3_step(v, 0.01, L);
  CellField mix(g, 1);
  for (int i = 0; i < 24; ++i) mix(i) = 2.0 * u(i) - 0.5 * v(i);
  const CellField smix = ssp_rk3_step(mix, 0.01, L);
  for (int i = 0; i < 24; ++i)
    CHECK(smix(i) == doctest::Approx(2.0 * su(i) - 0.5 * sv(i)).epsilon(1e-12));
}

TEST_CASE("time integrator alone is third order") {
  // integrate du/dt = -u to t = 1
  auto err = [](double dt) {
    double u = 1.0, t = 0.0;
    while (t < 1.0 - 1e-14) {
      const double step = std::min(dt, 1.0 - t);
      u = ssp_rk3_step_scalar(u, step, [](double w) { return -w; });
      t += step;
    }
    return std::abs(u - std::exp(-1.0));
  };
  const std::vector<double> dts = {0.1, 0.05, 0.025};
  std::vector<double> xs, ys;
  for (double dt : dts) {
    xs.push_back(std::log(dt));
    ys.push_back(std::log(err(dt)));
  }
  const double mx = (xs[0] + xs[1] + xs[2]) / 3.0;
  const double my = (ys[0] + ys[1] + ys[2]) / 3.0;
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < 3; ++k) {
    num += (xs[k] - mx) * (ys[k] - my);
    den += (xs[k] - mx) * (xs[k] - mx);
  }
  const double order = num / den;
  CHECK(order == doctest::Approx(3.0).epsilon(0.05 / 3.0));
}

TEST_CASE("time step from the CFL condition") {
  {
    Grid1D g(100, 0.0, 1.0);
    CellField f(g, 1);
    CHECK(compute_dt(f, AdvectionModel{1.0}, 0.8) == doctest::Approx(0.008).epsilon(1e-15));
    CHECK_THROWS(compute_dt(f, AdvectionModel{0.0}, 0.8));
  }
  {
    RunConfig c = preset("sod");
    const CellField f = initial_field(c);
    CHECK(compute_dt(f, c.model, 0.95) ==
          doctest::Approx(0.95 * 0.04 / std::sqrt(1.4)).epsilon(1e-14));
  }
}

TEST_CASE("run: zero-speed problems return the initial field") {
  RunConfig c = preset("square-wave");
  c.model = AdvectionModel{0.0};
  c.n_cells = 20;
  const CellField init = initial_field(c);
  const RunResult r = run(c);
  CHECK(r.t == c.t_end);
  CHECK(r.steps == 0);
  CHECK(r.field.bitwise_equal(init));
}

TEST_CASE("run: the final step is clipped to land on t_end") {
  RunConfig c = preset("square-wave");
  c.x_left = 0.0;
  c.x_right = 1.0;
  c.ic = ic::sine();  // domain differs; rescale to [0, 1]
  c.ic.x_left = 0.0;
  c.ic.x_right = 1.0;
  c.ic.value = [](double x) { return std::sin(2.0 * M_PI * x); };
  c.n_cells = 100;
  c.cfl = 0.8;
  c.t_end = 0.02;  // dt = 0.008 -> steps 0.008, 0.008, 0.004
  c.record_tv = false;
  const RunResult r = run(c);
  CHECK(r.steps == 3);
  CHECK(r.t == c.t_end);
}

TEST_CASE("run conserves the discrete mass on periodic domains") {
  {
    RunConfig c = preset("square-wave");
    c.n_cells = 100;
    c.t_end = 8.0;  // dt = 0.016, so 500 steps
    for (const char* name : {"h3l", "weno-js", "h3l-c:alpha=0"}) {
      c.scheme = LimiterScheme::parse(name);
      const double m0 = total_mass(initial_field(c));
      const RunResult r = run(c);
      CHECK(std::abs(total_mass(r.field) - m0) <= 1e-12 * std::max(1.0, std::abs(m0)));
      CHECK(r.steps == 500);
    }
  }
  {
    // periodic Euler: every conserved component
    RunConfig c = preset("sod");
    c.bc = BoundaryCondition::Kind::Periodic;
    c.t_end = 0.3;
    c.scheme = LimiterScheme::parse("h3l");
    const CellField init = initial_field(c);
    const RunResult r = run(c);
    for (int comp = 0; comp < 3; ++comp) {
      const double m0 = total_mass(init, comp);
      CHECK(std::abs(total_mass(r.field, comp) - m0) <= 1e-12 * std::max(1.0, std::abs(m0)));
    }
  }
}

TEST_CASE("run is deterministic") {
  RunConfig c = preset("square-wave");
  c.n_cells = 80;
  c.t_end = 1.0;
  c.scheme = LimiterScheme::parse("weno-yc:eps=1");
  const RunResult a = run(c);
  const RunResult b = run(c);
  CHECK(a.field.bitwise_equal(b.field));
  CHECK(a.steps == b.steps);
}

TEST_CASE("run aborts with full context when a state degenerates") {
  RunConfig c = preset("sod");
  c.scheme = LimiterScheme::parse("h3l");
  // start from a profile whose pressure is about to cross zero
  c.ic.primitive = [](double x) {
    return x < 0.0 ? EulerPrimitive{1.0, -2.0, 0.001} : EulerPrimitive{1.0, 2.0, 0.001};
  };
  c.ic.breakpoints = {0.0};
  try {
    run(c);
    FAIL("expected a positivity abort");
  } catch (const PositivityError& e) {
    CHECK(e.variable == "pressure");
    CHECK(e.step >= 1);
    CHECK(e.cell >= 0);
    CHECK(std::isfinite(e.time));
  }
}

TEST_CASE("reference solutions: save, load, provenance, coarsening") {
  ReferenceSolution ref;
  ref.scheme = "h3l";
  ref.n = 4;
  ref.t_end = 0.5;
  ref.gamma = 0.0;
  ref.config_hash = "00ff";
  ref.x_left = 0.0;
  ref.x_right = 1.0;
  ref.components = 1;
  ref.values = {1.0, 3.0, 5.0, 7.0};

  const CellField half = ref.restrict_to(Grid1D(2, 0.0, 1.0));
  CHECK(half(0) == 2.0);
  CHECK(half(1) == 6.0);
  CHECK_THROWS(ref.restrict_to(Grid1D(8, 0.0, 1.0)));
  CHECK_THROWS(ref.restrict_to(Grid1D(2, 0.0, 2.0)));

  ReferenceSolution three = ref;
  three.n = 3;
  three.values = {1.0, 2.0, 3.0};
  const CellField two = three.restrict_to(Grid1D(2, 0.0, 1.0));
  CHECK(two(0) == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
  CHECK(two(1) == doctest::Approx(8.0 / 3.0).epsilon(1e-14));

  const std::string path = "ref_roundtrip_test.txt";
  ref.values = {0.1, std::sqrt(2.0), -1.0 / 3.0, 7e-17};
  ref.save(path);
  const ReferenceSolution back = ReferenceSolution::load(path);
  CHECK(back.values == ref.values);
  CHECK(back.scheme == ref.scheme);
  CHECK(back.t_end == ref.t_end);
  CHECK(back.config_hash == ref.config_hash);
  CHECK_THROWS(ReferenceSolution::load_checked(path, "deadbeef"));
  std::remove(path.c_str());
}

TEST_CASE("run captures snapshots at requested times") {
  RunConfig c = preset("square-wave");
  c.n_cells = 40;
  c.t_end = 1.0;
  c.snapshot_times = {0.0, 0.5, 1.0};
  const RunResult r = run(c);
  REQUIRE(r.snapshots.size() == 3);
  CHECK(r.snapshots[0].first == 0.0);
  CHECK(r.snapshots[0].second.bitwise_equal(initial_field(c)));
  CHECK(r.snapshots[1].first >= 0.5);
  CHECK(r.snapshots[1].first < 0.5 + 0.05);
  CHECK(r.snapshots[2].first == 1.0);
  CHECK(r.snapshots[2].second.bitwise_equal(r.field));
}

TEST_CASE("open boundaries are immaterial: edge cells keep their initial state") {
  // both shock problems end before any wave reaches the boundary
  {
    RunConfig c = preset("sod");
    const CellField init = initial_field(c);
    const RunResult r = run(c);
    for (int i : {0, c.n_cells - 1})
      for (int comp = 0; comp < 3; ++comp)
        CHECK(std::abs(r.field(i, comp) - init(i, comp)) <= 1e-12);
  }
  {
    // No wave reaches either edge: momentum and energy stay at their initial
    // values (the left-edge precursor sits at the 1e-8 level on this coarse
    // grid). The density at the right edge carries the local smearing the
    // zero-gradient ghost induces on the sine profile; that artifact is
    // common to every scheme and stays confined near the edge.
    RunConfig c = preset("shu-osher");
    c.n_cells = 320;
    const CellField init = initial_field(c);
    const RunResult r = run(c);
    for (int i : {0, c.n_cells - 1})
      for (int comp = 1; comp < 3; ++comp)
        CHECK(std::abs(r.field(i, comp) - init(i, comp)) <=
              1e-6 * std::max(1.0, std::abs(init(i, comp))));
    CHECK(std::abs(r.field(0, 0) - init(0, 0)) <= 1e-6);
    CHECK(std::abs(r.field(c.n_cells - 1, 0) - init(c.n_cells - 1, 0)) <= 0.05);
  }
}

TEST_CASE("the smooth-profile run matches its stored snapshot") {
  RunConfig c = preset("smooth-bump");  // n = 170, h3l-c
  const RunResult r = run(c);
  std::ifstream golden(std::string(FVLIM_TEST_DATA_DIR) + "/golden_bump_n170_h3l-c.csv");
  REQUIRE(golden.good());
  std::string line;
  std::getline(golden, line);  // header
  int i = 0;
  while (std::getline(golden, line)) {
    const auto comma = line.find(',');
    REQUIRE(comma != std::string::npos);
    const double x = std::stod(line.substr(0, comma));
    const double u = std::stod(line.substr(comma + 1));
    CHECK(std::abs(r.field.grid().center(i) - x) <= 1e-15);
    CHECK(std::abs(r.field(i) - u) <= 1e-12);
    ++i;
  }
  CHECK(i == 170);
}

TEST_CASE("make_reference ties the persisted grid to the run") {
  RunConfig c = preset("square-wave");
  c.n_cells = 20;
  c.t_end = 0.5;
  c.reference_n = 40;
  const ReferenceSolution ref = make_reference(c);
  CHECK(ref.n == 40);
  CHECK(ref.components == 1);
  CHECK(ref.config_hash.size() == 16);
  const CellField coarse = ref.restrict_to(Grid1D(20, -1.0, 1.0));
  CHECK(coarse.grid().n == 20);
}
