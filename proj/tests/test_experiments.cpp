#include <doctest.h>

#include <cmath>
#include <random>

#include "fvlim/config.hpp"
#include "fvlim/experiments.hpp"
#include "fvlim/textio.hpp"

using namespace fvlim;

TEST_CASE("preset catalog values") {
  CHECK(preset("sod").t_end == 0.8);
  CHECK(preset("sod").cfl == 0.95);
  CHECK(preset("smooth-bump").alpha == 493.48);
  CHECK(preset("smooth-bump").yc_coefficient == 20.67);
  CHECK(preset("square-wave").alpha == 0.0);
  CHECK(preset("square-wave").yc_coefficient == 1.0);
  CHECK(preset("square-wave-100").yc_coefficient == 20201.0);
  CHECK(preset("mixed-features").alpha == 8887.87);
  CHECK(preset("mixed-features").yc_coefficient == 1042.83);
  CHECK(preset("mixed-features").error_range->first == 0.4);
  CHECK(preset("shu-osher").alpha == 5.0);
  CHECK(preset("shu-osher").yc_coefficient == 21.932);
  CHECK(preset("shu-osher").reference_n == 10000);
  CHECK(preset("smooth-bump").sweep_n.size() == 13);
  CHECK_THROWS(preset("no-such-preset"));
  CHECK(preset_names().size() == 9);
}

TEST_CASE("the preset catalog is frozen") {
  // recompute the canonical serialization and compare its checksum; any edit
  // to a preset must update this constant deliberately
  CHECK(preset_catalog_checksum() == 0x7777f5d7d26a8fbfULL);
}

TEST_CASE("preparing a run derives unset smoothness constants from the profile") {
  RunConfig c = preset("prelim-weno-yc-eps-scan");
  CHECK(c.scheme.needs_epsilon_coefficient());
  prepare(c);
  CHECK(c.scheme.eps.value == doctest::Approx(M_PI * M_PI).epsilon(1e-9));

  RunConfig h = preset("smooth-bump");
  prepare(h);
  CHECK(h.scheme.alpha == 493.48);  // experiment constant wins over derivation

  RunConfig d = preset("smooth-bump");
  d.alpha = std::numeric_limits<double>::quiet_NaN();
  prepare(d);
  CHECK(std::abs(d.scheme.alpha - 493.48) < 5e-3);  // derived from the profile
}

TEST_CASE("shifting the square wave by a constant shifts the solution by the same constant") {
  for (const char* name : {"h3l-c", "weno-js"}) {
    RunConfig base = preset("square-wave");
    base.n_cells = 80;
    base.scheme = LimiterScheme::parse(name);
    RunConfig shifted = preset("square-wave-100");
    shifted.n_cells = 80;
    shifted.scheme = LimiterScheme::parse(name);
    const RunResult a = run(base);
    const RunResult b = run(shifted);
    for (int i = 0; i < 80; ++i) CHECK(std::abs(b.field(i) - 100.0 - a.field(i)) <= 1e-10);
  }
}

TEST_CASE("sweep collects error tables and records failures without stopping") {
  RunConfig base = preset("square-wave");
  base.t_end = 1.0;
  const auto rows = sweep(base, {LimiterScheme::parse("h3l")}, {40, 80});
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].status == "ok");
  CHECK(rows[0].l1 > 0.0);
  CHECK(std::isnan(rows[0].order_l1));
  CHECK(std::isfinite(rows[1].order_l1));
  CHECK(rows[1].l1 < rows[0].l1);

  // a failing run is recorded in its row, the rest of the sweep continues
  RunConfig bad = preset("sod");
  bad.t_end = 0.1;
  bad.ic.primitive = [](double x) {
    return x < 0.0 ? EulerPrimitive{1.0, -2.0, 0.001} : EulerPrimitive{1.0, 2.0, 0.001};
  };
  const auto rows2 = sweep(bad, {LimiterScheme::parse("h3l")}, {100, 200});
  REQUIRE(rows2.size() == 2);
  CHECK(rows2[0].status != "ok");
  CHECK(rows2[0].status.find("pressure") != std::string::npos);
}

TEST_CASE("scheme names parse and round-trip") {
  for (const char* name : {"h3", "ct", "ct-tvd", "h3l"})
    CHECK(LimiterScheme::parse(name).name() == name);
  CHECK(LimiterScheme::parse("as:q=1.4").name() == "as:q=1.4");
  CHECK(LimiterScheme::parse("ct-c:r=2").ct_radius == 2.0);
  CHECK(LimiterScheme::parse("h3l-c:alpha=5").alpha == 5.0);
  CHECK(std::isnan(LimiterScheme::parse("h3l-c").alpha));
  CHECK(LimiterScheme::parse("weno-js").eps.value == 1e-6);
  CHECK(LimiterScheme::parse("weno-js:eps=1e-4,p=3").weno.power_p == 3);
  CHECK(LimiterScheme::parse("weno-pow:K=1,q=2").eps.kind == EpsilonPolicy::Kind::PowerLaw);
  CHECK(std::isnan(LimiterScheme::parse("weno-yc").eps.value));
  CHECK_THROWS(LimiterScheme::parse("nope"));
  CHECK_THROWS(LimiterScheme::parse("as:q=-1"));
  CHECK_THROWS(LimiterScheme::parse("h3:bogus=1"));
  CHECK_THROWS(LimiterScheme::parse("ct-c:r=0"));
}

TEST_CASE("config files") {
  const std::string text = R"(# experiment description
[run]
preset = sod
scheme = weno-yc
eps = 2.25      # coefficient of dx^2
n = 50

[output]
record_tv = true
)";
  const RunConfig c = parse_config_text(text);
  CHECK(c.name == "sod");
  CHECK(c.n_cells == 50);
  CHECK(c.scheme.kind == LimiterKind::WenoYC);
  CHECK(c.yc_coefficient == 2.25);
  CHECK(c.record_tv);

  CHECK_THROWS_AS(parse_config_text("bogus_key = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("n = -5\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("cfl = 1.5\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("just a line\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("gamma = 1.4\n"), ConfigError);  // advection by default

  const RunConfig base = parse_config_text("ic = sine\nscheme = h3\nn = 40\ncfl = 0.9\nt_end = 1\n");
  CHECK(base.x_left == -1.0);
  CHECK(base.n_cells == 40);
}

TEST_CASE("decimal text round-trips doubles bit-exactly") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  auto roundtrip = [](double v) {
    const std::string s = fmt17(v);
    return std::strtod(s.c_str(), nullptr);
  };
  for (int it = 0; it < 10000; ++it) {
    const double v = u(rng);
    CHECK(roundtrip(v) == v);
  }
  for (double v : {0.1, -1.0 / 3.0, 1e-300, -2.5e300, 4e-320, 0.0}) CHECK(roundtrip(v) == v);
}
