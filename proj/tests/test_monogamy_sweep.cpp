#include <cmath>

#include <doctest.h>

#include "cvs/errors.hpp"
#include "cvs/monogamy_sweep.hpp"

using namespace cvs;
using doctest::Approx;

TEST_CASE("monogamy scores vanish at zero field") {
  for (Scenario sc : {Scenario::Unilateral, Scenario::Bilateral}) {
    for (Family f : kFamilies) {
      for (Measure m : kMeasures) {
        const double v = sc == Scenario::Unilateral ? monogamy_unilateral(1.0, FieldParams{0.0}, f, m)
                                                    : monogamy_bilateral(1.0, FieldParams{0.0}, f, m);
        CHECK(std::abs(v) < 1e-12);
      }
    }
  }
}

TEST_CASE("Renyi-2 mutual information is conserved unilaterally") {
  for (double x : {0.1, 1.0, 10.0, 1000.0}) {
    CHECK(std::abs(monogamy_unilateral(1.0, FieldParams{x}, Family::Renyi2, Measure::MutualInfo)) < 1e-10);
  }
}

TEST_CASE("signs of the monogamy scores") {
  for (double x : {0.5, 1.0, 5.0, 100.0}) {
    CHECK(monogamy_unilateral(1.0, FieldParams{x}, Family::VonNeumann, Measure::DiscordAB) >= 0.0);
    CHECK(monogamy_bilateral(1.0, FieldParams{x}, Family::Renyi2, Measure::MutualInfo) < 0.0);
  }
}

TEST_CASE("sudden death") {
  const SuddenDeath sd = find_sudden_death(1.0);
  CHECK(sd.x_root == Approx(11.5354913305798).epsilon(1e-9));
  CHECK(sd.rel_diff < 1e-10);
  CHECK(sd.x_coth == Approx(sd.x_closed_form).epsilon(1e-12));
  CHECK_FALSE(sudden_death_root(1.0, Scenario::Unilateral).has_value());
  CHECK_THROWS_AS(find_sudden_death(1.0, Scenario::Unilateral), NumericalError);
  CHECK_THROWS_AS(find_sudden_death(0.0), DomainError);
  CHECK(find_sudden_death(2.0).x_root > sd.x_root);
}

TEST_CASE("grid specification") {
  const GridSpec g = GridSpec::parse("0.5:2:4:lin");
  CHECK(g.values() == std::vector<double>{0.5, 1.0, 1.5, 2.0});
  const GridSpec lg = GridSpec::parse("1:1000:4:log");
  const auto v = lg.values();
  CHECK(v.front() == 1.0);
  CHECK(v.back() == 1000.0);
  CHECK(v[1] == Approx(10.0));
  CHECK_THROWS_AS(GridSpec::parse("1:2:1:log"), DomainError);
  CHECK_THROWS_AS(GridSpec::parse("0:2:5:log"), DomainError);
  CHECK_THROWS_AS(GridSpec::parse("1:2:5"), DomainError);
  CHECK_THROWS_AS(GridSpec::parse("3:2:5:lin"), DomainError);
}

TEST_CASE("sweep configuration and records") {
  SweepConfig cfg = SweepConfig::defaults(Scenario::Unilateral, 1.0);
  cfg.grid = GridSpec::parse("0.1:10:2:log");
  const auto recs = run_sweep(cfg);
  CHECK(recs.size() == 2);
  CHECK(recs[0].reports.size() == cfg.pairs.size());
  CHECK(recs[0].monogamy.size() == 4 * cfg.families.size());

  SweepConfig empty = cfg;
  empty.pairs.clear();
  CHECK_THROWS_AS(empty.validate(), DomainError);
  SweepConfig wrong = cfg;
  wrong.pairs = {{kModeMinusP, kModeQ}};
  CHECK_THROWS_AS(wrong.validate(), DomainError);
}

TEST_CASE("parallel sweep is bitwise identical to the serial reference") {
  for (Scenario sc : {Scenario::Unilateral, Scenario::Bilateral}) {
    SweepConfig cfg = SweepConfig::defaults(sc, 0.8);
    cfg.grid.count = 64;
    cfg.parallelism = 4;
    const auto par = run_sweep(cfg);
    const auto ser = run_sweep_serial(cfg);
    REQUIRE(par.size() == ser.size());
    for (std::size_t i = 0; i < par.size(); ++i) {
      CHECK(par[i].x == ser[i].x);
      for (std::size_t j = 0; j < par[i].monogamy.size(); ++j) {
        CHECK(par[i].monogamy[j].value == ser[i].monogamy[j].value);
      }
      for (std::size_t p = 0; p < par[i].reports.size(); ++p) {
        for (Family f : kFamilies) {
          for (Measure m : kMeasures) CHECK(par[i].reports[p].value(f, m) == ser[i].reports[p].value(f, m));
        }
      }
    }
  }
}

TEST_CASE("von Neumann mutual information crossing") {
  // At s = 1 the bilateral score is non-positive on the whole grid.
  CHECK_FALSE(vn_mutual_info_crossing(1.0, Scenario::Bilateral, GridSpec{}).has_value());
}
