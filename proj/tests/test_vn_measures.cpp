#include <cmath>
#include <numbers>

#include <doctest.h>

#include "cvs/errors.hpp"
#include "cvs/schwinger_channel.hpp"
#include "cvs/vn_measures.hpp"

using namespace cvs;
using doctest::Approx;

TEST_CASE("thermal entropy function") {
  CHECK(f_vn(1.0) == 0.0);
  CHECK(f_vn(3.0) == Approx(2.0).epsilon(1e-15));
  CHECK(f_vn(1.0 - 1e-10) == 0.0);
  CHECK_THROWS_AS(f_vn(0.5), DomainError);
  // Base change rescales uniformly.
  CHECK(f_vn(4.0, kLogBaseNats) == Approx(f_vn(4.0) * std::numbers::ln2).epsilon(1e-14));
}

TEST_CASE("logarithmic negativity") {
  CHECK(log_negativity(TwoModeStdForm{}) == 0.0);
  for (double s : {0.25, 0.5, 1.0, 2.0}) {
    CHECK(pt_min_symplectic_eigenvalue(tmsv(s)) == Approx(std::exp(-2.0 * s)).epsilon(1e-12));
    CHECK(log_negativity(tmsv(s)) == Approx(2.0 * s / std::numbers::ln2).epsilon(1e-12));
  }
  for (double x : {0.1, 1.0, 10.0, 100.0}) {
    const ChannelOutput out = apply_unilateral(1.0, FieldParams{x});
    CHECK(log_negativity(reduce_pair(out, {kModeP, kModeMinusQ})) == 0.0);
  }
}

TEST_CASE("exact PPT test") {
  CHECK(is_ppt(TwoModeStdForm{2.0, 3.0, 0.5, 0.5}));
  CHECK(is_ppt(TwoModeStdForm{2.0, 3.0, 0.0, -0.5}));
  CHECK_FALSE(is_ppt(tmsv(0.3)));
}

TEST_CASE("mutual information") {
  CHECK(mutual_information_vn(TwoModeStdForm{2.0, 3.0, 0.0, 0.0}) == Approx(0.0).scale(1.0).epsilon(1e-14));
  for (double s : {0.3, 1.0}) {
    CHECK(mutual_information_vn(tmsv(s)) == Approx(2.0 * f_vn(std::cosh(2.0 * s))).epsilon(1e-12));
  }
}

TEST_CASE("discord") {
  const TwoModeStdForm prod{2.0, 3.0, 0.0, 0.0};
  CHECK(discord_vn(prod, Direction::AGivenB) == Approx(0.0).scale(1.0).epsilon(1e-14));
  CHECK(discord_vn(prod, Direction::BGivenA) == Approx(0.0).scale(1.0).epsilon(1e-14));
  CHECK(discord_epsilon(prod, Direction::AGivenB) == Approx(2.0));

  // Pure state: discord equals the marginal entropy.
  const double s = 0.7;
  CHECK(discord_vn(tmsv(s), Direction::AGivenB) == Approx(f_vn(std::cosh(2 * s))).epsilon(1e-10));

  for (double x : {0.5, 1.0, 5.0}) {
    const TwoModeStdForm bi = reduce_pair(apply_bilateral(1.0, FieldParams{x}), {kModeP, kModeQ});
    CHECK(discord_vn(bi, Direction::AGivenB) ==
          Approx(discord_vn(bi, Direction::BGivenA)).epsilon(1e-12));
    const TwoModeStdForm uni = reduce_pair(apply_unilateral(1.0, FieldParams{x}), {kModeP, kModeQ});
    CHECK(std::abs(discord_vn(uni, Direction::AGivenB) - discord_vn(uni, Direction::BGivenA)) > 1e-6);
  }
}

TEST_CASE("report bundles all measures") {
  const TwoModeStdForm sf = tmsv(0.4);
  const VnReport r = vn_report(sf, kLogBaseNats);
  CHECK(r.log_base == kLogBaseNats);
  CHECK(r.negativity == log_negativity(sf, kLogBaseNats));
  CHECK(r.mutual_info == mutual_information_vn(sf, kLogBaseNats));
}
