#include <cmath>

#include <doctest.h>

#include "cvs/errors.hpp"
#include "cvs/renyi2_measures.hpp"
#include "cvs/schwinger_channel.hpp"

using namespace cvs;
using doctest::Approx;

TEST_CASE("Renyi-2 entropy") {
  CHECK(entropy_renyi2(Eigen::MatrixXd::Identity(4, 4)) == Approx(0.0).scale(1.0));
  CHECK(entropy_renyi2(tmsv(1.3).matrix()) == Approx(0.0).scale(1.0).epsilon(1e-12));
  const double s = 0.9;
  Eigen::MatrixXd marginal = Eigen::MatrixXd::Identity(2, 2) * std::cosh(2 * s);
  CHECK(entropy_renyi2(marginal) == Approx(std::log(std::cosh(2 * s))).epsilon(1e-14));
}

TEST_CASE("Renyi-2 entanglement") {
  CHECK(entanglement_renyi2(TwoModeStdForm{2.0, 3.0, 0.0, 0.0}) == 0.0);
  for (double s : {0.1, 0.5, 1.0, 2.0}) {
    CHECK(entanglement_renyi2(tmsv(s)) == Approx(std::log(std::cosh(2 * s))).epsilon(1e-8));
  }
  // Monotone decrease with a nonzero asymptote for the unilateral (p, q) pair.
  double prev = entanglement_renyi2(tmsv(1.0));
  for (double x : {0.5, 1.0, 2.0, 5.0, 20.0, 100.0, 1000.0}) {
    const double e = entanglement_renyi2(reduce_pair(apply_unilateral(1.0, FieldParams{x}), {kModeP, kModeQ}));
    CHECK(e <= prev + 1e-12);
    CHECK(e > 0.1);
    prev = e;
  }
  CHECK(entanglement_renyi2(reduce_pair(apply_unilateral(1.0, FieldParams{3.0}), {kModeP, kModeQ})) ==
        Approx(0.5331105459).epsilon(1e-9));
  CHECK(entanglement_renyi2(reduce_pair(apply_unilateral(1.0, FieldParams{1.0}), {kModeP, kModeMinusQ})) == 0.0);
}

TEST_CASE("bilateral Renyi-2 entanglement matches the symmetric-state closed form") {
  // For a symmetric state the optimum is ln[(1 + mu^2) / (2 mu)], mu the PT eigenvalue.
  const TwoModeStdForm sf = reduce_pair(apply_bilateral(1.0, FieldParams{3.0}), {kModeP, kModeQ});
  const double mu = symplectic_eigenvalues(sf, true).first;
  CHECK(entanglement_renyi2(sf) == Approx(std::log((1 + mu * mu) / (2 * mu))).epsilon(1e-9));
}

TEST_CASE("Renyi-2 discord") {
  const Renyi2DiscordDetail prod = discord_renyi2_detail(TwoModeStdForm{2.0, 3.0, 0.0, 0.0}, Direction::AGivenB);
  CHECK(prod.value == Approx(0.0).scale(1.0).epsilon(1e-14));
  for (double s : {0.25, 0.75, 1.5}) {
    CHECK(discord_renyi2(tmsv(s), Direction::AGivenB) == Approx(std::log(std::cosh(2 * s))).epsilon(1e-10));
    CHECK(discord_renyi2(tmsv(s), Direction::BGivenA) == Approx(std::log(std::cosh(2 * s))).epsilon(1e-10));
  }
  const TwoModeStdForm far = reduce_pair(apply_unilateral(1.0, FieldParams{1000.0}), {kModeP, kModeQ});
  CHECK(discord_renyi2(far, Direction::AGivenB) > 0.1);
}

TEST_CASE("Renyi-2 mutual information conservation") {
  CHECK(mutual_information_renyi2(TwoModeStdForm{2.0, 3.0, 0.0, 0.0}) == Approx(0.0).scale(1.0).epsilon(1e-14));
  const double s = 1.0;
  CHECK(mutual_information_renyi2(tmsv(s)) == Approx(2 * std::log(std::cosh(2 * s))).epsilon(1e-13));
  for (double x : {0.3, 1.0, 7.0, 300.0}) {
    const ChannelOutput out = apply_unilateral(s, FieldParams{x});
    const double total = mutual_information_renyi2(reduce_pair(out, {kModeP, kModeQ})) +
                         mutual_information_renyi2(reduce_pair(out, {kModeP, kModeMinusQ}));
    CHECK(total == Approx(2 * std::log(std::cosh(2 * s))).epsilon(1e-12));
  }
}
