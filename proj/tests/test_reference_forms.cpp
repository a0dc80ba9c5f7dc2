#include <algorithm>
#include <cmath>
#include <random>

#include <doctest.h>

#include "cvs/errors.hpp"
#include "cvs/reference_forms.hpp"

using namespace cvs;
using namespace cvs::reference;

TEST_CASE("transcribed reduced matrices agree with the pipeline") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ds(0.0, 2.0), dx(0.0, 50.0);
  for (int i = 0; i < 20; ++i) {
    const double s = ds(rng), x = dx(rng);
    for (Scenario sc : {Scenario::Unilateral, Scenario::Bilateral}) {
      const ChannelOutput out = apply_channel(sc, s, FieldParams{x});
      for (const ModePair& p : scenario_pairs(sc)) {
        const auto printed = printed_reduced_cm(s, FieldParams{x}, sc, p);
        if (!printed) continue;
        const TwoModeStdForm got = reduce_pair(out, p);
        CHECK(std::abs(got.a - printed->state.a) < 1e-12 * std::max(1.0, got.a));
        CHECK(std::abs(got.b - printed->state.b) < 1e-12 * std::max(1.0, got.b));
        CHECK(std::abs(got.c1 - printed->state.c1) < 1e-12 * std::max(1.0, got.a));
        CHECK(std::abs(got.c2 - printed->state.c2) < 1e-12 * std::max(1.0, got.a));
      }
    }
  }
}

TEST_CASE("mutual information references that are transcribed correctly") {
  for (double x : {0.5, 1.0, 3.0, 40.0}) {
    for (const ModePair& p : scenario_pairs(Scenario::Unilateral)) {
      const ReferenceValue ref =
          reference_correlation(1.0, FieldParams{x}, Scenario::Unilateral, p, Family::Renyi2, Measure::MutualInfo);
      const double got = mutual_information_renyi2(reduce_pair(apply_unilateral(1.0, FieldParams{x}), p));
      CHECK(std::abs(ref.value - got) < 1e-10);
    }
  }
}

TEST_CASE("crosscheck report structure") {
  const DiscrepancyReport zero = crosscheck(1.0, FieldParams{0.0});
  CHECK(zero.tolerance == kCrosscheckTol);
  CHECK_FALSE(zero.entries.empty());
  const std::vector<std::string> flagged0 = zero.flagged_equations();
  CHECK(flagged0 == std::vector<std::string>{"QQ13", "QQ14", "QQ15"});

  const DiscrepancyReport one = crosscheck(1.0, FieldParams{1.0});
  const auto eqs = one.flagged_equations();
  for (const char* tag : {"QQ9", "QQ13", "w16", "w20", "Q17", "Q19"}) {
    CHECK(std::find(eqs.begin(), eqs.end(), tag) != eqs.end());
  }
  for (const auto& e : one.entries) {
    if (e.quantity.rfind("cm.", 0) == 0) CHECK_FALSE(e.flagged);
  }
}

TEST_CASE("unsupported references throw") {
  CHECK_FALSE(has_reference(Scenario::Bilateral, {kModeMinusP, kModeQ}, Family::VonNeumann, Measure::MutualInfo));
  CHECK_THROWS_AS(reference_correlation(1.0, FieldParams{1.0}, Scenario::Bilateral, {kModeMinusP, kModeQ},
                                        Family::VonNeumann, Measure::MutualInfo),
                  DomainError);
}
