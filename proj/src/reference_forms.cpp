#include "cvs/reference_forms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "cvs/errors.hpp"

namespace cvs::reference {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Entropy function in bits; NaN instead of an exception so that a broken
// closed form shows up as a flagged entry.
double f(double x) {
  if (!(x >= 1.0 - 1e-9)) return kNaN;
  return f_vn(std::max(x, 1.0), kLogBaseBits);
}

double negativity(double interior) { return std::max(0.0, interior); }

// Shorthands shared by all transcribed expressions.
struct Symbols {
  double C, S, C4, ch, sh;  // cosh 2s, sinh 2s, cosh 4s, cosh s, sinh s
  double a1, b1, a2, b2;    // |alpha|, |beta|, |alpha|^2, |beta|^2
  double zeta, xi, eta;

  Symbols(double s, const FieldParams& fp) {
    const BogoliubovCoeffs bc = bogoliubov(fp);
    C = std::cosh(2 * s);
    S = std::sinh(2 * s);
    C4 = std::cosh(4 * s);
    ch = std::cosh(s);
    sh = std::sinh(s);
    a2 = bc.alpha_sq;
    b2 = bc.beta_sq;
    a1 = std::sqrt(a2);
    b1 = std::sqrt(b2);
    zeta = C * a2 + b2;
    xi = a2 + b2 * C;
    eta = 1 + 2 * b2 * ch;
  }

  // unilateral (p,-q) symplectic eigenvalues as transcribed
  double nu(int sign) const {
    const double delta = C * C + xi * xi - 2 * b2 * S * S;
    return std::sqrt(delta + sign * std::sqrt(delta * delta - 4 * zeta)) / std::sqrt(2.0);
  }
  double eps1() const { return (b2 + (b2 + 2) * C) / (2 + (1 + C) * b2); }
  double eps2() const { return 2 * b2 + 1; }

  double chi() const { return (a2 + b2) * (a2 + b2) + 4 * a2 * a2 * b2 * b2; }
  double tau() const { return 0.5 * std::sqrt(3 + 8 * C * a2 * b2 + chi()); }
  // bilateral (p,-q) symplectic eigenvalues as transcribed
  double nu_prime(int sign) const {
    return 0.5 * std::sqrt(2 + C4 + chi() + 8 * C * a2 * b2 +
                           sign * 4 * std::sqrt(2.0) * ch * sh * sh * std::sqrt(C + chi()));
  }
  double eps3() const {
    return (C * C * a2 * b2 + (1 - 0.5 * (C4 - 3) * a2) * b2 + C * (a2 + a2 * a2 + b2 * b2)) /
           (1 + xi);
  }
  double eps4() const { return (a2 * a2 + b2 * b2 + 2 * C * a2 * b2 + xi) / (1 + xi); }
};

enum class PairId { PQ, PMinusQ, MinusPQ, MinusPMinusQ };

PairId pair_id(const ModePair& pair) {
  const bool p_first = pair.first == kModeP;
  const bool q_second = pair.second == kModeQ;
  if (p_first) return q_second ? PairId::PQ : PairId::PMinusQ;
  return q_second ? PairId::MinusPQ : PairId::MinusPMinusQ;
}

bool canonical_pair(const ModePair& pair) {
  return (pair.first == kModeP || pair.first == kModeMinusP) &&
         (pair.second == kModeQ || pair.second == kModeMinusQ);
}

std::optional<ReferenceValue> lookup(const Symbols* v, Scenario scenario, const ModePair& pair,
                                     Family family, Measure measure) {
  if (!canonical_pair(pair)) return std::nullopt;
  const PairId id = pair_id(pair);
  // With v == nullptr only availability is answered.
  auto val = [&](auto&& expr, const char* eq) -> std::optional<ReferenceValue> {
    if (v == nullptr) return ReferenceValue{0.0, eq};
    return ReferenceValue{expr(), eq};
  };

  if (scenario == Scenario::Unilateral) {
    if (id == PairId::PQ) {
      if (family == Family::Renyi2) {
        if (measure != Measure::MutualInfo) return std::nullopt;
        return val([&] { return std::log(v->zeta * v->C / v->xi); }, "Q15");
      }
      switch (measure) {
        case Measure::Negativity:
          return val(
              [&] {
                const double inner =
                    v->C * v->C + 2 * v->a2 * v->S * v->S + v->zeta * v->zeta -
                    2 * (v->C + v->zeta) *
                        std::sqrt(std::pow(v->ch, 4) * v->b2 * v->b2 + v->a2 * v->S * v->S);
                return negativity(0.5 - 0.5 * std::log2(inner));
              },
              "QQ8");
        case Measure::DiscordAB: return val([&] { return f(v->zeta) - f(v->eta); }, "QQ9");
        case Measure::DiscordBA:
          return val([&] { return f(v->C) + f(1 + 2 * v->b2) - f(v->eta); }, "QQ10");
        case Measure::MutualInfo:
          return val([&] { return f(v->C) + f(v->zeta) - f(v->eta); }, "QQ11");
      }
    }
    if (id == PairId::PMinusQ) {
      if (family == Family::Renyi2) {
        if (measure != Measure::MutualInfo) return std::nullopt;
        return val([&] { return std::log(v->xi * v->C / v->zeta); }, "Q16");
      }
      switch (measure) {
        case Measure::Negativity: return val([] { return 0.0; }, "QQ12");
        case Measure::DiscordAB:
          return val([&] { return f(v->xi) - f(v->nu(-1)) - f(v->nu(1)) + f(v->eps1()); },
                     "QQ13");
        case Measure::DiscordBA:
          return val([&] { return f(v->C) - f(v->nu(-1)) - f(v->nu(1)) + f(v->eps2()); },
                     "QQ14");
        case Measure::MutualInfo:
          return val([&] { return f(v->C) - f(v->nu(-1)) - f(v->nu(1)) + f(v->xi); }, "QQ15");
      }
    }
    return std::nullopt;
  }

  switch (id) {
    case PairId::PQ:
      if (family == Family::Renyi2) {
        if (measure != Measure::MutualInfo) return std::nullopt;
        return val(
            [&] {
              return std::log(v->zeta * v->zeta /
                              (v->xi * v->xi + v->b2 * v->b2 * v->S * v->S));
            },
            "Q17");
      }
      switch (measure) {
        case Measure::Negativity:
          return val([&] { return negativity(-std::log2(v->zeta - v->S * v->a2)); }, "w15");
        case Measure::DiscordAB:
        case Measure::DiscordBA:
          return val([&] { return f(v->zeta) + f(v->a2 + v->b2) - 2 * f(v->tau()); }, "w16");
        case Measure::MutualInfo:
          return val([&] { return 2 * f(v->zeta) - 2 * f(v->tau()); }, "w17");
      }
      break;
    case PairId::PMinusQ:
      if (family == Family::Renyi2) {
        if (measure != Measure::MutualInfo) return std::nullopt;
        return val(
            [&] { return std::log(v->zeta * v->xi / (v->a2 * v->zeta + v->b2 * v->xi)); },
            "Q18");
      }
      switch (measure) {
        case Measure::Negativity:
          return val(
              [&] {
                const double inner =
                    (1 + v->C * v->C) * (v->a2 * v->a2 + v->b2 * v->b2) +
                    (v->C4 + 4 * v->C - 1) * v->a2 * v->b2 -
                    2 * v->ch * v->ch * v->sh * (v->a2 + v->b2) *
                        std::sqrt(v->chi() - 3 + v->C * (1 + v->chi()));
                return negativity(0.5 - 0.5 * std::log2(inner));
              },
              "w19");
        case Measure::DiscordAB:
          return val(
              [&] {
                return f(v->xi) - f(v->nu_prime(-1)) - f(v->nu_prime(1)) + f(v->eps3());
              },
              "w20");
        case Measure::DiscordBA:
          return val(
              [&] {
                return f(v->zeta) - f(v->nu_prime(-1)) - f(v->nu_prime(1)) + f(v->eps2());
              },
              "ww20");
        case Measure::MutualInfo:
          return val(
              [&] {
                return f(v->zeta) + f(v->xi) - f(v->nu_prime(-1)) - f(v->nu_prime(1));
              },
              "w21");
      }
      break;
    case PairId::MinusPQ:
      return std::nullopt;
    case PairId::MinusPMinusQ:
      if (family == Family::Renyi2) {
        if (measure != Measure::MutualInfo) return std::nullopt;
        return val(
            [&] {
              return std::log(v->xi * v->xi / (v->xi * v->xi + v->b2 * v->b2 * v->S * v->S));
            },
            "Q19");
      }
      switch (measure) {
        case Measure::Negativity:
          return val([&] { return negativity(-std::log2(v->xi - v->S * v->b2)); }, "w23");
        case Measure::DiscordAB:
        case Measure::DiscordBA:
          return val([&] { return f(v->xi) + f(v->eps4()) - 2 * f(v->tau()); }, "w24");
        case Measure::MutualInfo:
          return val([&] { return 2 * f(v->xi) - 2 * f(v->tau()); }, "w25");
      }
      break;
  }
  return std::nullopt;
}

std::string quantity_name(Family family, Measure measure) {
  return fmt::format("{}.{}", to_string(family), to_string(measure));
}

}  // namespace

std::optional<ReducedForm> printed_reduced_cm(double s, const FieldParams& fp, Scenario scenario,
                                              const ModePair& pair) {
  if (!canonical_pair(pair)) return std::nullopt;
  const Symbols v(s, fp);
  const PairId id = pair_id(pair);
  if (scenario == Scenario::Unilateral) {
    if (id == PairId::PQ) return ReducedForm{{v.C, v.zeta, v.a1 * v.S, -v.a1 * v.S}, "Q7"};
    if (id == PairId::PMinusQ) return ReducedForm{{v.C, v.xi, v.b1 * v.S, v.b1 * v.S}, "Q11"};
    return std::nullopt;
  }
  switch (id) {
    case PairId::PQ: return ReducedForm{{v.zeta, v.zeta, v.a2 * v.S, -v.a2 * v.S}, "w14"};
    case PairId::PMinusQ:
      return ReducedForm{{v.zeta, v.xi, v.a1 * v.b1 * v.S, v.a1 * v.b1 * v.S}, "w18"};
    case PairId::MinusPMinusQ:
      return ReducedForm{{v.xi, v.xi, v.b2 * v.S, -v.b2 * v.S}, "w22"};
    case PairId::MinusPQ: break;
  }
  return std::nullopt;
}

bool has_reference(Scenario scenario, const ModePair& pair, Family family, Measure measure) {
  return lookup(nullptr, scenario, pair, family, measure).has_value();
}

ReferenceValue reference_correlation(double s, const FieldParams& fp, Scenario scenario,
                                     const ModePair& pair, Family family, Measure measure) {
  const Symbols v(s, fp);
  auto r = lookup(&v, scenario, pair, family, measure);
  if (!r) {
    throw DomainError(fmt::format("no closed form for {} {} {}", to_string(scenario),
                                  pair_tag(pair), quantity_name(family, measure)));
  }
  return *r;
}

std::size_t DiscrepancyReport::flagged_count() const {
  std::size_t n = 0;
  for (const auto& e : entries) n += e.flagged ? 1 : 0;
  return n;
}

std::vector<std::string> DiscrepancyReport::flagged_equations() const {
  std::vector<std::string> out;
  for (const auto& e : entries) {
    if (e.flagged && std::find(out.begin(), out.end(), e.equation) == out.end()) {
      out.push_back(e.equation);
    }
  }
  return out;
}

DiscrepancyReport crosscheck(double s, const FieldParams& fp, double tol) {
  DiscrepancyReport report;
  report.s = s;
  report.x = fp.x;
  report.tolerance = tol;
  const Symbols v(s, fp);

  auto add = [&](Scenario scenario, const ModePair& pair, std::string quantity,
                 std::string equation, double pipeline, double reference) {
    DiscrepancyEntry e;
    e.scenario = scenario;
    e.pair = pair;
    e.quantity = std::move(quantity);
    e.equation = std::move(equation);
    e.pipeline = pipeline;
    e.reference = reference;
    e.abs_diff = std::abs(pipeline - reference);
    e.flagged = !(e.abs_diff <= tol);
    report.entries.push_back(std::move(e));
  };

  for (Scenario scenario : {Scenario::Unilateral, Scenario::Bilateral}) {
    const ChannelOutput out = apply_channel(scenario, s, fp);
    for (const ModePair& pair : scenario_pairs(scenario)) {
      const TwoModeStdForm sf = reduce_pair(out, pair);
      if (auto printed = printed_reduced_cm(s, fp, scenario, pair)) {
        const TwoModeStdForm& ref = printed->state;
        add(scenario, pair, "cm.a", printed->equation, sf.a, ref.a);
        add(scenario, pair, "cm.b", printed->equation, sf.b, ref.b);
        add(scenario, pair, "cm.c1", printed->equation, sf.c1, ref.c1);
        add(scenario, pair, "cm.c2", printed->equation, sf.c2, ref.c2);
      }
      const CorrelationReport pipeline = correlation_report(sf, pair, kLogBaseBits);
      for (Family family : kFamilies) {
        for (Measure measure : kMeasures) {
          auto ref = lookup(&v, scenario, pair, family, measure);
          if (!ref) continue;
          add(scenario, pair, quantity_name(family, measure), ref->equation,
              pipeline.value(family, measure), ref->value);
        }
      }
    }
  }
  return report;
}

}  // namespace cvs::reference
