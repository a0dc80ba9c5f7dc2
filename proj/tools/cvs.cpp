// cvs: command-line front end for the pair-creation correlation toolkit.
//
// Exit codes: 0 ok, 2 usage, 3 numerical failure, 4 cross-check flag.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "cvs/fock_oracle.hpp"
#include "cvs/monogamy_sweep.hpp"
#include "cvs/reference_forms.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace cvs;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitFlagged = 4;
constexpr double kOracleTol = 1e-4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Csv, Json };

struct RunConfig {
  Scenario scenario = Scenario::Unilateral;
  bool scenario_given = false;
  double s = 1.0;
  double x = 1.0;
  std::optional<GridSpec> grid;
  std::vector<Family> families{Family::VonNeumann, Family::Renyi2};
  std::optional<std::vector<ModePair>> pairs;
  int parallelism = std::max(1u, std::thread::hardware_concurrency());
  int n_max = 40;
  Format format = Format::Csv;
  std::string out;
  bool report_only = false;
  double vn_log_base = kLogBaseBits;
};

// Flags as given on the command line; unset ones leave the config alone.
struct Flags {
  std::string config;
  double s = 0, x = 0;
  std::string scenario, grid, format, out;
  int n_max = 0, threads = 0;
  bool report_only = false;
  std::vector<CLI::Option*> opts;
};

std::string num(double v) { return fmt::format("{:.17g}", v); }

Scenario parse_scenario(const std::string& v) {
  if (v == "uni" || v == "unilateral") return Scenario::Unilateral;
  if (v == "bi" || v == "bilateral") return Scenario::Bilateral;
  throw UsageError(fmt::format("scenario '{}' is not uni or bi", v));
}

Format parse_format(const std::string& v) {
  if (v == "csv") return Format::Csv;
  if (v == "json") return Format::Json;
  throw UsageError(fmt::format("format '{}' is not csv or json", v));
}

Family parse_family(const std::string& v) {
  if (v == "vn" || v == "von_neumann") return Family::VonNeumann;
  if (v == "renyi2") return Family::Renyi2;
  throw UsageError(fmt::format("family '{}' is not vn or renyi2", v));
}

double log_base_from_env() {
  const char* env = std::getenv("CVS_LOG_BASE");
  if (env == nullptr || std::string(env).empty()) return kLogBaseBits;
  const std::string v(env);
  if (v == "2") return kLogBaseBits;
  if (v == "e") return kLogBaseNats;
  throw UsageError(fmt::format("CVS_LOG_BASE='{}' must be 2 or e", v));
}

void apply_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw UsageError(fmt::format("cannot read config file '{}'", path));
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError(fmt::format("config '{}': {}", path, e.what()));
  }
  if (!j.is_object()) throw UsageError("config file must hold a JSON object");
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "scenario") {
        cfg.scenario = parse_scenario(v.get<std::string>());
        cfg.scenario_given = true;
      } else if (key == "s") {
        cfg.s = v.get<double>();
      } else if (key == "x") {
        cfg.x = v.get<double>();
      } else if (key == "grid") {
        if (v.is_string()) {
          cfg.grid = GridSpec::parse(v.get<std::string>());
        } else {
          GridSpec g;
          g.min = v.at("min").get<double>();
          g.max = v.at("max").get<double>();
          g.count = v.at("count").get<int>();
          const std::string sp = v.value("spacing", "log");
          if (sp != "log" && sp != "lin") throw UsageError("grid spacing must be log or lin");
          g.spacing = sp == "log" ? Spacing::Log : Spacing::Linear;
          g.validate();
          cfg.grid = g;
        }
      } else if (key == "families") {
        cfg.families.clear();
        for (const auto& f : v) cfg.families.push_back(parse_family(f.get<std::string>()));
      } else if (key == "pairs") {
        std::vector<ModePair> pairs;
        for (const auto& p : v) {
          const auto parsed = parse_pair(p.get<std::string>());
          if (!parsed) throw UsageError(fmt::format("unknown mode pair '{}'", p.get<std::string>()));
          pairs.push_back(*parsed);
        }
        cfg.pairs = pairs;
      } else if (key == "parallelism") {
        cfg.parallelism = v.get<int>();
      } else if (key == "n_max") {
        cfg.n_max = v.get<int>();
      } else if (key == "format") {
        cfg.format = parse_format(v.get<std::string>());
      } else if (key == "out") {
        cfg.out = v.get<std::string>();
      } else if (key == "report_only") {
        cfg.report_only = v.get<bool>();
      } else {
        throw UsageError(fmt::format("unknown config key '{}'", key));
      }
    }
  } catch (const json::exception& e) {
    throw UsageError(fmt::format("config '{}': {}", path, e.what()));
  }
}

RunConfig resolve(const Flags& f, const CLI::App& sub) {
  RunConfig cfg;
  cfg.vn_log_base = log_base_from_env();
  if (!f.config.empty()) apply_config_file(f.config, cfg);
  auto given = [&](const char* name) { return sub.get_option(name)->count() > 0; };
  if (given("--s")) cfg.s = f.s;
  if (given("--x")) cfg.x = f.x;
  if (given("--scenario")) {
    cfg.scenario = parse_scenario(f.scenario);
    cfg.scenario_given = true;
  }
  if (given("--grid")) cfg.grid = GridSpec::parse(f.grid);
  if (given("--format")) cfg.format = parse_format(f.format);
  if (given("--out")) cfg.out = f.out;
  if (given("--n-max")) cfg.n_max = f.n_max;
  if (given("--threads")) cfg.parallelism = f.threads;
  if (f.report_only) cfg.report_only = true;

  if (!(cfg.s >= 0.0) || !std::isfinite(cfg.s)) throw UsageError("--s must be finite and >= 0");
  if (!(cfg.x >= 0.0) || !std::isfinite(cfg.x)) throw UsageError("--x must be finite and >= 0");
  if (cfg.n_max < 1) throw UsageError("--n-max must be positive");
  if (cfg.parallelism < 1) throw UsageError("--threads must be positive");
  return cfg;
}

// Writes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw UsageError(fmt::format("cannot write output file '{}'", path));
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::string base_tag(double base) { return base == kLogBaseBits ? "log2" : "ln"; }

const char* measure_eq(Family family, Measure m) {
  if (family == Family::VonNeumann) {
    switch (m) {
      case Measure::Negativity: return "w2";
      case Measure::DiscordAB:
      case Measure::DiscordBA: return "w3";
      case Measure::MutualInfo: return "w4";
    }
  }
  switch (m) {
    case Measure::Negativity: return "Q3";
    case Measure::DiscordAB:
    case Measure::DiscordBA: return "Q4";
    case Measure::MutualInfo: return "Q5";
  }
  return "";
}

// "N1", "D1AB", "D2BA", "I2", ...
std::string measure_column(Family family, Measure m) {
  const char* idx = family == Family::VonNeumann ? "1" : "2";
  switch (m) {
    case Measure::Negativity: return fmt::format("N{}", idx);
    case Measure::DiscordAB: return fmt::format("D{}AB", idx);
    case Measure::DiscordBA: return fmt::format("D{}BA", idx);
    case Measure::MutualInfo: return fmt::format("I{}", idx);
  }
  return "";
}

void emit_json(std::ostream& os, const json& j) { os << j.dump(2) << '\n'; }

// ---------------------------------------------------------------- commands

int cmd_validate(const RunConfig& cfg, std::ostream& os) {
  const ChannelOutput out = apply_channel(cfg.scenario, cfg.s, FieldParams{cfg.x});
  struct Row {
    std::string check;
    double value;
    bool pass;
  };
  std::vector<Row> rows;
  const PhysicalityReport global = check_physical(out.cm);
  const std::vector<double> nu = symplectic_eigenvalues(out.cm);
  rows.push_back({"global_physical", global.min_symplectic_eigenvalue, global.physical});
  rows.push_back({"global_purity_max_nu_deviation",
                  std::max(std::abs(nu.front() - 1.0), std::abs(nu.back() - 1.0)),
                  std::abs(nu.front() - 1.0) <= 1e-9 && std::abs(nu.back() - 1.0) <= 1e-9});
  for (const ModePair& pair : scenario_pairs(cfg.scenario)) {
    const TwoModeStdForm sf = reduce_pair(out, pair);
    const PhysicalityReport r = check_physical(sf);
    rows.push_back({"physical_" + pair_tag(pair), r.min_symplectic_eigenvalue, r.physical});
  }
  bool ok = true;
  for (const auto& r : rows) ok = ok && r.pass;

  if (cfg.format == Format::Json) {
    json j{{"scenario", to_string(cfg.scenario)}, {"s", cfg.s}, {"x", cfg.x}, {"valid", ok}};
    for (const auto& r : rows) j["checks"].push_back({{"check", r.check}, {"value", r.value}, {"pass", r.pass}});
    emit_json(os, j);
  } else {
    os << "check,value,pass\n";
    for (const auto& r : rows) os << r.check << ',' << num(r.value) << ',' << (r.pass ? "true" : "false") << '\n';
  }
  if (!ok) throw NumericalError("channel output failed validation");
  return kExitOk;
}

int cmd_correlations(const RunConfig& cfg, std::ostream& os) {
  const ChannelOutput out = apply_channel(cfg.scenario, cfg.s, FieldParams{cfg.x});
  const std::vector<CorrelationReport> reports = correlation_reports(out, cfg.vn_log_base);
  const std::string vn_base = base_tag(cfg.vn_log_base);

  if (cfg.format == Format::Json) {
    json j{{"scenario", to_string(cfg.scenario)},
           {"s", cfg.s},
           {"x", cfg.x},
           {"log_base", {{"vn", vn_base}, {"renyi2", "ln"}}}};
    for (const auto& r : reports) {
      json p{{"pair", pair_tag(r.pair)},
             {"state", {{"a", r.state.a}, {"b", r.state.b}, {"c1", r.state.c1}, {"c2", r.state.c2}}}};
      for (Family fam : kFamilies) {
        for (Measure m : kMeasures) p[to_string(fam)][to_string(m)] = r.value(fam, m);
      }
      j["pairs"].push_back(p);
    }
    emit_json(os, j);
    return kExitOk;
  }
  os << "pair";
  for (Family fam : kFamilies) {
    const std::string base = fam == Family::VonNeumann ? vn_base : "ln";
    for (Measure m : kMeasures) {
      os << ',' << measure_column(fam, m) << '[' << measure_eq(fam, m) << ';' << base << ']';
    }
  }
  os << '\n';
  for (const auto& r : reports) {
    os << pair_tag(r.pair);
    for (Family fam : kFamilies) {
      for (Measure m : kMeasures) os << ',' << num(r.value(fam, m));
    }
    os << '\n';
  }
  return kExitOk;
}

int cmd_sweep(const RunConfig& rc, std::ostream& os) {
  SweepConfig cfg = SweepConfig::defaults(rc.scenario, rc.s);
  if (rc.grid) cfg.grid = *rc.grid;
  cfg.families = rc.families;
  if (rc.pairs) cfg.pairs = *rc.pairs;
  cfg.parallelism = rc.parallelism;
  cfg.vn_log_base = rc.vn_log_base;
  if (cfg.pairs.empty()) throw UsageError("empty mode pair set");
  if (cfg.families.empty()) throw UsageError("empty measure family set");
  try {
    cfg.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  const std::vector<SweepRecord> records = run_sweep(cfg);
  const char* mono_eq = cfg.scenario == Scenario::Unilateral ? "Q23" : "BQ23";

  std::vector<std::string> header{"x"};
  for (const ModePair& p : cfg.pairs) {
    for (Family fam : cfg.families) {
      for (Measure m : kMeasures) {
        header.push_back(fmt::format("{}_{}[{}]", measure_column(fam, m), pair_tag(p), measure_eq(fam, m)));
      }
    }
  }
  for (Family fam : cfg.families) {
    for (Measure m : kMonogamyMeasures) {
      header.push_back(fmt::format("d{}[{}]", measure_column(fam, m),
                                   m == Measure::Negativity ? "extension" : mono_eq));
    }
  }

  auto row_values = [&](const SweepRecord& r) {
    std::vector<double> v{r.x};
    for (const auto& rep : r.reports) {
      for (Family fam : cfg.families) {
        for (Measure m : kMeasures) v.push_back(rep.value(fam, m));
      }
    }
    for (const auto& ms : r.monogamy) v.push_back(ms.value);
    return v;
  };

  if (rc.format == Format::Json) {
    json j{{"scenario", to_string(cfg.scenario)},
           {"s", cfg.s},
           {"log_base", {{"vn", base_tag(cfg.vn_log_base)}, {"renyi2", "ln"}}},
           {"columns", header}};
    j["rows"] = json::array();
    for (const auto& r : records) j["rows"].push_back(row_values(r));
    emit_json(os, j);
    return kExitOk;
  }
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << '\n';
  for (const auto& r : records) {
    const std::vector<double> v = row_values(r);
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << num(v[i]);
    os << '\n';
  }
  return kExitOk;
}

int cmd_sudden_death(const RunConfig& cfg, std::ostream& os) {
  if (!(cfg.s > 0.0)) throw UsageError("sudden death needs --s > 0");
  std::vector<Scenario> scenarios{Scenario::Bilateral, Scenario::Unilateral};
  if (cfg.scenario_given) scenarios = {cfg.scenario};

  json j = json::array();
  if (cfg.format == Format::Csv) os << "scenario,s,x_root,x_closed_form,x_pi_over_ln_coth_s,rel_diff\n";
  for (Scenario sc : scenarios) {
    std::optional<SuddenDeath> sd;
    if (cfg.scenario_given) {
      sd = find_sudden_death(cfg.s, sc);  // throws when no root exists
    } else if (sudden_death_root(cfg.s, sc)) {
      sd = find_sudden_death(cfg.s, sc);
    }
    if (cfg.format == Format::Json) {
      json e{{"scenario", to_string(sc)}, {"s", cfg.s}};
      if (sd) {
        e["x_root"] = sd->x_root;
        e["x_closed_form"] = sd->x_closed_form;
        e["x_pi_over_ln_coth_s"] = sd->x_coth;
        e["rel_diff"] = sd->rel_diff;
      } else {
        e["x_root"] = nullptr;
      }
      j.push_back(e);
    } else if (sd) {
      os << to_string(sc) << ',' << num(cfg.s) << ',' << num(sd->x_root) << ','
         << num(sd->x_closed_form) << ',' << num(sd->x_coth) << ',' << num(sd->rel_diff) << '\n';
    } else {
      os << to_string(sc) << ',' << num(cfg.s) << ",none,,,\n";
    }
  }
  if (cfg.format == Format::Json) emit_json(os, j);
  return kExitOk;
}

int cmd_monogamy(const RunConfig& cfg, std::ostream& os) {
  const ChannelOutput out = apply_channel(cfg.scenario, cfg.s, FieldParams{cfg.x});
  const std::vector<CorrelationReport> outputs = correlation_reports(out, cfg.vn_log_base);
  const CorrelationReport input = correlation_report(tmsv(cfg.s), {kModeP, kModeQ}, cfg.vn_log_base);
  const char* eq = cfg.scenario == Scenario::Unilateral ? "Q23" : "BQ23";

  std::optional<double> crossing;
  if (cfg.grid) crossing = vn_mutual_info_crossing(cfg.s, cfg.scenario, *cfg.grid);

  if (cfg.format == Format::Json) {
    json j{{"scenario", to_string(cfg.scenario)}, {"s", cfg.s}, {"x", cfg.x}};
    for (Family fam : cfg.families) {
      for (Measure m : kMonogamyMeasures) {
        j["scores"].push_back({{"family", to_string(fam)},
                               {"quantity", to_string(m)},
                               {"value", monogamy_score(input, outputs, fam, m)},
                               {"equation", m == Measure::Negativity ? "extension" : eq}});
      }
    }
    if (cfg.grid) j["vn_I_sign_change_x"] = crossing ? json(*crossing) : json(nullptr);
    emit_json(os, j);
    return kExitOk;
  }
  os << "family,quantity,value,equation\n";
  for (Family fam : cfg.families) {
    for (Measure m : kMonogamyMeasures) {
      os << to_string(fam) << ',' << to_string(m) << ',' << num(monogamy_score(input, outputs, fam, m))
         << ',' << (m == Measure::Negativity ? "extension" : eq) << '\n';
    }
  }
  if (cfg.grid) os << "vn,I_sign_change_x," << (crossing ? num(*crossing) : "none") << ",\n";
  return kExitOk;
}

int cmd_oracle_check(const RunConfig& cfg, std::ostream& os) {
  const TruncatedState st = channel_fock(cfg.scenario, cfg.s, FieldParams{cfg.x}, cfg.n_max);
  for (const auto& w : st.warnings) std::cerr << "cvs: warning: " << w << '\n';
  const ChannelOutput out = apply_channel(cfg.scenario, cfg.s, FieldParams{cfg.x});

  struct Row {
    std::string pair, quantity;
    double oracle, gaussian;
  };
  std::vector<Row> rows;
  for (const ModePair& pair : scenario_pairs(cfg.scenario)) {
    const OracleMeasures om = oracle_measures(st, pair);
    const TwoModeStdForm sf = reduce_pair(out, pair);
    const std::string tag = pair_tag(pair);
    rows.push_back({tag, "N1", om.log_negativity, log_negativity(sf)});
    rows.push_back({tag, "I1", om.mutual_info_vn, mutual_information_vn(sf)});
    rows.push_back({tag, "I2", om.mutual_info_renyi2, mutual_information_renyi2(sf)});
    rows.push_back({tag, "S2_pair", om.renyi2_pair, 0.5 * std::log(sf.det())});
    rows.push_back({tag, "S2_first", om.renyi2_first, std::log(sf.a)});
    rows.push_back({tag, "S2_second", om.renyi2_second, std::log(sf.b)});
  }
  bool ok = true;
  if (cfg.format == Format::Json) {
    json j{{"scenario", to_string(cfg.scenario)}, {"s", cfg.s}, {"x", cfg.x}, {"n_max", cfg.n_max},
           {"tail_weight", st.tail_weight}, {"tolerance", kOracleTol}};
    for (const auto& r : rows) {
      const double d = std::abs(r.oracle - r.gaussian);
      ok = ok && d <= kOracleTol;
      j["rows"].push_back({{"pair", r.pair}, {"quantity", r.quantity}, {"oracle", r.oracle},
                           {"gaussian", r.gaussian}, {"abs_diff", d}, {"pass", d <= kOracleTol}});
    }
    emit_json(os, j);
  } else {
    os << "pair,quantity,oracle,gaussian,abs_diff,pass\n";
    for (const auto& r : rows) {
      const double d = std::abs(r.oracle - r.gaussian);
      ok = ok && d <= kOracleTol;
      os << r.pair << ',' << r.quantity << ',' << num(r.oracle) << ',' << num(r.gaussian) << ','
         << num(d) << ',' << (d <= kOracleTol ? "true" : "false") << '\n';
    }
  }
  if (!ok && !cfg.report_only) {
    std::cerr << fmt::format("cvs: error[flagged]: oracle and Gaussian values differ by more than {:g}\n",
                             kOracleTol);
    return kExitFlagged;
  }
  return kExitOk;
}

int cmd_crosscheck(const RunConfig& cfg, std::ostream& os) {
  const reference::DiscrepancyReport rep = reference::crosscheck(cfg.s, FieldParams{cfg.x});
  if (cfg.format == Format::Json) {
    json j{{"s", rep.s}, {"x", rep.x}, {"tolerance", rep.tolerance},
           {"flagged_equations", rep.flagged_equations()}};
    j["entries"] = json::array();
    for (const auto& e : rep.entries) {
      j["entries"].push_back({{"scenario", to_string(e.scenario)}, {"pair", pair_tag(e.pair)},
                              {"quantity", e.quantity}, {"equation", e.equation},
                              {"pipeline", e.pipeline}, {"reference", e.reference},
                              {"abs_diff", e.abs_diff}, {"verdict", e.flagged ? "flag" : "pass"}});
    }
    emit_json(os, j);
  } else {
    os << "scenario,pair,quantity,equation,pipeline,reference,abs_diff,verdict\n";
    for (const auto& e : rep.entries) {
      os << to_string(e.scenario) << ',' << pair_tag(e.pair) << ',' << e.quantity << ','
         << e.equation << ',' << num(e.pipeline) << ',' << num(e.reference) << ','
         << num(e.abs_diff) << ',' << (e.flagged ? "flag" : "pass") << '\n';
    }
  }
  if (rep.flagged_count() > 0 && !cfg.report_only) {
    std::string eqs;
    for (const auto& e : rep.flagged_equations()) eqs += (eqs.empty() ? "" : " ") + e;
    std::cerr << fmt::format("cvs: error[flagged]: {} entries disagree with closed forms: {}\n",
                             rep.flagged_count(), eqs);
    return kExitFlagged;
  }
  return kExitOk;
}

std::string one_line(std::string msg) {
  for (char& c : msg) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return msg;
}

int fail(const char* kind, const std::string& msg, int code) {
  std::cerr << "cvs: error[" << kind << "]: " << one_line(msg) << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pair-creation effects on Gaussian correlations of two-mode squeezed states"};
  app.require_subcommand(1);

  Flags flags;
  using Command = int (*)(const RunConfig&, std::ostream&);
  const std::vector<std::tuple<const char*, const char*, Command>> commands{
      {"validate", "Check physicality and purity of the channel output", cmd_validate},
      {"correlations", "All measures for every mode pair at one (s, x)", cmd_correlations},
      {"sweep", "Measures and monogamy scores over a field-strength grid", cmd_sweep},
      {"sudden-death", "Field strength where the (p,q) entanglement vanishes", cmd_sudden_death},
      {"monogamy", "Monogamy scores at one (s, x)", cmd_monogamy},
      {"oracle-check", "Compare against the truncated Fock-space computation", cmd_oracle_check},
      {"crosscheck", "Compare against the transcribed closed forms", cmd_crosscheck},
  };
  std::map<CLI::App*, Command> handlers;
  for (const auto& [name, desc, fn] : commands) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("--config", flags.config, "JSON config file; flags override it");
    sub->add_option("--s", flags.s, "Squeezing parameter");
    sub->add_option("--x", flags.x, "Dimensionless field strength e E0 / (k^2 + m^2)");
    sub->add_option("--scenario", flags.scenario, "uni or bi");
    sub->add_option("--grid", flags.grid, "min:max:count:log|lin");
    sub->add_option("--format", flags.format, "csv or json");
    sub->add_option("--out", flags.out, "Output file (default stdout)");
    sub->add_option("--n-max", flags.n_max, "Fock truncation per mode");
    sub->add_option("--threads", flags.threads, "Worker threads for sweeps");
    sub->add_flag("--report-only", flags.report_only, "Exit 0 even when checks are flagged");
    handlers[sub] = fn;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("usage", e.what(), kExitUsage);
  }

  try {
    for (auto& [sub, fn] : handlers) {
      if (!sub->parsed()) continue;
      const RunConfig cfg = resolve(flags, *sub);
      Output out(cfg.out);
      const int code = fn(cfg, out.stream());
      out.stream().flush();
      return code;
    }
  } catch (const UsageError& e) {
    return fail("usage", e.what(), kExitUsage);
  } catch (const DomainError& e) {
    return fail("usage", e.what(), kExitUsage);
  } catch (const std::exception& e) {
    return fail("numerical", e.what(), kExitNumerical);
  }
  return fail("usage", "no subcommand", kExitUsage);
}
