#include "qcournot/cli.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcournot/game.hpp"
#include "qcournot/serialize.hpp"

namespace qcournot {
namespace {

using nlohmann::json;

// Invalid configuration, reported with the offending field and exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TermSpec {
  double q1;
  double q2;
  double amplitude;
};

// Effective settings for one scenario run, after merging config file values
// and command-line flags (flags win).
struct ScenarioConfig {
  std::string kind = "classical";
  std::optional<std::vector<double>> grid;
  std::optional<int> iterations;
  std::string restriction = "symmetric";
  double opponent = 20.0;
  std::optional<std::uint64_t> max_rounds;
  std::string schedule = "exact";
  std::optional<std::vector<TermSpec>> terms;
  std::optional<std::pair<double, double>> pure;
  std::uint64_t seed = 0;
};

struct FileConfig {
  std::optional<double> a, b, c;
  std::optional<std::vector<double>> grid;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> cs_convention;
  std::optional<std::string> format;
  std::optional<std::string> restriction;
  std::optional<std::string> schedule;
  std::optional<int> iterations;
  std::optional<double> opponent;
  std::optional<std::uint64_t> max_rounds;
  std::optional<std::vector<TermSpec>> terms;
  std::optional<bool> attach_grover;
  std::optional<std::pair<double, double>> pure;
  std::optional<json> classical_sub;
  std::optional<json> quantum_sub;
};

double as_number(const json& j, const std::string& field) {
  if (!j.is_number()) throw ConfigError("field \"" + field + "\" must be a number");
  return j.get<double>();
}

std::vector<double> as_number_list(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty())
    throw ConfigError("field \"" + field + "\" must be a non-empty array of numbers");
  std::vector<double> values;
  for (const json& v : j) values.push_back(as_number(v, field));
  return values;
}

std::vector<TermSpec> terms_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty())
    throw ConfigError("field \"" + field + "\" must be a non-empty array");
  std::vector<TermSpec> terms;
  for (const json& t : j) {
    if (!t.is_object() || !t.contains("q1") || !t.contains("q2") ||
        !t.contains("amplitude"))
      throw ConfigError("field \"" + field +
                        "\" entries need q1, q2 and amplitude members");
    terms.push_back({as_number(t.at("q1"), field + ".q1"),
                     as_number(t.at("q2"), field + ".q2"),
                     as_number(t.at("amplitude"), field + ".amplitude")});
  }
  return terms;
}

void check_choice(const std::string& value, std::initializer_list<const char*> allowed,
                  const std::string& field) {
  for (const char* option : allowed)
    if (value == option) return;
  std::string message = "field \"" + field + "\" must be one of {";
  bool first = true;
  for (const char* option : allowed) {
    if (!first) message += ",";
    message += option;
    first = false;
  }
  throw ConfigError(message + "}");
}

std::pair<double, double> pair_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2)
    throw ConfigError("field \"" + field + "\" must be an array of two numbers");
  return {as_number(j.at(0), field), as_number(j.at(1), field)};
}

FileConfig config_from_json(const json& root) {
  if (!root.is_object()) throw ConfigError("config root must be an object");
  if (!root.contains("version"))
    throw ConfigError("field \"version\" is required");
  if (!root.at("version").is_number_integer() || root.at("version").get<int>() != 1)
    throw ConfigError("field \"version\" must be the integer 1");

  FileConfig cfg;
  for (const auto& [key, value] : root.items()) {
    if (key == "version") continue;
    if (key == "market") {
      if (!value.is_object()) throw ConfigError("field \"market\" must be an object");
      for (const auto& [mkey, mvalue] : value.items()) {
        if (mkey == "a") cfg.a = as_number(mvalue, "market.a");
        else if (mkey == "b") cfg.b = as_number(mvalue, "market.b");
        else if (mkey == "c") cfg.c = as_number(mvalue, "market.c");
        else throw ConfigError("unknown field \"market." + mkey + "\"");
      }
    } else if (key == "grid") {
      cfg.grid = as_number_list(value, "grid");
    } else if (key == "seed") {
      if (!value.is_number_unsigned())
        throw ConfigError("field \"seed\" must be a non-negative integer");
      cfg.seed = value.get<std::uint64_t>();
    } else if (key == "cs_convention") {
      cfg.cs_convention = value.get<std::string>();
      check_choice(*cfg.cs_convention, {"paper", "standard"}, "cs_convention");
    } else if (key == "format") {
      cfg.format = value.get<std::string>();
      check_choice(*cfg.format, {"table", "csv", "json"}, "format");
    } else if (key == "restriction") {
      cfg.restriction = value.get<std::string>();
      check_choice(*cfg.restriction, {"symmetric", "none"}, "restriction");
    } else if (key == "schedule") {
      cfg.schedule = value.get<std::string>();
      check_choice(*cfg.schedule, {"exact", "randomized"}, "schedule");
    } else if (key == "iterations") {
      if (!value.is_number_integer() || value.get<int>() < 0)
        throw ConfigError("field \"iterations\" must be an integer >= 0");
      cfg.iterations = value.get<int>();
    } else if (key == "opponent") {
      cfg.opponent = as_number(value, "opponent");
    } else if (key == "max_rounds") {
      if (!value.is_number_unsigned() || value.get<std::uint64_t>() < 1)
        throw ConfigError("field \"max_rounds\" must be an integer >= 1");
      cfg.max_rounds = value.get<std::uint64_t>();
    } else if (key == "terms") {
      cfg.terms = terms_from_json(value, "terms");
    } else if (key == "attach_grover") {
      if (!value.is_boolean()) throw ConfigError("field \"attach_grover\" must be a boolean");
      cfg.attach_grover = value.get<bool>();
    } else if (key == "pure") {
      cfg.pure = pair_from_json(value, "pure");
    } else if (key == "classical") {
      if (!value.is_object()) throw ConfigError("field \"classical\" must be an object");
      cfg.classical_sub = value;
    } else if (key == "quantum") {
      if (!value.is_object()) throw ConfigError("field \"quantum\" must be an object");
      cfg.quantum_sub = value;
    } else {
      throw ConfigError("unknown field \"" + key + "\"");
    }
  }
  return cfg;
}

FileConfig load_config(const std::string& path) {
  if (path.empty()) return FileConfig{};
  std::ifstream file(path);
  if (!file) throw ConfigError("cannot open config file \"" + path + "\"");
  json root;
  try {
    root = json::parse(file);
  } catch (const json::parse_error& e) {
    throw ConfigError("config file \"" + path + "\" is not valid JSON: " + e.what());
  }
  return config_from_json(root);
}

std::string prescan_config_path(const std::vector<std::string>& args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    else if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  return path;
}

std::vector<double> parse_grid_string(const std::string& text) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw ConfigError("field \"grid\" has a non-numeric entry \"" + token + "\"");
    }
  }
  if (values.empty()) throw ConfigError("field \"grid\" must list at least one quantity");
  return values;
}

std::vector<TermSpec> parse_terms_string(const std::string& text) {
  std::vector<TermSpec> terms;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    double parts[3];
    std::stringstream entry(token);
    std::string piece;
    int n = 0;
    while (std::getline(entry, piece, ':') && n < 3) {
      try {
        parts[n++] = std::stod(piece);
      } catch (const std::exception&) {
        throw ConfigError("field \"terms\" entry \"" + token + "\" is malformed");
      }
    }
    if (n != 3)
      throw ConfigError("field \"terms\" entries must look like q1:q2:amplitude");
    terms.push_back({parts[0], parts[1], parts[2]});
  }
  if (terms.empty()) throw ConfigError("field \"terms\" must list at least one term");
  return terms;
}

std::pair<double, double> parse_pair_string(const std::string& text,
                                            const std::string& field) {
  const std::vector<double> values = parse_grid_string(text);
  if (values.size() != 2)
    throw ConfigError("field \"" + field + "\" must be two quantities q1,q2");
  return {values[0], values[1]};
}

StrategySpace make_space(const std::vector<double>& grid) {
  try {
    return StrategySpace(grid);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("field \"grid\" is invalid: ") + e.what());
  }
}

MarketParams make_params(double a, double b, double c) {
  try {
    return MarketParams::create(a, b, c);
  } catch (const std::domain_error& e) {
    throw ConfigError(std::string("field \"market\" is invalid: ") + e.what());
  }
}

OracleRestriction parse_restriction(const std::string& text) {
  check_choice(text, {"symmetric", "none"}, "restriction");
  return text == "symmetric" ? OracleRestriction::Symmetric : OracleRestriction::None;
}

GroverSchedule parse_schedule(const std::string& text) {
  check_choice(text, {"exact", "randomized"}, "schedule");
  return text == "exact" ? GroverSchedule::ExactCount
                         : GroverSchedule::RandomizedDoubling;
}

JointState build_joint_state(const StrategySpace& space,
                             const std::vector<TermSpec>& terms) {
  std::vector<JointState::Term> mapped;
  for (const TermSpec& t : terms) {
    const auto i1 = space.index_of(t.q1);
    const auto i2 = space.index_of(t.q2);
    if (!i1 || !i2)
      throw ConfigError("field \"terms\" references a quantity missing from the grid");
    mapped.push_back({*i1, *i2, t.amplitude});
  }
  try {
    return JointState::from_terms(space, space, std::move(mapped), NormCheck::Rounded);
  } catch (const NormalizationError& e) {
    throw ConfigError(std::string("field \"terms\" is invalid: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("field \"terms\" is invalid: ") + e.what());
  }
}

// The two-term correlated state used when no terms are given: equal weight on
// (30,30) and (40,20).
JointState default_joint_state(const StrategySpace& space) {
  const auto i20 = space.index_of(20.0);
  const auto i30 = space.index_of(30.0);
  const auto i40 = space.index_of(40.0);
  if (!i20 || !i30 || !i40)
    throw ConfigError(
        "field \"terms\" is required: the default entangled state needs quantities "
        "20, 30 and 40 in the grid");
  const double amp = 1.0 / std::sqrt(2.0);
  return JointState::from_terms(space, space, {{*i30, *i30, amp}, {*i40, *i20, amp}});
}

ScenarioResult run_scenario(const ScenarioConfig& config, const MarketParams& params,
                            CsConvention convention) {
  if (config.kind == "classical") return classical_scenario(params, convention);

  if (config.kind == "entangled") {
    if (config.pure) {
      const auto [q1, q2] = *config.pure;
      if (q1 < 0 || q2 < 0) throw ConfigError("field \"pure\" quantities must be >= 0");
      const StrategySpace s1({q1});
      const StrategySpace s2({q2});
      return entangled_scenario(
          params, JointState::from_terms(s1, s2, {{0, 0, 1.0}}), convention);
    }
    const StrategySpace space =
        make_space(config.grid.value_or(std::vector<double>{20, 30, 40}));
    const JointState joint = config.terms ? build_joint_state(space, *config.terms)
                                          : default_joint_state(space);
    return entangled_scenario(params, joint, convention);
  }

  if (config.kind == "grover") {
    const StrategySpace space =
        make_space(config.grid.value_or(std::vector<double>{10, 20, 30, 40}));
    if (config.iterations && *config.iterations < 0)
      throw ConfigError("field \"iterations\" must be >= 0");
    Rng rng = make_rng(config.seed);
    return grover_joint_scenario(params, space, config.iterations,
                                 parse_restriction(config.restriction), rng, convention);
  }

  if (config.kind == "dhoyer") {
    const StrategySpace space =
        make_space(config.grid.value_or(std::vector<double>{10, 20, 30, 40}));
    if (config.opponent < 0) throw ConfigError("field \"opponent\" must be >= 0");
    SearchBudget budget = SearchBudget::standard(space.size());
    budget.schedule = parse_schedule(config.schedule);
    if (config.max_rounds) {
      if (*config.max_rounds < 1) throw ConfigError("field \"max-rounds\" must be >= 1");
      budget.max_rounds = *config.max_rounds;
    }
    Rng rng = make_rng(config.seed);
    return durr_hoyer_best_response_scenario(params, space, config.opponent, rng,
                                             budget, convention);
  }

  throw ConfigError("field \"kind\" must be one of {classical,entangled,grover,dhoyer}");
}

ScenarioConfig scenario_config_from_json(const json& sub, const std::string& side,
                                         const ScenarioConfig& base) {
  ScenarioConfig config = base;
  for (const auto& [key, value] : sub.items()) {
    const std::string field = side + "." + key;
    if (key == "kind") {
      config.kind = value.get<std::string>();
      check_choice(config.kind, {"classical", "entangled", "grover", "dhoyer"}, field);
    } else if (key == "grid") {
      config.grid = as_number_list(value, field);
    } else if (key == "iterations") {
      if (!value.is_number_integer() || value.get<int>() < 0)
        throw ConfigError("field \"" + field + "\" must be an integer >= 0");
      config.iterations = value.get<int>();
    } else if (key == "restriction") {
      config.restriction = value.get<std::string>();
      check_choice(config.restriction, {"symmetric", "none"}, field);
    } else if (key == "opponent") {
      config.opponent = as_number(value, field);
    } else if (key == "max_rounds") {
      if (!value.is_number_unsigned() || value.get<std::uint64_t>() < 1)
        throw ConfigError("field \"" + field + "\" must be an integer >= 1");
      config.max_rounds = value.get<std::uint64_t>();
    } else if (key == "schedule") {
      config.schedule = value.get<std::string>();
      check_choice(config.schedule, {"exact", "randomized"}, field);
    } else if (key == "terms") {
      config.terms = terms_from_json(value, field);
    } else if (key == "pure") {
      config.pure = pair_from_json(value, field);
    } else if (key == "seed") {
      if (!value.is_number_unsigned())
        throw ConfigError("field \"" + field + "\" must be a non-negative integer");
      config.seed = value.get<std::uint64_t>();
    } else {
      throw ConfigError("unknown field \"" + field + "\"");
    }
  }
  return config;
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw ConfigError("cannot open output file \"" + out_path + "\"");
  file << text;
}

std::string render_scenario(const ScenarioResult& result, const std::string& format) {
  if (format == "json") return scenario_to_json(result).dump(2) + "\n";
  if (format == "csv") return scenario_csv(result);
  return scenario_text(result);
}

std::string render_comparison(const ComparisonRow& row, const std::string& format) {
  if (format == "json") return comparison_to_json(row).dump(2) + "\n";
  if (format == "csv") return comparison_csv(row);
  return comparison_text(row);
}

void warn_negative_price(const ScenarioResult& result, std::ostream& err) {
  if (result.negative_price)
    err << "warning: market price is negative at some evaluated output\n";
}

struct CommonOpts {
  double a = 100.0;
  double b = 1.0;
  double c = 10.0;
  std::uint64_t seed = 0;
  std::string format = "table";
  std::string cs = "paper";
  std::string out_path;
  std::string config_path;
};

CommonOpts common_defaults(const FileConfig& cfg, const char* default_format) {
  CommonOpts opts;
  opts.a = cfg.a.value_or(100.0);
  opts.b = cfg.b.value_or(1.0);
  opts.c = cfg.c.value_or(10.0);
  opts.seed = cfg.seed.value_or(0);
  opts.format = cfg.format.value_or(default_format);
  opts.cs = cfg.cs_convention.value_or("paper");
  return opts;
}

void add_common_options(CLI::App* cmd, CommonOpts& opts, bool with_market_and_seed) {
  cmd->add_option("--config", opts.config_path, "JSON config file; flags override it");
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  cmd->add_option("--out", opts.out_path, "write the rendering to this file");
  if (!with_market_and_seed) return;
  cmd->add_option("--a", opts.a, "demand intercept");
  cmd->add_option("--b", opts.b, "demand slope");
  cmd->add_option("--c", opts.c, "constant marginal cost");
  cmd->add_option("--seed", opts.seed, "RNG seed (all runs are deterministic)");
  cmd->add_option("--cs-convention", opts.cs, "consumer surplus convention")
      ->check(CLI::IsMember({"paper", "standard"}));
}

int run_cli_impl(const std::vector<std::string>& args, std::ostream& out,
                 std::ostream& err) {
  const FileConfig cfg = load_config(prescan_config_path(args));

  CLI::App app{"deterministic quantity-competition simulator with "
               "amplitude-amplification strategy search"};
  app.require_subcommand(1);

  // classical
  CLI::App* classical_cmd =
      app.add_subcommand("classical", "symmetric equilibrium of the quantity game");
  CommonOpts classical_opts = common_defaults(cfg, "table");
  add_common_options(classical_cmd, classical_opts, true);

  // entangled
  CLI::App* entangled_cmd =
      app.add_subcommand("entangled", "expected profits of a shared correlated state");
  CommonOpts entangled_opts = common_defaults(cfg, "table");
  add_common_options(entangled_cmd, entangled_opts, true);
  std::string entangled_grid;
  CLI::Option* entangled_grid_opt = entangled_cmd->add_option(
      "--grid", entangled_grid, "comma-separated quantities (default 20,30,40)");
  std::string entangled_terms;
  CLI::Option* entangled_terms_opt = entangled_cmd->add_option(
      "--terms", entangled_terms,
      "comma-separated q1:q2:amplitude terms (default the (30,30)/(40,20) pair state)");

  // grover
  CLI::App* grover_cmd = app.add_subcommand(
      "grover", "amplified search for the industry-profit maximizing pair");
  CommonOpts grover_opts = common_defaults(cfg, "table");
  add_common_options(grover_cmd, grover_opts, true);
  std::string grover_grid;
  CLI::Option* grover_grid_opt = grover_cmd->add_option(
      "--grid", grover_grid, "comma-separated quantities (default 10,20,30,40)");
  int grover_iterations = 0;
  CLI::Option* grover_iter_opt =
      grover_cmd->add_option("--iterations", grover_iterations,
                             "amplification rounds (default: optimal schedule)");
  std::string grover_restriction = cfg.restriction.value_or("symmetric");
  grover_cmd->add_option("--restriction", grover_restriction, "oracle restriction")
      ->check(CLI::IsMember({"symmetric", "none"}));

  // dhoyer
  CLI::App* dhoyer_cmd = app.add_subcommand(
      "dhoyer", "adaptive threshold search of firm 1's best response");
  CommonOpts dhoyer_opts = common_defaults(cfg, "table");
  add_common_options(dhoyer_cmd, dhoyer_opts, true);
  std::string dhoyer_grid;
  CLI::Option* dhoyer_grid_opt = dhoyer_cmd->add_option(
      "--grid", dhoyer_grid, "comma-separated quantities (default 10,20,30,40)");
  double dhoyer_opponent = cfg.opponent.value_or(20.0);
  dhoyer_cmd->add_option("--opponent", dhoyer_opponent, "fixed output of firm 2");
  std::uint64_t dhoyer_max_rounds = 0;
  CLI::Option* dhoyer_rounds_opt = dhoyer_cmd->add_option(
      "--max-rounds", dhoyer_max_rounds, "round budget (default 22.5*sqrt(N))");
  std::string dhoyer_schedule = cfg.schedule.value_or("exact");
  dhoyer_cmd->add_option("--schedule", dhoyer_schedule, "per-round iteration schedule")
      ->check(CLI::IsMember({"exact", "randomized"}));

  // table
  CLI::App* table_cmd =
      app.add_subcommand("table", "payoff spreadsheet over a quantity grid");
  CommonOpts table_opts = common_defaults(cfg, "csv");
  add_common_options(table_cmd, table_opts, true);
  std::string table_grid;
  CLI::Option* table_grid_opt = table_cmd->add_option(
      "--grid", table_grid, "comma-separated quantities (default 10,20,30,40)");
  bool table_attach = cfg.attach_grover.value_or(false);
  table_cmd->add_flag("--attach-grover", table_attach,
                      "splice the amplitude ladder columns into the table");
  int table_iterations = cfg.iterations.value_or(2);
  table_cmd->add_option("--iterations", table_iterations,
                        "ladder rounds when attached (default 2)");
  std::string table_restriction = cfg.restriction.value_or("symmetric");
  table_cmd->add_option("--restriction", table_restriction, "oracle restriction")
      ->check(CLI::IsMember({"symmetric", "none"}));

  // compare
  CLI::App* compare_cmd = app.add_subcommand(
      "compare", "classical vs. quantum outcomes with a Pareto verdict");
  CommonOpts compare_opts = common_defaults(cfg, "table");
  add_common_options(compare_cmd, compare_opts, true);
  std::string compare_grid;
  CLI::Option* compare_grid_opt = compare_cmd->add_option(
      "--grid", compare_grid, "grid for the quantum side (default 10,20,30,40)");
  int compare_iterations = 0;
  CLI::Option* compare_iter_opt = compare_cmd->add_option(
      "--iterations", compare_iterations, "amplification rounds for the quantum side");
  std::string compare_restriction = cfg.restriction.value_or("symmetric");
  compare_cmd->add_option("--restriction", compare_restriction, "oracle restriction")
      ->check(CLI::IsMember({"symmetric", "none"}));
  std::string compare_pure;
  CLI::Option* compare_pure_opt = compare_cmd->add_option(
      "--pure", compare_pure, "use a fixed q1,q2 pair as the quantum outcome");

  // mortgage
  CLI::App* mortgage_cmd = app.add_subcommand(
      "mortgage", "level-payment amortization of a fixed-rate loan");
  CommonOpts mortgage_opts = common_defaults(cfg, "table");
  add_common_options(mortgage_cmd, mortgage_opts, false);
  mortgage_cmd->add_option("--seed", mortgage_opts.seed, "accepted for uniformity; unused");
  mortgage_cmd->add_option("--cs-convention", mortgage_opts.cs,
                           "accepted for uniformity; unused")
      ->check(CLI::IsMember({"paper", "standard"}));
  double principal = 0.0;
  double annual_rate = 0.0;
  int months = 0;
  mortgage_cmd->add_option("principal", principal, "loan principal")->required();
  mortgage_cmd->add_option("rate", annual_rate, "annual interest rate, e.g. 0.05")
      ->required();
  mortgage_cmd->add_option("months", months, "term in months")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("qcournot");
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  if (classical_cmd->parsed()) {
    const MarketParams params =
        make_params(classical_opts.a, classical_opts.b, classical_opts.c);
    const ScenarioResult result =
        classical_scenario(params, cs_convention_from_string(classical_opts.cs));
    warn_negative_price(result, err);
    emit(render_scenario(result, classical_opts.format), classical_opts.out_path, out);
    return 0;
  }

  if (entangled_cmd->parsed()) {
    const MarketParams params =
        make_params(entangled_opts.a, entangled_opts.b, entangled_opts.c);
    ScenarioConfig config;
    config.kind = "entangled";
    if (entangled_grid_opt->count()) config.grid = parse_grid_string(entangled_grid);
    else if (cfg.grid) config.grid = cfg.grid;
    if (entangled_terms_opt->count()) config.terms = parse_terms_string(entangled_terms);
    else if (cfg.terms) config.terms = cfg.terms;
    const ScenarioResult result =
        run_scenario(config, params, cs_convention_from_string(entangled_opts.cs));
    warn_negative_price(result, err);
    emit(render_scenario(result, entangled_opts.format), entangled_opts.out_path, out);
    return 0;
  }

  if (grover_cmd->parsed()) {
    const MarketParams params = make_params(grover_opts.a, grover_opts.b, grover_opts.c);
    ScenarioConfig config;
    config.kind = "grover";
    if (grover_grid_opt->count()) config.grid = parse_grid_string(grover_grid);
    else if (cfg.grid) config.grid = cfg.grid;
    if (grover_iter_opt->count()) config.iterations = grover_iterations;
    else if (cfg.iterations) config.iterations = cfg.iterations;
    config.restriction = grover_restriction;
    config.seed = grover_opts.seed;
    const ScenarioResult result =
        run_scenario(config, params, cs_convention_from_string(grover_opts.cs));
    warn_negative_price(result, err);
    emit(render_scenario(result, grover_opts.format), grover_opts.out_path, out);
    return 0;
  }

  if (dhoyer_cmd->parsed()) {
    const MarketParams params = make_params(dhoyer_opts.a, dhoyer_opts.b, dhoyer_opts.c);
    ScenarioConfig config;
    config.kind = "dhoyer";
    if (dhoyer_grid_opt->count()) config.grid = parse_grid_string(dhoyer_grid);
    else if (cfg.grid) config.grid = cfg.grid;
    config.opponent = dhoyer_opponent;
    if (dhoyer_rounds_opt->count()) config.max_rounds = dhoyer_max_rounds;
    else if (cfg.max_rounds) config.max_rounds = cfg.max_rounds;
    config.schedule = dhoyer_schedule;
    config.seed = dhoyer_opts.seed;
    const ScenarioResult result =
        run_scenario(config, params, cs_convention_from_string(dhoyer_opts.cs));
    warn_negative_price(result, err);
    emit(render_scenario(result, dhoyer_opts.format), dhoyer_opts.out_path, out);
    return 0;
  }

  if (table_cmd->parsed()) {
    const MarketParams params = make_params(table_opts.a, table_opts.b, table_opts.c);
    std::vector<double> grid{10, 20, 30, 40};
    if (table_grid_opt->count()) grid = parse_grid_string(table_grid);
    else if (cfg.grid) grid = *cfg.grid;
    const StrategySpace space = make_space(grid);
    const CsConvention convention = cs_convention_from_string(table_opts.cs);
    const PayoffTable table = payoff_table(params, space, space, convention);
    if (table.negative_price)
      err << "warning: market price is negative at some evaluated output\n";

    std::optional<GroverTrace> ladder;
    if (table_attach) {
      if (table_iterations < 0) throw ConfigError("field \"iterations\" must be >= 0");
      std::vector<double> industry_profit;
      for (const PayoffRow& row : table.rows)
        industry_profit.push_back(row.total_profit);
      std::function<bool(std::size_t)> predicate;
      const std::size_t n = space.size();
      if (parse_restriction(table_restriction) == OracleRestriction::Symmetric)
        predicate = [n](std::size_t flat) { return flat / n == flat % n; };
      const Oracle oracle = oracle_from_argmax(industry_profit, predicate);
      ladder = grover_iterate(StateVector::uniform(table.rows.size()), oracle,
                              table_iterations)
                   .trace;
    }
    const GroverTrace* trace = ladder ? &*ladder : nullptr;
    std::string rendering;
    if (table_opts.format == "json") rendering = payoff_json(table, trace).dump(2) + "\n";
    else if (table_opts.format == "table") rendering = payoff_text(table, trace);
    else rendering = payoff_csv(table, trace);
    emit(rendering, table_opts.out_path, out);
    return 0;
  }

  if (compare_cmd->parsed()) {
    const MarketParams params =
        make_params(compare_opts.a, compare_opts.b, compare_opts.c);
    const CsConvention convention = cs_convention_from_string(compare_opts.cs);

    ScenarioConfig base;
    base.seed = compare_opts.seed;
    if (compare_grid_opt->count()) base.grid = parse_grid_string(compare_grid);
    else if (cfg.grid) base.grid = cfg.grid;
    if (compare_iter_opt->count()) base.iterations = compare_iterations;
    else if (cfg.iterations) base.iterations = cfg.iterations;
    base.restriction = compare_restriction;

    ScenarioConfig classical_config = base;
    classical_config.kind = "classical";
    if (cfg.classical_sub)
      classical_config =
          scenario_config_from_json(*cfg.classical_sub, "classical", classical_config);

    ScenarioConfig quantum_config = base;
    quantum_config.kind = "grover";
    if (compare_pure_opt->count()) {
      quantum_config.kind = "entangled";
      quantum_config.pure = parse_pair_string(compare_pure, "pure");
    } else if (cfg.quantum_sub) {
      quantum_config =
          scenario_config_from_json(*cfg.quantum_sub, "quantum", quantum_config);
    }

    const ScenarioResult classical_result =
        run_scenario(classical_config, params, convention);
    const ScenarioResult quantum_result = run_scenario(quantum_config, params, convention);
    warn_negative_price(classical_result, err);
    warn_negative_price(quantum_result, err);
    const ComparisonRow row = compare(classical_result, quantum_result);
    emit(render_comparison(row, compare_opts.format), compare_opts.out_path, out);
    return 0;
  }

  if (mortgage_cmd->parsed()) {
    const AmortizedLoan loan = amortized_payment(principal, annual_rate, months);
    std::string rendering;
    if (mortgage_opts.format == "json") {
      rendering = json{{"payment", loan.monthly_payment}, {"total", loan.total_paid}}
                      .dump(2) +
                  "\n";
    } else if (mortgage_opts.format == "csv") {
      rendering = "payment,total\n" + format_money(loan.monthly_payment) + "," +
                  format_money(loan.total_paid) + "\n";
    } else {
      rendering = "payment=" + format_money(loan.monthly_payment) +
                  " total=" + format_money(loan.total_paid) + "\n";
    }
    emit(rendering, mortgage_opts.out_path, out);
    return 0;
  }

  err << "no subcommand given\n";
  return 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run_cli_impl(args, out, err);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace qcournot
