#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qdo/cli.hpp"
#include "qdo/errors.hpp"
#include "qdo/verify.hpp"

namespace {

struct GlobalArgs {
  double hbar = 1.0;
  std::string out;
  std::string format = "csv";
  std::string config_path;
};

// Every scenario option is declared optional so that values can come from a
// config file; completeness is validated after the merge (flags win).
struct ScenarioArgs {
  std::map<std::string, double> params;
  std::map<std::string, bool> set;  // which params came from the command line
  std::string time_text;
  std::vector<std::string> sweep_texts;
  std::string scenario;
};

void add_param(CLI::App* cmd, ScenarioArgs& args, const std::string& flag,
               const std::string& key, const std::string& help) {
  auto opt = cmd->add_option_function<double>(
      flag,
      [&args, key](double v) {
        args.params[key] = v;
        args.set[key] = true;
      },
      help);
  opt->expected(1);
}

void merge_config(const GlobalArgs& g, ScenarioArgs& args, bool& format_set,
                  bool& out_set, bool& hbar_set, GlobalArgs& merged) {
  if (g.config_path.empty()) return;
  std::ifstream in(g.config_path);
  if (!in) throw qdo::ConfigError("cannot open config file " + g.config_path);
  nlohmann::json cfg;
  try {
    in >> cfg;
  } catch (const std::exception& e) {
    throw qdo::ConfigError(std::string("config file parse error: ") + e.what());
  }
  if (!cfg.is_object()) throw qdo::ConfigError("config file must be a JSON object");

  for (auto it = cfg.begin(); it != cfg.end(); ++it) {
    std::string key = it.key();
    if (key == "scenario") {
      if (args.scenario.empty()) args.scenario = it->get<std::string>();
      continue;
    }
    if (key == "t") {
      if (args.time_text.empty()) {
        args.time_text = it->is_string() ? it->get<std::string>()
                                         : std::to_string(it->get<double>());
      }
      continue;
    }
    if (key == "sweep") {
      if (args.sweep_texts.empty()) {
        for (const auto& s : *it) args.sweep_texts.push_back(s.get<std::string>());
      }
      continue;
    }
    if (key == "format") {
      if (!format_set) merged.format = it->get<std::string>();
      continue;
    }
    if (key == "out") {
      if (!out_set) merged.out = it->get<std::string>();
      continue;
    }
    if (key == "hbar") {
      if (!hbar_set) merged.hbar = it->get<double>();
      continue;
    }
    std::replace(key.begin(), key.end(), '-', '_');
    if (!it->is_number()) {
      throw qdo::ConfigError("config key '" + key + "' must be numeric");
    }
    if (!args.set[key]) args.params[key] = it->get<double>();
  }
}

int emit(const qdo::cli::Table& table, const GlobalArgs& g) {
  if (g.format != "csv" && g.format != "json") {
    throw qdo::ConfigError("format must be csv or json");
  }
  const std::string text =
      g.format == "csv" ? qdo::cli::to_csv(table) : qdo::cli::to_json_lines(table);
  if (g.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(g.out, std::ios::binary);
    if (!out) throw qdo::ConfigError("cannot open output file " + g.out);
    out << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum damped-oscillator decoherence toolkit"};
  app.require_subcommand(1);

  GlobalArgs global;
  auto* opt_hbar = app.add_option("--hbar", global.hbar, "quantum scale (default 1)");
  auto* opt_out = app.add_option("--out", global.out, "output path (default stdout)");
  auto* opt_format =
      app.add_option("--format", global.format, "output format: csv|json");
  app.add_option("--config", global.config_path,
                 "JSON config file; command-line flags override its values");

  ScenarioArgs args;

  auto add_scenario = [&](const std::string& name, const std::string& desc) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    cmd->fallthrough();  // global flags may follow the subcommand
    cmd->add_option("--t", args.time_text, "time sample 't' or range 'a:b:dt'");
    cmd->add_option("--sweep", args.sweep_texts,
                    "sweep axis 'name=a:b:count' or 'name=v1,v2,...' (repeatable)");
    return cmd;
  };

  CLI::App* ck = add_scenario("ck", "damped oscillator with growing mass");
  add_param(ck, args, "--m", "m", "mass");
  add_param(ck, args, "--omega", "omega", "frequency");
  add_param(ck, args, "--gamma", "gamma", "damping rate");

  CLI::App* amp = add_scenario("amplified", "amplified single oscillator");
  add_param(amp, args, "--m", "m", "mass");
  add_param(amp, args, "--omega", "omega", "frequency");
  add_param(amp, args, "--gamma", "gamma", "damping rate");

  CLI::App* bft = add_scenario("bft", "two-mode damped+amplified system");
  add_param(bft, args, "--d-abs", "d_abs", "|D| coupling modulus");
  add_param(bft, args, "--theta", "theta",
            "coupling phase in radians, open interval (pi/2, 3pi/2)");
  add_param(bft, args, "--m", "m", "mass (default 1)");
  add_param(bft, args, "--gamma", "gamma", "damping rate (default 0)");
  add_param(bft, args, "--omega", "omega", "frequency (exclusive with k, momega)");
  add_param(bft, args, "--k", "k", "spring constant, omega = sqrt(k/m)");
  add_param(bft, args, "--momega", "momega", "m*Omega/hbar directly");

  CLI::App* coupled = add_scenario("coupled", "two oscillators with bilinear coupling");
  add_param(coupled, args, "--m", "m", "mass");
  add_param(coupled, args, "--omega1", "omega1", "first frequency");
  add_param(coupled, args, "--omega2", "omega2", "second frequency");
  add_param(coupled, args, "--lambda", "lambda", "coupling strength");

  // dedicated sweep command: any scenario, at least one sweep axis
  CLI::App* sweep = add_scenario("sweep", "parameter sweep over any scenario");
  std::string sweep_scenario;
  sweep->add_option("--scenario", sweep_scenario, "ck|bft|amplified|coupled")
      ->required();
  for (const char* flag : {"--m", "--omega", "--gamma", "--omega1", "--omega2",
                           "--lambda", "--d-abs", "--theta", "--k", "--momega"}) {
    std::string key = std::string(flag).substr(2);
    std::replace(key.begin(), key.end(), '-', '_');
    add_param(sweep, args, flag, key, "base value for " + key);
  }

  CLI::App* verify = app.add_subcommand("verify", "run invariant suites");
  verify->fallthrough();
  std::string suite_name = "all";
  verify->add_option("suite", suite_name, "ck|bft|amplified|coupled|all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (verify->parsed()) {
      const auto results = qdo::verify::suite(suite_name);
      std::cout << qdo::verify::format_report(results);
      return qdo::verify::all_pass(results) ? 0 : 3;
    }

    bool format_set = opt_format->count() > 0;
    bool out_set = opt_out->count() > 0;
    bool hbar_set = opt_hbar->count() > 0;
    for (CLI::App* cmd : {ck, amp, bft, coupled}) {
      if (cmd->parsed()) args.scenario = cmd->get_name();
    }
    if (sweep->parsed()) {
      args.scenario = sweep_scenario;
      if (args.sweep_texts.empty()) {
        throw qdo::ConfigError("sweep requires at least one --sweep axis");
      }
    }
    merge_config(global, args, format_set, out_set, hbar_set, global);

    qdo::cli::RunConfig config;
    config.scenario = args.scenario;
    config.params = args.params;
    config.hbar = global.hbar;
    if (args.time_text.empty()) {
      config.time = qdo::cli::TimeSpec{0.0, 0.0, 0.0};
    } else {
      config.time = qdo::cli::parse_time_spec(args.time_text);
    }
    for (const auto& s : args.sweep_texts) {
      config.sweep.push_back(qdo::cli::parse_sweep(s));
    }
    return emit(qdo::cli::run(config), global);
  } catch (const qdo::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const qdo::RegimeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const qdo::NormalizabilityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const qdo::BlowUpError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
