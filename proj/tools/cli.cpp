#include "cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"

#include "hedgesim/errors.hpp"
#include "hedgesim/game.hpp"
#include "hedgesim/hedging.hpp"
#include "hedgesim/report.hpp"
#include "hedgesim/scenario.hpp"
#include "hedgesim/semantics.hpp"

namespace hedgesim::cli {

namespace {

enum class Format { native, csv, json };

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Scenario load_scenario(const std::string& path) {
  try {
    return parse_scenario(read_file(path));
  } catch (const ParseError& e) {
    throw Error(path + ": " + e.what());
  } catch (const RangeError& e) {
    throw Error(path + ": " + e.what());
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Epistemic hedging simulator: forced-march models, assertion dynamics, "
               "coordination thresholds and hedging traces",
               "hedgesim"};
  app.require_subcommand(1);

  std::string out_path;
  std::string format_name;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "Write the report to this file instead of stdout");
    cmd->add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"csv", "json"}, CLI::ignore_case).description(""))
        ->type_name("csv|json");
  };

  std::string scenario_path;
  auto* simulate = app.add_subcommand("simulate", "Run a scenario end to end");
  simulate->add_option("scenario", scenario_path, "Scenario file")->required();
  add_common(simulate);

  std::size_t delta_steps = 0, gamma_steps = 0;
  double tau = 0.5;
  auto* sweep = app.add_subcommand("sweep", "Classify equilibria over a (delta, gamma) grid");
  sweep->add_option("--delta-steps", delta_steps, "Interior delta grid points")
      ->required()
      ->check(CLI::PositiveNumber);
  sweep->add_option("--gamma-steps", gamma_steps, "Interior gamma grid points")
      ->required()
      ->check(CLI::PositiveNumber);
  sweep->add_option("--tau", tau, "Action tipping threshold")->check(CLI::Range(0.0, 1.0));
  add_common(sweep);

  double delta = 0, gamma = 0, hesitation = 0.5, tolerance = 1e-6;
  std::size_t steps = 50;
  auto* hedge = app.add_subcommand("hedge", "Trace the hedging recurrence and step-indexed utilities");
  hedge->add_option("--delta", delta, "Prior split delta")->required();
  hedge->add_option("--gamma", gamma, "Misalignment chance gamma")->required();
  hedge->add_option("--steps", steps, "Last step to record")->required();
  hedge->add_option("--tau", tau, "Action tipping threshold");
  hedge->add_option("--hesitation", hesitation, "Listener's propensity for a after the hedge");
  hedge->add_option("--tolerance", tolerance, "Pair-sum convergence tolerance");
  add_common(hedge);

  auto* frame = app.add_subcommand("frame-check", "Report frame properties of a scenario's model");
  frame->add_option("scenario", scenario_path, "Scenario file")->required();
  add_common(frame);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "hedgesim: " << e.what() << "\n\n" << app.help();
    return 2;
  }
  format_name = CLI::detail::to_lower(format_name);
  const Format format = format_name == "csv"    ? Format::csv
                        : format_name == "json" ? Format::json
                                                : Format::native;

  try {
    std::ostringstream buffer;
    if (simulate->parsed()) {
      const RunReport report = run_scenario(load_scenario(scenario_path));
      if (format == Format::csv)
        write_dialogue_csv(buffer, report);
      else
        write_run_jsonl(buffer, report);
    } else if (sweep->parsed()) {
      const auto rows =
          threshold_sweep(interior_grid(delta_steps), interior_grid(gamma_steps), tau);
      if (format == Format::json)
        write_sweep_json(buffer, rows);
      else
        write_sweep_csv(buffer, rows);
    } else if (hedge->parsed()) {
      const GameConfig config(delta, gamma, tau, 0.01, PayoffMatrix::coordination(), hesitation);
      const HedgingTrace trace = run_hedging(config, steps, tolerance);
      if (format == Format::json)
        write_hedging_json(buffer, trace);
      else
        write_hedging_csv(buffer, trace);
    } else if (frame->parsed()) {
      const Scenario s = load_scenario(scenario_path);
      const PooledModel pooled = pool_states(s.forced_march());
      const FrameReport report = check_frame(pooled.model);
      if (format == Format::csv)
        write_frame_csv(buffer, pooled.model, report);
      else if (format == Format::json)
        write_frame_json(buffer, pooled.model, report);
      else
        buffer << describe(pooled.model, report) << '\n';
    }

    if (out_path.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(out_path, std::ios::binary);
      if (!file) throw Error("cannot write '" + out_path + "'");
      file << buffer.str();
      if (!file) throw Error("failed writing '" + out_path + "'");
    }
  } catch (const std::exception& e) {
    err << "hedgesim: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace hedgesim::cli
