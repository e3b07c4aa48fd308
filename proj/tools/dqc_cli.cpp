// Command-line front end: `pipeline` runs one circuit end to end, `bench`
// emits a CSV over a circuit suite, `rho-sweep` re-solves a circuit across
// load-balance tolerances.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dqc/pipeline.hpp"

namespace {

int fail(const std::string& message) {
  nlohmann::ordered_json err;
  err["error"] = message;
  std::cerr << err.dump() << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distributed quantum circuit partitioner and transfer scheduler"};
  app.require_subcommand(1);

  dqc::PipelineOptions popt;
  std::string format = "json";
  bool no_timings = false;
  double t_initial = 0.0;
  auto* pipeline = app.add_subcommand("pipeline", "Partition one circuit and plan its transfers");
  auto* input_flag = pipeline->add_option("--input", popt.input_path, "Circuit file (OpenQASM subset or gate list)");
  pipeline->add_option("--qft", popt.qft_n, "Generate a QFT circuit with this many qubits")->excludes(input_flag);
  pipeline->add_option("--k", popt.k, "Partition count")->required();
  pipeline->add_option("--rho", popt.rho, "Load-balance tolerance (qubits)");
  pipeline->add_option("--lambda1", popt.lambda1, "One-hot penalty weight");
  pipeline->add_option("--lambda2", popt.lambda2, "Balance penalty weight");
  pipeline->add_option("--phi", popt.phi, "Dispersion weight, in (-1, 0)");
  pipeline->add_option("--seed", popt.seed, "Annealer seed");
  pipeline->add_option("--restarts", popt.restarts, "Annealer restarts");
  pipeline->add_option("--sweeps", popt.sweeps, "Annealer sweeps per restart");
  auto* tinit = pipeline->add_option("--t-initial", t_initial, "Initial temperature (default: lambda1)");
  pipeline->add_option("--t-final", popt.t_final, "Final temperature");
  pipeline->add_option("--partition", popt.partition_csv, "Comma-separated partition ids (bypasses the solver)");
  pipeline->add_option("--partition-file", popt.partition_file, "File with comma-separated partition ids");
  pipeline->add_option("--format", format, "Output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  pipeline->add_flag("--no-timings", no_timings, "Omit the timings field");

  dqc::BenchOptions bopt;
  std::string suite = "qft";
  auto* bench = app.add_subcommand("bench", "Run a circuit suite and emit CSV");
  bench->add_option("--suite", suite, "Suite selector: qft")->check(CLI::IsMember({"qft"}));
  bench->add_option("--dir", bopt.dir, "Run all circuit files from a directory instead");
  bench->add_option("--k", bopt.k_values, "Partition counts")->delimiter(',');
  bench->add_option("--qft-sizes", bopt.qft_sizes, "QFT sizes for the qft suite")->delimiter(',');
  bench->add_option("--rho", bopt.rho, "Load-balance tolerance for solved partitions");
  bench->add_option("--seed", bopt.seed, "Annealer seed");
  bench->add_option("--restarts", bopt.restarts, "Annealer restarts");
  bench->add_option("--sweeps", bopt.sweeps, "Annealer sweeps per restart");

  dqc::RhoSweepOptions sopt;
  auto* sweep = app.add_subcommand("rho-sweep", "Transmission cost across load-balance tolerances");
  auto* sweep_input = sweep->add_option("--input", sopt.input_path, "Circuit file");
  sweep->add_option("--qft", sopt.qft_n, "Generate a QFT circuit")->excludes(sweep_input);
  sweep->add_option("--k", sopt.k, "Partition count")->required();
  sweep->add_option("--rhos", sopt.rhos, "Tolerances to sweep")
      ->delimiter(',')
      ->required()
      ->check([](const std::string& s) { return s.empty() ? "tolerance must not be empty" : ""; });
  sweep->add_option("--lambda1", sopt.lambda1, "One-hot penalty weight");
  sweep->add_option("--lambda2", sopt.lambda2, "Balance penalty weight");
  sweep->add_option("--phi", sopt.phi, "Dispersion weight, in (-1, 0)");
  sweep->add_option("--seed", sopt.seed, "Annealer seed");
  sweep->add_option("--restarts", sopt.restarts, "Annealer restarts");
  sweep->add_option("--sweeps", sopt.sweeps, "Annealer sweeps per restart");

  CLI11_PARSE(app, argc, argv);

  try {
    if (pipeline->parsed()) {
      if (*tinit) popt.t_initial = t_initial;
      popt.with_timings = !no_timings;
      dqc::Report report = dqc::run_pipeline(popt);
      if (format == "text") {
        std::cout << dqc::to_text(report, !popt.lambda1, !popt.lambda2, !popt.phi);
      } else {
        std::cout << dqc::to_json(report).dump(2) << "\n";
      }
    } else if (bench->parsed()) {
      std::cout << dqc::bench_csv(dqc::run_bench(bopt));
    } else if (sweep->parsed()) {
      std::cout << dqc::rho_sweep_csv(dqc::run_rho_sweep(sopt));
    }
  } catch (const std::exception& e) {
    return fail(e.what());
  }
  return 0;
}
