// Command-line compiler: gate circuit in, cluster-state grid out.
#include <iostream>

#include "CLI11.hpp"
#include "mbqc/cli.hpp"

int main(int argc, char** argv) {
  using namespace mbqc::cli;
  RunSpec spec;
  CLI::App app{"Compile gate circuits onto a fixed-width photonic cluster state."};
  app.set_version_flag("--version", "mbqcc 1.0");

  auto* circuit = app.add_option("--circuit", spec.circuit_path, "Circuit file")->check(CLI::ExistingFile);
  auto* bench = app.add_option("--benchmark", spec.benchmark, "Benchmark: bv, qft, iqp, hwea or hc");
  circuit->excludes(bench);
  app.add_option("--qubits", spec.qubits, "Benchmark qubit count")->needs(bench)->check(CLI::PositiveNumber);
  app.add_option("--bench-seed", spec.bench_seed, "Benchmark generator seed")->needs(bench);

  auto* width = app.add_option("--width", spec.width, "Cluster width in rows")->check(CLI::PositiveNumber);
  auto* factor = app.add_option("--width-factor", spec.width_factor, "Width as a multiple of 2N-1 (default 1.25)")
                     ->check(CLI::PositiveNumber);
  width->excludes(factor);

  app.add_option("--m", spec.m, "Partial circuits kept per width")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--rounds", spec.rounds, "Repetitions of the circuit")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--seed", spec.seed, "Seed for --random-order");
  app.add_flag("--random-order", spec.random_order, "Pick among ready components at random");

  std::string emit = "text";
  app.add_option("--emit", emit, "Grid format")->check(CLI::IsMember({"text", "json", "svg"}))->capture_default_str();
  app.add_flag("--components", spec.components, "Add a component-id raster to text output");
  app.add_option("--out", spec.out_path, "Write the grid here instead of stdout");
  app.add_option("--report", spec.report_path, "Write a JSON report with metrics, checks and iteration stats");

  std::string sweep;
  app.add_option("--sweep-m", sweep, "Compile once per m in a..b and print a table");
  app.add_flag("--oracle", spec.oracle, "Also run the exhaustive search and compare depths");
  app.add_option("--oracle-budget", spec.oracle_budget, "Candidate limit for --oracle")->capture_default_str();

  try {
    app.parse(argc, argv);
    spec.emit = emit == "json" ? Emit::Json : emit == "svg" ? Emit::Svg : Emit::Text;
    if (!sweep.empty()) spec.sweep = parse_range(sweep);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return run(spec, std::cout, std::cerr);
}
