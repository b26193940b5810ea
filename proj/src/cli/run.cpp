#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "mbqc/cli.hpp"

namespace mbqc::cli {

using nlohmann::json;

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write " + path);
}

CompileConfig config_for(const RunSpec& spec, int width) {
  CompileConfig cfg;
  cfg.cluster_width = width;
  cfg.m = spec.m;
  cfg.rounds = spec.rounds;
  cfg.seed = spec.seed;
  cfg.random_order = spec.random_order;
  return cfg;
}

std::string emit_grid(const MbqcGrid& g, const RunSpec& spec) {
  switch (spec.emit) {
    case Emit::Json: return grid_to_json(g, 1);
    case Emit::Svg: return render_svg(g);
    case Emit::Text: break;
  }
  return render_text(g, spec.components);
}

void summarize(std::ostream& os, const GateCircuit& c, const RunReport& r, const RunSpec& spec) {
  const auto& m = r.metrics;
  os << "qubits " << c.num_qubits << ", gates " << c.gates.size() << ", width " << m.width << ", m " << spec.m
     << ", rounds " << spec.rounds << "\n";
  os << "depth " << m.baseline_depth << " -> " << m.compiled_depth << " (reduction " << std::fixed
     << std::setprecision(3) << m.reduction_ratio << ")\n";
  os << "utilization " << m.photon_utilization_baseline << " -> " << m.photon_utilization_compiled << "\n";
  os << "compile time " << r.result.stats.seconds << " s\n" << std::defaultfloat;
  os << "equivalence " << (r.equivalence.overall ? "ok" : "FAILED");
  for (int ch : r.equivalence.mismatched()) os << " ch" << ch;
  for (const auto& v : r.equivalence.order_violations) os << "; " << v;
  os << "\naudit " << (r.violations.empty() ? "ok" : "FAILED") << "\n";
  for (const auto& v : r.violations)
    os << "  " << v.constraint << " at (" << v.at.row << ", " << v.at.col << "): " << v.detail << "\n";
  if (r.oracle_depth) {
    os << "oracle depth " << *r.oracle_depth
       << (*r.oracle_depth == m.compiled_depth ? " (matches)\n" : " (compiler is above it)\n");
  }
}

}  // namespace

GateCircuit load_circuit(const RunSpec& spec) {
  const bool file = !spec.circuit_path.empty(), bench = !spec.benchmark.empty();
  if (file == bench) throw UsageError("give exactly one of --circuit and --benchmark");
  if (file) return parse_circuit(read_file(spec.circuit_path));
  if (spec.qubits < 1) throw UsageError("--benchmark needs --qubits");
  return generate_benchmark(benchmark_from_name(spec.benchmark), spec.qubits, spec.bench_seed);
}

int resolve_width(const RunSpec& spec, int num_qubits) {
  if (spec.width && spec.width_factor) throw UsageError("give at most one of --width and --width-factor");
  if (spec.width) return *spec.width;
  return cluster_width_for(num_qubits, spec.width_factor.value_or(1.25));
}

RunReport compile_and_check(const GateCircuit& c, const RunSpec& spec) {
  const CompileConfig cfg = config_for(spec, resolve_width(spec, c.num_qubits));
  RunReport r;
  r.result = compile_multiround(c, cfg);
  r.baseline = baseline_multiround(c, cfg);
  r.metrics = metrics(r.baseline, r.result.grid);
  r.equivalence = check_equivalence(r.baseline, r.result.grid);
  r.violations = audit(r.result.grid, cfg.cluster_width);
  if (spec.oracle) {
    if (spec.rounds != 1) throw UsageError("--oracle needs a single round");
    r.oracle_depth = exhaustive_min_depth(c, cfg.cluster_width, spec.oracle_budget);
  }
  return r;
}

std::string report_json(const RunReport& r, int indent) {
  const auto& m = r.metrics;
  json eq = json::array();
  for (const auto& ch : r.equivalence.channels) eq.push_back({{"channel", ch.channel}, {"match", ch.match}});
  json violations = json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"constraint", v.constraint}, {"row", v.at.row}, {"col", v.at.col}, {"detail", v.detail}});
  json iterations = json::array();
  for (const auto& it : r.result.stats.iterations) {
    json invalid = json::object();
    for (int k = 0; k < 5; ++k)
      if (it.invalid[k]) invalid[constraint_name(static_cast<Constraint>(k))] = it.invalid[k];
    iterations.push_back({{"iteration", it.iteration},
                          {"component", it.component},
                          {"kind", kind_name(it.kind)},
                          {"generated", it.generated},
                          {"invalid", invalid},
                          {"duplicates", it.duplicates},
                          {"dead_ends", it.dead_ends},
                          {"pruned", it.pruned},
                          {"kept", it.kept},
                          {"rejected_widths", it.rejected_widths}});
  }
  json doc = {{"metrics",
               {{"width", m.width},
                {"baseline_depth", m.baseline_depth},
                {"compiled_depth", m.compiled_depth},
                {"reduction_ratio", m.reduction_ratio},
                {"photon_utilization_baseline", m.photon_utilization_baseline},
                {"photon_utilization_compiled", m.photon_utilization_compiled}}},
              {"equivalence",
               {{"overall", r.equivalence.overall}, {"channels", eq}, {"order_violations", r.equivalence.order_violations}}},
              {"audit", violations},
              {"seconds", r.result.stats.seconds},
              {"iterations", iterations}};
  if (r.oracle_depth) doc["oracle_depth"] = *r.oracle_depth;
  return doc.dump(indent) + "\n";
}

std::vector<SweepRow> sweep_m(const GateCircuit& c, const RunSpec& spec, const std::vector<int>& ms) {
  if (ms.empty()) throw UsageError("empty m sweep");
  std::vector<SweepRow> rows;
  for (int m : ms) {
    RunSpec one = spec;
    one.m = m;
    one.oracle = false;
    const auto start = std::chrono::steady_clock::now();
    const RunReport r = compile_and_check(c, one);
    SweepRow row;
    row.m = m;
    row.depth = r.metrics.compiled_depth;
    row.reduction_ratio = r.metrics.reduction_ratio;
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    row.ok = r.ok();
    rows.push_back(row);
  }
  return rows;
}

std::vector<int> parse_range(const std::string& s) {
  auto number = [&](const std::string& t) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != t.size() || v < 1) throw UsageError("bad m range '" + s + "'");
    return v;
  };
  const auto dots = s.find("..");
  const int a = number(s.substr(0, dots));
  const int b = dots == std::string::npos ? a : number(s.substr(dots + 2));
  if (b < a) throw UsageError("bad m range '" + s + "'");
  std::vector<int> out;
  for (int m = a; m <= b; ++m) out.push_back(m);
  return out;
}

int run(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    const GateCircuit c = load_circuit(spec);
    if (!spec.sweep.empty()) {
      const auto rows = sweep_m(c, spec, spec.sweep);
      std::ostringstream table;
      bool ok = true;
      if (spec.emit == Emit::Json) {
        json j = json::array();
        for (const auto& r : rows)
          j.push_back({{"m", r.m}, {"depth", r.depth}, {"reduction_ratio", r.reduction_ratio}, {"seconds", r.seconds}, {"ok", r.ok}});
        table << j.dump(1) << "\n";
      } else {
        table << "m\tdepth\treduction\tseconds\tchecks\n";
        for (const auto& r : rows)
          table << r.m << '\t' << r.depth << '\t' << std::fixed << std::setprecision(3) << r.reduction_ratio << '\t'
                << r.seconds << '\t' << (r.ok ? "ok" : "FAILED") << std::defaultfloat << '\n';
      }
      for (const auto& r : rows) ok = ok && r.ok;
      if (spec.out_path.empty())
        out << table.str();
      else
        write_file(spec.out_path, table.str());
      return ok ? 0 : 1;
    }

    const RunReport r = compile_and_check(c, spec);
    const std::string grid = emit_grid(r.result.grid, spec);
    if (spec.out_path.empty()) {
      out << grid;
      summarize(err, c, r, spec);
    } else {
      write_file(spec.out_path, grid);
      summarize(out, c, r, spec);
    }
    if (!spec.report_path.empty()) write_file(spec.report_path, report_json(r));
    return r.ok() ? 0 : 1;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const CompileError& e) {
    err << "compile failed at iteration " << e.iteration << " (component " << e.component << "): " << e.what() << "\n";
    return 1;
  } catch (const BudgetExceeded& e) {
    err << "oracle: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace mbqc::cli
