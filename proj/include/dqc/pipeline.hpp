#pragma once

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dqc/parse.hpp"
#include "dqc/report.hpp"
#include "dqc/solver.hpp"
#include "dqc/transfer.hpp"
#include "dqc/version.hpp"

namespace dqc {

struct PipelineOptions {
  std::optional<std::string> input_path;
  std::optional<int> qft_n;
  int k = 2;
  double rho = 1.0;
  std::optional<double> lambda1;  ///< Defaults to the documented bound.
  std::optional<double> lambda2;  ///< Defaults to 1.
  std::optional<double> phi;      ///< Defaults to -0.5.
  uint64_t seed = 0;
  int restarts = 8;
  int sweeps = 500;
  std::optional<double> t_initial;
  double t_final = 0.01;
  std::optional<std::string> partition_csv;   ///< Comma-separated ids, bypasses the solver.
  std::optional<std::string> partition_file;  ///< File with one comma-separated line.
  bool with_timings = true;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline bool looks_like_gatelist(std::string_view text) {
  size_t pos = 0;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line =
        eol == std::string_view::npos ? text.substr(pos) : text.substr(pos, eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    return line.starts_with("qubits");
  }
  return false;
}

inline std::vector<int> parse_id_list(std::string_view csv) {
  std::vector<int> ids;
  size_t pos = 0;
  while (pos <= csv.size()) {
    size_t comma = csv.find(',', pos);
    std::string_view tok =
        trim(comma == std::string_view::npos ? csv.substr(pos) : csv.substr(pos, comma - pos));
    pos = comma == std::string_view::npos ? csv.size() + 1 : comma + 1;
    if (tok.empty()) continue;
    int v = 0;
    if (!parse_int(tok, v)) throw std::runtime_error("malformed id list");
    ids.push_back(v);
  }
  return ids;
}

class StageTimer {
 public:
  explicit StageTimer(bool enabled) : enabled_(enabled), last_(clock::now()) {}

  void lap(const std::string& stage) {
    if (!enabled_) return;
    auto now = clock::now();
    timings_[stage] = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
  }

  std::optional<std::map<std::string, double>> take() {
    if (!enabled_) return std::nullopt;
    double total = 0.0;
    for (const auto& [_, ms] : timings_) total += ms;
    timings_["total"] = total;
    return timings_;
  }

 private:
  using clock = std::chrono::steady_clock;
  bool enabled_;
  clock::time_point last_;
  std::map<std::string, double> timings_;
};

}  // namespace detail

inline Circuit load_circuit(const std::string& path) {
  std::string text = detail::read_file(path);
  std::string stem = std::filesystem::path(path).stem().string();
  if (detail::looks_like_gatelist(text)) return parse_gatelist(text, stem);
  return parse_qasm(text, stem);
}

/// Blocks of consecutive qubit ids with sizes sorted ascending; the benchmark
/// layout for generated circuits (smaller blocks first, sizes differ by at
/// most one).
inline Partition contiguous_ascending_partition(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("contiguous_ascending_partition: bad k");
  const int base = n / k;
  const int rem = n % k;
  std::vector<int> assign;
  assign.reserve(n);
  for (int kk = 0; kk < k; ++kk) {
    int size = base + (kk >= k - rem ? 1 : 0);
    for (int i = 0; i < size; ++i) assign.push_back(kk);
  }
  return Partition(k, std::move(assign));
}

/// Full pass: parse/generate, build the interaction graph, partition (via the
/// annealer unless a partition was supplied), plan transfers, report.
inline Report run_pipeline(const PipelineOptions& opt) {
  if (opt.input_path.has_value() == opt.qft_n.has_value()) {
    throw std::runtime_error("exactly one of input path and qft size is required");
  }
  detail::StageTimer timer(opt.with_timings);

  Circuit circuit = opt.qft_n ? qft_circuit(*opt.qft_n) : load_circuit(*opt.input_path);
  timer.lap("parse");

  if (opt.k < 2) throw std::runtime_error("k must be >= 2");
  if (opt.k > circuit.n_qubits) throw std::runtime_error("k exceeds qubit count");

  QubitGraph graph = build_qubit_graph(circuit);
  timer.lap("graph");

  QuboParams params = QuboParams::defaults(graph, opt.k, opt.rho);
  if (opt.phi) params.phi = *opt.phi;
  if (opt.lambda1) params.lambda1 = *opt.lambda1;
  if (opt.lambda2) params.lambda2 = *opt.lambda2;
  params.validate();

  Partition partition;
  if (opt.partition_csv || opt.partition_file) {
    std::string csv = opt.partition_csv ? *opt.partition_csv
                                        : detail::read_file(*opt.partition_file);
    std::vector<int> ids = detail::parse_id_list(csv);
    if (static_cast<int>(ids.size()) != circuit.n_qubits) {
      throw std::runtime_error("partition length does not match qubit count");
    }
    partition = Partition(opt.k, std::move(ids));
    timer.lap("partition");
  } else {
    QuboModel model = build_qubo(graph, params);
    timer.lap("qubo");
    SaConfig cfg;
    cfg.seed = opt.seed;
    cfg.restarts = opt.restarts;
    cfg.sweeps = opt.sweeps;
    cfg.t_initial = opt.t_initial;
    cfg.t_final = opt.t_final;
    Solution sol = solve_sa(model, cfg);
    partition = *sol.partition;
    timer.lap("solve");
  }

  DispersionStats stats = dispersion_stats(graph, partition);
  TransferPlan plan = plan_transfers(circuit, partition);
  timer.lap("transfer");

  Report r;
  r.version = kVersion;
  r.input = opt.qft_n ? "qft:" + std::to_string(*opt.qft_n) : *opt.input_path;
  r.n_qubits = circuit.n_qubits;
  r.k = opt.k;
  r.rho = opt.rho;
  r.lambda1 = params.lambda1;
  r.lambda2 = params.lambda2;
  r.phi = params.phi;
  r.seed = opt.seed;
  r.assignment = partition.assign;
  r.sizes = partition.counts();
  r.global_gates = stats.sum_w;
  r.cut_edges = stats.n_e;
  r.f_gg = stats.f_gg;
  r.naive_tc = naive_cost(circuit, partition);
  r.la_tc = plan.tc;
  r.plan = plan.queues;
  r.timings_ms = timer.take();
  return r;
}

struct BenchOptions {
  std::vector<int> qft_sizes = {4, 8, 16, 32, 64};
  std::optional<std::string> dir;  ///< Run circuit files from this directory instead.
  std::vector<int> k_values = {2, 3, 4};
  double rho = 1.0;
  uint64_t seed = 0;
  int restarts = 8;
  int sweeps = 500;
};

struct BenchRow {
  std::string circuit;
  int n = 0;
  int k = 0;
  int naive_tc = 0;
  int la_tc = 0;
  std::string error;  ///< Nonempty when the row failed; other fields best-effort.
};

/// Generated circuits get the fixed contiguous ascending-size layout; files
/// are partitioned by the annealer. A failing file yields an error row and
/// the suite continues.
inline std::vector<BenchRow> run_bench(const BenchOptions& opt) {
  std::vector<BenchRow> rows;
  auto run_one = [&](const std::string& label, const Circuit& c, int k,
                     bool solver_partition) {
    BenchRow row;
    row.circuit = label;
    row.n = c.n_qubits;
    row.k = k;
    try {
      if (k > c.n_qubits) throw std::runtime_error("k exceeds qubit count");
      Partition p;
      if (solver_partition) {
        QubitGraph g = build_qubit_graph(c);
        QuboModel model = build_qubo(g, QuboParams::defaults(g, k, opt.rho));
        SaConfig cfg;
        cfg.seed = opt.seed;
        cfg.restarts = opt.restarts;
        cfg.sweeps = opt.sweeps;
        p = *solve_sa(model, cfg).partition;
      } else {
        p = contiguous_ascending_partition(c.n_qubits, k);
      }
      row.naive_tc = naive_cost(c, p);
      row.la_tc = plan_transfers(c, p).tc;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  };

  if (opt.dir) {
    std::vector<std::string> paths;
    for (const auto& entry : std::filesystem::directory_iterator(*opt.dir)) {
      if (entry.is_regular_file()) paths.push_back(entry.path().string());
    }
    std::sort(paths.begin(), paths.end());
    for (const std::string& path : paths) {
      std::string stem = std::filesystem::path(path).stem().string();
      for (int k : opt.k_values) {
        try {
          Circuit c = load_circuit(path);
          run_one(stem, c, k, true);
        } catch (const std::exception& e) {
          rows.push_back({stem, 0, k, 0, 0, e.what()});
        }
      }
    }
  } else {
    for (int n : opt.qft_sizes) {
      Circuit c = qft_circuit(n);
      for (int k : opt.k_values) run_one(c.name, c, k, false);
    }
  }
  return rows;
}

inline std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "circuit,n_qubits,k,naive_tc,la_tc,improvement_pct,error\n";
  for (const BenchRow& r : rows) {
    os << r.circuit << ',' << r.n << ',' << r.k << ',';
    if (r.error.empty()) {
      os << r.naive_tc << ',' << r.la_tc << ',';
      if (r.naive_tc > 0) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.2f",
                      100.0 * (r.naive_tc - r.la_tc) / static_cast<double>(r.naive_tc));
        os << buf;
      }
      os << ',';
    } else {
      std::string msg = r.error;
      std::replace(msg.begin(), msg.end(), ',', ';');
      os << ",,," << msg;
    }
    os << "\n";
  }
  return os.str();
}

struct RhoSweepOptions {
  std::optional<std::string> input_path;
  std::optional<int> qft_n;
  int k = 2;
  std::vector<double> rhos;
  std::optional<double> lambda1;
  std::optional<double> lambda2;
  std::optional<double> phi;
  uint64_t seed = 0;
  int restarts = 8;
  int sweeps = 500;
};

struct RhoSweepRow {
  std::string circuit;
  int k = 0;
  double rho = 0.0;
  int la_tc = 0;
};

/// Re-solves the partitioning at each tolerance and reports the resulting
/// transmission cost. Costs typically fall as rho grows, but that is a trend
/// of the inputs, not an asserted invariant.
inline std::vector<RhoSweepRow> run_rho_sweep(const RhoSweepOptions& opt) {
  if (opt.rhos.empty()) throw std::runtime_error("rho list must not be empty");
  if (opt.input_path.has_value() == opt.qft_n.has_value()) {
    throw std::runtime_error("exactly one of input path and qft size is required");
  }
  Circuit circuit = opt.qft_n ? qft_circuit(*opt.qft_n) : load_circuit(*opt.input_path);
  if (opt.k < 2) throw std::runtime_error("k must be >= 2");
  if (opt.k > circuit.n_qubits) throw std::runtime_error("k exceeds qubit count");
  QubitGraph graph = build_qubit_graph(circuit);

  std::vector<RhoSweepRow> rows;
  for (double rho : opt.rhos) {
    QuboParams params = QuboParams::defaults(graph, opt.k, rho);
    if (opt.phi) params.phi = *opt.phi;
    if (opt.lambda1) params.lambda1 = *opt.lambda1;
    if (opt.lambda2) params.lambda2 = *opt.lambda2;
    QuboModel model = build_qubo(graph, params);
    SaConfig cfg;
    cfg.seed = opt.seed;
    cfg.restarts = opt.restarts;
    cfg.sweeps = opt.sweeps;
    Solution sol = solve_sa(model, cfg);
    rows.push_back({circuit.name, opt.k, rho, plan_transfers(circuit, *sol.partition).tc});
  }
  return rows;
}

inline std::string rho_sweep_csv(const std::vector<RhoSweepRow>& rows) {
  std::ostringstream os;
  os << "circuit,k,rho,la_tc\n";
  for (const RhoSweepRow& r : rows) {
    os << r.circuit << ',' << r.k << ',' << r.rho << ',' << r.la_tc << "\n";
  }
  return os.str();
}

}  // namespace dqc
