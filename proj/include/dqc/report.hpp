#pragma once

#include <cstdint>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dqc/graph.hpp"
#include "dqc/transfer.hpp"

namespace dqc {

/// Pipeline result: the partition, both cut indicators, and the transfer plan
/// with its cost against the naive two-per-gate baseline.
struct Report {
  std::string version;
  std::string input;
  int n_qubits = 0;
  int k = 0;
  double rho = 0.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double phi = 0.0;
  uint64_t seed = 0;
  std::vector<int> assignment;
  std::vector<int> sizes;
  int global_gates = 0;  ///< Total weight across the cut.
  int cut_edges = 0;     ///< Distinct qubit pairs across the cut.
  std::optional<Rational> f_gg;
  int naive_tc = 0;
  int la_tc = 0;
  std::vector<TransferQueue> plan;
  std::optional<std::map<std::string, double>> timings_ms;

  bool operator==(const Report&) const = default;
};

inline nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["version"] = r.version;
  j["input"] = r.input;
  j["n_qubits"] = r.n_qubits;
  j["k"] = r.k;
  j["rho"] = r.rho;
  j["lambda1"] = r.lambda1;
  j["lambda2"] = r.lambda2;
  j["phi"] = r.phi;
  j["seed"] = r.seed;
  j["assignment"] = r.assignment;
  j["sizes"] = r.sizes;
  j["global_gates"] = r.global_gates;
  j["cut_edges"] = r.cut_edges;
  j["f_gg"] = r.f_gg ? nlohmann::ordered_json(r.f_gg->str()) : nlohmann::ordered_json(nullptr);
  j["naive_tc"] = r.naive_tc;
  j["la_tc"] = r.la_tc;
  nlohmann::ordered_json plan = nlohmann::ordered_json::array();
  for (const TransferQueue& q : r.plan) {
    plan.push_back({{"qubit", q.qubit}, {"source", q.source}, {"target", q.target}, {"gates", q.gates}});
  }
  j["plan"] = std::move(plan);
  if (r.timings_ms) j["timings_ms"] = *r.timings_ms;
  return j;
}

inline Report report_from_json(const nlohmann::ordered_json& j) {
  Report r;
  r.version = j.at("version").get<std::string>();
  r.input = j.at("input").get<std::string>();
  r.n_qubits = j.at("n_qubits").get<int>();
  r.k = j.at("k").get<int>();
  r.rho = j.at("rho").get<double>();
  r.lambda1 = j.at("lambda1").get<double>();
  r.lambda2 = j.at("lambda2").get<double>();
  r.phi = j.at("phi").get<double>();
  r.seed = j.at("seed").get<uint64_t>();
  r.assignment = j.at("assignment").get<std::vector<int>>();
  r.sizes = j.at("sizes").get<std::vector<int>>();
  r.global_gates = j.at("global_gates").get<int>();
  r.cut_edges = j.at("cut_edges").get<int>();
  if (!j.at("f_gg").is_null()) {
    std::string s = j.at("f_gg").get<std::string>();
    size_t slash = s.find('/');
    r.f_gg = Rational{std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1))};
  }
  r.naive_tc = j.at("naive_tc").get<int>();
  r.la_tc = j.at("la_tc").get<int>();
  for (const auto& q : j.at("plan")) {
    TransferQueue queue;
    queue.qubit = q.at("qubit").get<int>();
    queue.source = q.at("source").get<int>();
    queue.target = q.at("target").get<int>();
    queue.gates = q.at("gates").get<std::vector<int>>();
    r.plan.push_back(std::move(queue));
  }
  if (j.contains("timings_ms")) {
    r.timings_ms = j.at("timings_ms").get<std::map<std::string, double>>();
  }
  return r;
}

/// Aligned human-readable rendering of the report. Parameters that were left
/// at their tool defaults are marked as such.
inline std::string to_text(const Report& r, bool lambda1_default = false,
                           bool lambda2_default = false, bool phi_default = false) {
  std::ostringstream os;
  auto row = [&os](const std::string& key, const std::string& value) {
    os << std::left << std::setw(14) << key << value << "\n";
  };
  auto num = [](double v) {
    std::ostringstream s;
    s << v;
    return s.str();
  };
  row("version", r.version);
  row("input", r.input);
  row("n_qubits", std::to_string(r.n_qubits));
  row("k", std::to_string(r.k));
  row("rho", num(r.rho));
  row("lambda1", num(r.lambda1) + (lambda1_default ? " (default)" : ""));
  row("lambda2", num(r.lambda2) + (lambda2_default ? " (default)" : ""));
  row("phi", num(r.phi) + (phi_default ? " (default)" : ""));
  row("seed", std::to_string(r.seed));
  auto joined = [](const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v[i]);
    }
    return s;
  };
  row("assignment", joined(r.assignment));
  row("sizes", joined(r.sizes));
  row("global_gates", std::to_string(r.global_gates));
  row("cut_edges", std::to_string(r.cut_edges));
  row("f_gg", r.f_gg ? r.f_gg->str() : "n/a");
  row("naive_tc", std::to_string(r.naive_tc));
  row("la_tc", std::to_string(r.la_tc));
  for (size_t i = 0; i < r.plan.size(); ++i) {
    const TransferQueue& q = r.plan[i];
    os << "queue " << std::setw(3) << i << "  q" << q.qubit << "  P" << q.source << "->P"
       << q.target << "  gates " << joined(q.gates) << "\n";
  }
  if (r.timings_ms) {
    for (const auto& [stage, ms] : *r.timings_ms) {
      os << "time " << std::left << std::setw(9) << stage << " " << ms << " ms\n";
    }
  }
  return os.str();
}

}  // namespace dqc
