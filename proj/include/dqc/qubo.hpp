#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dqc/graph.hpp"

namespace dqc {

/// Weights of the partitioning QUBO.
///
/// phi in (-1, 0) trades cut weight against cut-edge count: the objective over
/// feasible assignments is (1+phi)*cut_weight - phi*cut_edges, so with
/// phi = -0.5 two partitions of equal cut weight are ranked by how few
/// distinct qubit pairs the global gates touch (fewer pairs merge better).
struct QuboParams {
  int k = 2;             ///< Partition count.
  double rho = 1.0;      ///< Load-balance tolerance in qubits.
  double lambda1 = 1.0;  ///< One-hot penalty weight.
  double lambda2 = 1.0;  ///< Balance penalty weight.
  double phi = -0.5;     ///< Dispersion weight.

  /// lambda1 = 2*(1+|phi|)*total_weight + k*n strictly exceeds any objective
  /// gain available from breaking one-hot; lambda2 = 1, phi = -0.5.
  static QuboParams defaults(const QubitGraph& g, int k, double rho = 1.0) {
    QuboParams p;
    p.k = k;
    p.rho = rho;
    p.phi = -0.5;
    p.lambda1 = 2.0 * (1.0 + 0.5) * g.total_weight() + static_cast<double>(k) * g.n;
    p.lambda2 = 1.0;
    return p;
  }

  void validate() const {
    if (k < 2) throw std::invalid_argument("QuboParams: k must be >= 2");
    if (rho < 0) throw std::invalid_argument("QuboParams: rho must be >= 0");
    if (lambda1 <= 0) throw std::invalid_argument("QuboParams: lambda1 must be > 0");
    if (lambda2 < 0) throw std::invalid_argument("QuboParams: lambda2 must be >= 0");
    if (phi <= -1.0 || phi >= 0.0) throw std::invalid_argument("QuboParams: phi must be in (-1, 0)");
  }
};

/// Binary model over n*k variables; bit var(i, b) = i*k + b says qubit i sits
/// in block b. Diagonal entries of `coeffs` hold linear terms. Energy of a bit
/// vector x is offset + sum over stored pairs of coeff * x_u * x_v.
struct QuboModel {
  int n = 0;
  QuboParams params;
  std::map<std::pair<int, int>, double> coeffs;  // key (u, v) with u <= v
  double offset = 0.0;
  QubitGraph graph;  ///< Source graph, kept so the solver can repair by cut delta.

  int n_vars() const { return n * params.k; }
  int var(int qubit, int part) const { return qubit * params.k + part; }
};

/// Builds the partitioning QUBO. Over one-hot assignments the energy equals,
/// up to a constant,
///   (1+phi)*cut_weight - phi*cut_edges + lambda2 * sum_k (n_k - n/k)^2,
/// and each qubit violating one-hot adds lambda1 * (sum_k x_ik - 1)^2.
inline QuboModel build_qubo(const QubitGraph& g, const QuboParams& params) {
  params.validate();
  if (g.n < params.k) throw std::invalid_argument("build_qubo: k exceeds qubit count");

  QuboModel m;
  m.n = g.n;
  m.params = params;
  m.graph = g;

  const int n = g.n;
  const int k = params.k;
  const double phi = params.phi;
  const double nk = static_cast<double>(n) / k;
  const int total_w = g.total_weight();
  const int total_e = g.edge_count();

  auto add = [&m](int u, int v, double c) {
    if (u > v) std::swap(u, v);
    m.coeffs[{u, v}] += c;
  };

  // Cut objective: for every edge, -(1+phi)*W_ij + phi on each same-block
  // variable pair; constants absorbed into the offset.
  for (const GraphEdge& e : g.edges()) {
    for (int kk = 0; kk < k; ++kk) {
      add(m.var(e.a, kk), m.var(e.b, kk), -(1.0 + phi) * e.w + phi);
    }
  }
  m.offset += k * (1.0 + phi) * total_w - phi * k * total_e;

  // One-hot penalty lambda1 * (sum_k x_ik - 1)^2 per qubit.
  for (int i = 0; i < n; ++i) {
    for (int a = 0; a < k; ++a) {
      add(m.var(i, a), m.var(i, a), -params.lambda1);
      for (int b = a + 1; b < k; ++b) {
        add(m.var(i, a), m.var(i, b), 2.0 * params.lambda1);
      }
    }
  }
  m.offset += params.lambda1 * n;

  // Balance penalty lambda2 * sum_k (n_k - n/k)^2.
  if (params.lambda2 > 0) {
    for (int kk = 0; kk < k; ++kk) {
      for (int i = 0; i < n; ++i) {
        add(m.var(i, kk), m.var(i, kk), params.lambda2 * (1.0 - 2.0 * nk));
        for (int j = i + 1; j < n; ++j) {
          add(m.var(i, kk), m.var(j, kk), 2.0 * params.lambda2);
        }
      }
    }
    m.offset += params.lambda2 * nk * nk * k;
  }

  for (auto it = m.coeffs.begin(); it != m.coeffs.end();) {
    it = it->second == 0.0 ? m.coeffs.erase(it) : std::next(it);
  }
  return m;
}

inline double energy(const QuboModel& m, const std::vector<uint8_t>& bits) {
  if (static_cast<int>(bits.size()) != m.n_vars()) {
    throw std::invalid_argument("energy: bit vector length mismatch");
  }
  double e = m.offset;
  for (const auto& [key, c] : m.coeffs) {
    const auto [u, v] = key;
    if (bits[u] && bits[v]) e += c;
  }
  return e;
}

inline std::vector<uint8_t> encode_partition(const QuboModel& m, const Partition& p) {
  if (p.k != m.params.k || p.size() != m.n) {
    throw std::invalid_argument("encode_partition: shape mismatch");
  }
  std::vector<uint8_t> bits(m.n_vars(), 0);
  for (int i = 0; i < m.n; ++i) bits[m.var(i, p.assign[i])] = 1;
  return bits;
}

/// Decoded partition, or the first qubit whose bits are not one-hot.
struct DecodeResult {
  std::optional<Partition> partition;
  int first_violation = -1;
};

inline DecodeResult decode_bits(const QuboModel& m, const std::vector<uint8_t>& bits) {
  if (static_cast<int>(bits.size()) != m.n_vars()) {
    throw std::invalid_argument("decode_bits: bit vector length mismatch");
  }
  std::vector<int> assign(m.n, -1);
  for (int i = 0; i < m.n; ++i) {
    int ones = 0;
    for (int kk = 0; kk < m.params.k; ++kk) {
      if (bits[m.var(i, kk)]) {
        ++ones;
        assign[i] = kk;
      }
    }
    if (ones != 1) return {std::nullopt, i};
  }
  return {Partition(m.params.k, std::move(assign)), -1};
}

/// Text dump for cross-checking against external solvers: `u v coeff` lines
/// (u <= v) followed by `offset c`.
inline std::string dump_qubo(const QuboModel& m) {
  std::ostringstream os;
  char buf[40];
  for (const auto& [key, c] : m.coeffs) {
    std::snprintf(buf, sizeof(buf), "%.17g", c);
    os << key.first << ' ' << key.second << ' ' << buf << "\n";
  }
  std::snprintf(buf, sizeof(buf), "%.17g", m.offset);
  os << "offset " << buf << "\n";
  return os.str();
}

}  // namespace dqc
