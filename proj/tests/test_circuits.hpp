#pragma once

// Shared sample circuits, graphs and seeded generators for the test suites.

#include <random>
#include <vector>

#include "dqc/circuit.hpp"
#include "dqc/graph.hpp"

namespace dqc::testing {

// Six-qubit sample program, 10 gates of which 8 are two-qubit.
inline constexpr const char* kSixQubitQasm = R"(OPENQASM 2.0;
include "qelib1.inc";
qreg q[6];
h q[0];
cx q[1],q[4];
h q[5];
cx q[0],q[3];
cx q[0],q[5];
cx q[4],q[0];
cx q[3],q[1];
cx q[2],q[5];
cx q[4],q[1];
cx q[0],q[2];
)";

inline Circuit make_circuit(int n, const std::vector<std::vector<int>>& two_qubit_ops) {
  Circuit c;
  c.name = "sample";
  c.n_qubits = n;
  for (const auto& ops : two_qubit_ops) {
    c.gates.push_back({static_cast<int>(c.gates.size()), "cx", ops, std::nullopt});
  }
  return c;
}

// Five qubits over two blocks; every gate is global under its partition.
inline Circuit five_qubit_sample() {
  return make_circuit(5, {{0, 3}, {0, 4}, {3, 2}, {3, 1}, {1, 4}});
}

inline Partition five_qubit_partition() { return Partition(2, {0, 0, 0, 1, 1}); }

// Eight qubits over three blocks; mixes global, local and cross-block gates.
inline Circuit eight_qubit_sample() {
  return make_circuit(
      8, {{0, 3}, {5, 7}, {0, 4}, {5, 6}, {3, 2}, {3, 1}, {1, 4}, {1, 0}, {3, 4}, {0, 7}});
}

inline Partition eight_qubit_partition() { return Partition(3, {0, 0, 0, 1, 1, 2, 2, 2}); }

inline Circuit random_circuit(uint64_t seed, int max_qubits = 10, int max_gates = 40) {
  std::mt19937_64 rng(seed);
  const int n = std::uniform_int_distribution<int>(2, max_qubits)(rng);
  const int gates = std::uniform_int_distribution<int>(1, max_gates)(rng);
  Circuit c;
  c.name = "random" + std::to_string(seed);
  c.n_qubits = n;
  std::uniform_int_distribution<int> qubit(0, n - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < gates; ++i) {
    if (unit(rng) < 0.7) {
      int a = qubit(rng);
      int b = qubit(rng);
      while (b == a) b = qubit(rng);
      c.gates.push_back({i, "cx", {a, b}, std::nullopt});
    } else {
      c.gates.push_back({i, "h", {qubit(rng)}, std::nullopt});
    }
  }
  return c;
}

inline Partition random_partition(uint64_t seed, int n, int k) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> block(0, k - 1);
  std::vector<int> assign(n);
  for (int& id : assign) id = block(rng);
  return Partition(k, std::move(assign));
}

inline QubitGraph random_graph(uint64_t seed, int max_qubits = 8) {
  std::mt19937_64 rng(seed);
  const int n = std::uniform_int_distribution<int>(2, max_qubits)(rng);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> weight(1, 3);
  QubitGraph g = QubitGraph::empty(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (unit(rng) < 0.5) g.add(i, j, weight(rng));
    }
  }
  return g;
}

}  // namespace dqc::testing
