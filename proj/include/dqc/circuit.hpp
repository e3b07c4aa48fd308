#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dqc {

/// One- or two-qubit gate. Controlled gates store the control first.
struct Gate {
  int index = 0;                ///< Ordinal position in the circuit.
  std::string name;             ///< Mnemonic (h, x, ..., cx, cz, cp, swap).
  std::vector<int> operands;    ///< Qubit ids; [control, target] for controlled gates.
  std::optional<double> param;  ///< Angle in radians for rotation/phase gates.

  bool is_two_qubit() const { return operands.size() == 2; }

  bool acts_on(int q) const {
    for (int op : operands) {
      if (op == q) return true;
    }
    return false;
  }

  /// The operand that is not q. Only meaningful for two-qubit gates.
  int other_operand(int q) const {
    return operands[0] == q ? operands[1] : operands[0];
  }

  bool operator==(const Gate&) const = default;
};

struct Circuit {
  std::string name;
  int n_qubits = 0;
  std::vector<Gate> gates;

  bool operator==(const Circuit&) const = default;
};

/// Arity of a supported mnemonic, or nullopt if unsupported.
inline std::optional<int> gate_arity(std::string_view name) {
  for (std::string_view g : {"h", "x", "y", "z", "s", "sdg", "t", "tdg"}) {
    if (name == g) return 1;
  }
  for (std::string_view g : {"rx", "ry", "rz"}) {
    if (name == g) return 1;
  }
  for (std::string_view g : {"cx", "cz", "cp", "swap"}) {
    if (name == g) return 2;
  }
  return std::nullopt;
}

/// Whether the mnemonic carries an angle parameter.
inline bool gate_takes_param(std::string_view name) {
  return name == "rx" || name == "ry" || name == "rz" || name == "cp";
}

/// Quantum Fourier transform without the terminal swap network:
/// h on each qubit, then cp(pi / 2^(j-i)) with control q_j, target q_i
/// for every later qubit q_j. Gate count is n + n(n-1)/2.
inline Circuit qft_circuit(int n) {
  if (n < 1) throw std::invalid_argument("qft_circuit: qubit count must be >= 1");
  Circuit c;
  c.name = "qft" + std::to_string(n);
  c.n_qubits = n;
  int idx = 0;
  for (int i = 0; i < n; ++i) {
    c.gates.push_back({idx++, "h", {i}, std::nullopt});
    for (int j = i + 1; j < n; ++j) {
      double angle = std::numbers::pi / std::exp2(j - i);
      c.gates.push_back({idx++, "cp", {j, i}, angle});
    }
  }
  return c;
}

struct TwoQubitGate {
  int gate_index = 0;
  int a = 0;
  int b = 0;
};

/// Two-qubit gates of the circuit in source order.
inline std::vector<TwoQubitGate> two_qubit_gates(const Circuit& c) {
  std::vector<TwoQubitGate> out;
  for (const Gate& g : c.gates) {
    if (g.is_two_qubit()) {
      out.push_back({g.index, g.operands[0], g.operands[1]});
    }
  }
  return out;
}

/// Debug emitter of the gate-list text format (`qubits N` header, one gate
/// per line). Round-trips through parse_gatelist.
inline std::string to_gatelist(const Circuit& c) {
  std::ostringstream os;
  os << "qubits " << c.n_qubits << "\n";
  for (const Gate& g : c.gates) {
    os << g.name;
    for (int q : g.operands) os << ' ' << q;
    if (g.param) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.17g", *g.param);
      os << ' ' << buf;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace dqc
