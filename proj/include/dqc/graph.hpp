#pragma once

#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "dqc/circuit.hpp"

namespace dqc {

/// Exact ratio kept unreduced so reports show the raw numerator/denominator.
struct Rational {
  long long num = 0;
  long long den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

  bool operator==(const Rational&) const = default;
};

struct GraphEdge {
  int a = 0;
  int b = 0;
  int w = 0;
};

/// Qubit-weighted interaction graph: vertices are qubits, W_ij counts the
/// two-qubit gates acting on the pair {i, j}. Symmetric, zero diagonal.
struct QubitGraph {
  int n = 0;
  std::vector<int> w;  // row-major n*n

  int weight(int i, int j) const { return w[static_cast<size_t>(i) * n + j]; }

  void add(int i, int j, int amount) {
    w[static_cast<size_t>(i) * n + j] += amount;
    w[static_cast<size_t>(j) * n + i] += amount;
  }

  static QubitGraph empty(int n) {
    QubitGraph g;
    g.n = n;
    g.w.assign(static_cast<size_t>(n) * n, 0);
    return g;
  }

  static QubitGraph from_edges(int n, const std::vector<std::tuple<int, int, int>>& edges) {
    QubitGraph g = empty(n);
    for (auto [i, j, wij] : edges) {
      if (i == j || i < 0 || j < 0 || i >= n || j >= n || wij < 0) {
        throw std::invalid_argument("from_edges: bad edge");
      }
      g.add(i, j, wij);
    }
    return g;
  }

  /// Nonzero edges with a < b, lexicographic order.
  std::vector<GraphEdge> edges() const {
    std::vector<GraphEdge> out;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (weight(i, j) > 0) out.push_back({i, j, weight(i, j)});
      }
    }
    return out;
  }

  int total_weight() const {
    int sum = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) sum += weight(i, j);
    }
    return sum;
  }

  int edge_count() const { return static_cast<int>(edges().size()); }
};

/// Assignment of every qubit to one of k partitions.
struct Partition {
  int k = 0;
  std::vector<int> assign;

  Partition() = default;
  Partition(int k_, std::vector<int> assign_) : k(k_), assign(std::move(assign_)) {
    if (k < 1) throw std::invalid_argument("Partition: k must be >= 1");
    for (int id : assign) {
      if (id < 0 || id >= k) throw std::invalid_argument("Partition: id out of range");
    }
  }

  int size() const { return static_cast<int>(assign.size()); }

  std::vector<int> counts() const {
    std::vector<int> c(k, 0);
    for (int id : assign) ++c[id];
    return c;
  }

  bool operator==(const Partition&) const = default;
};

inline QubitGraph build_qubit_graph(const Circuit& c) {
  QubitGraph g = QubitGraph::empty(c.n_qubits);
  for (const auto& tq : two_qubit_gates(c)) g.add(tq.a, tq.b, 1);
  return g;
}

/// Inter-partition totals: sum_w counts global gates, n_e counts the distinct
/// qubit pairs they act on, f_gg = sum_w / n_e (absent when n_e is zero).
struct DispersionStats {
  int sum_w = 0;
  int n_e = 0;
  std::optional<Rational> f_gg;

  bool operator==(const DispersionStats&) const = default;
};

inline DispersionStats dispersion_stats(const QubitGraph& g, const Partition& p) {
  if (p.size() != g.n) throw std::invalid_argument("dispersion_stats: partition size mismatch");
  DispersionStats s;
  for (int i = 0; i < g.n; ++i) {
    for (int j = i + 1; j < g.n; ++j) {
      int wij = g.weight(i, j);
      if (wij > 0 && p.assign[i] != p.assign[j]) {
        s.sum_w += wij;
        s.n_e += 1;
      }
    }
  }
  if (s.n_e > 0) s.f_gg = Rational{s.sum_w, s.n_e};
  return s;
}

inline int cut_weight(const QubitGraph& g, const Partition& p) {
  return dispersion_stats(g, p).sum_w;
}

inline int intra_weight(const QubitGraph& g, const Partition& p) {
  return g.total_weight() - cut_weight(g, p);
}

/// Debug dump: one `i j w` line per edge, i < j.
inline std::string to_edge_list(const QubitGraph& g) {
  std::ostringstream os;
  for (const GraphEdge& e : g.edges()) os << e.a << ' ' << e.b << ' ' << e.w << "\n";
  return os.str();
}

}  // namespace dqc
