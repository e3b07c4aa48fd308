#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "dqc/qubo.hpp"

namespace dqc {

struct SaConfig {
  uint64_t seed = 0;
  int restarts = 8;
  int sweeps = 500;
  std::optional<double> t_initial;  ///< Defaults to lambda1 of the model.
  double t_final = 0.01;

  void validate() const {
    if (restarts < 1) throw std::invalid_argument("SaConfig: restarts must be >= 1");
    if (sweeps < 1) throw std::invalid_argument("SaConfig: sweeps must be >= 1");
    if (t_final <= 0) throw std::invalid_argument("SaConfig: t_final must be > 0");
    if (t_initial && *t_initial < t_final) {
      throw std::invalid_argument("SaConfig: t_initial must be >= t_final");
    }
  }
};

struct Solution {
  std::vector<uint8_t> bits;
  double energy = 0.0;
  std::optional<Partition> partition;
  bool feasible = false;
  int restart = 0;  ///< Restart that produced the solution (0 for the exhaustive solver).
};

/// No feasible assignment was found; carries the best infeasible bits seen.
class InfeasibleError : public std::runtime_error {
 public:
  InfeasibleError(std::string message, std::vector<uint8_t> bits, double energy)
      : std::runtime_error(std::move(message)), best_bits(std::move(bits)), best_energy(energy) {}

  std::vector<uint8_t> best_bits;
  double best_energy = 0.0;
};

struct BalanceReport {
  bool ok = true;
  int worst_partition = -1;
  double worst_deviation = 0.0;
};

/// Checks max_k |n_k - N/K| <= rho with real-valued N/K.
inline BalanceReport validate_partition(const Partition& p, double rho) {
  const double ideal = static_cast<double>(p.size()) / p.k;
  BalanceReport r;
  const auto counts = p.counts();
  for (int kk = 0; kk < p.k; ++kk) {
    double dev = std::abs(counts[kk] - ideal);
    if (dev > r.worst_deviation) {
      r.worst_deviation = dev;
      r.worst_partition = kk;
    }
  }
  r.ok = r.worst_deviation <= rho;
  return r;
}

namespace detail {

// Cut-weight change of moving q from its current partition to dst.
inline int move_cut_delta(const QubitGraph& g, const std::vector<int>& assign, int q, int dst) {
  int delta = 0;
  const int src = assign[q];
  for (int u = 0; u < g.n; ++u) {
    if (u == q) continue;
    int w = g.weight(q, u);
    if (w == 0) continue;
    if (assign[u] == src) delta += w;
    if (assign[u] == dst) delta -= w;
  }
  return delta;
}

}  // namespace detail

/// Greedy rebalance: while the partition violates rho, move one qubit from the
/// fullest partition to the emptiest, choosing the qubit that increases the
/// cut weight least (ties: lowest qubit id). Valid inputs are returned
/// untouched. Stops early if no move can reduce the imbalance, which only
/// happens when rho is unsatisfiable for any assignment.
inline Partition repair_partition(const QubitGraph& g, const Partition& p, double rho) {
  if (validate_partition(p, rho).ok) return p;
  std::vector<int> assign = p.assign;
  std::vector<int> counts(p.k, 0);
  for (int id : assign) ++counts[id];

  while (true) {
    Partition current(p.k, assign);
    if (validate_partition(current, rho).ok) return current;
    int src = 0;
    int dst = 0;
    for (int kk = 1; kk < p.k; ++kk) {
      if (counts[kk] > counts[src]) src = kk;
      if (counts[kk] < counts[dst]) dst = kk;
    }
    if (counts[src] - counts[dst] < 2) return current;

    int best_q = -1;
    int best_delta = std::numeric_limits<int>::max();
    for (int q = 0; q < static_cast<int>(assign.size()); ++q) {
      if (assign[q] != src) continue;
      int delta = detail::move_cut_delta(g, assign, q, dst);
      if (delta < best_delta) {
        best_delta = delta;
        best_q = q;
      }
    }
    assign[best_q] = dst;
    --counts[src];
    ++counts[dst];
  }
}

namespace detail {

struct FlipModel {
  std::vector<double> linear;
  std::vector<std::vector<std::pair<int, double>>> adj;

  explicit FlipModel(const QuboModel& m) : linear(m.n_vars(), 0.0), adj(m.n_vars()) {
    for (const auto& [key, c] : m.coeffs) {
      const auto [u, v] = key;
      if (u == v) {
        linear[u] += c;
      } else {
        adj[u].push_back({v, c});
        adj[v].push_back({u, c});
      }
    }
  }

  double flip_delta(const std::vector<uint8_t>& bits, int v) const {
    double field = linear[v];
    for (const auto& [u, c] : adj[v]) {
      if (bits[u]) field += c;
    }
    return bits[v] ? -field : field;
  }
};

// First-improvement single-bit descent until no flip lowers the energy.
inline void greedy_descent(const FlipModel& fm, std::vector<uint8_t>& bits) {
  bool improved = true;
  while (improved) {
    improved = false;
    for (int v = 0; v < static_cast<int>(bits.size()); ++v) {
      if (fm.flip_delta(bits, v) < 0.0) {
        bits[v] ^= 1;
        improved = true;
      }
    }
  }
}

}  // namespace detail

/// Simulated annealing over single-bit flips with a geometric temperature
/// schedule. Deterministic for a fixed (model, config): restart r seeds its
/// own RNG with seed + r, and the best post-repair feasible energy wins with
/// ties broken by lowest restart index.
inline Solution solve_sa(const QuboModel& m, const SaConfig& cfg) {
  cfg.validate();
  const int nv = m.n_vars();
  const double t0 = cfg.t_initial.value_or(m.params.lambda1);
  const double tf = std::min(cfg.t_final, t0);
  const detail::FlipModel fm(m);

  std::optional<Solution> best;
  std::vector<uint8_t> best_infeasible;
  double best_infeasible_energy = std::numeric_limits<double>::infinity();

  for (int r = 0; r < cfg.restarts; ++r) {
    std::mt19937_64 rng(cfg.seed + static_cast<uint64_t>(r));
    std::uniform_int_distribution<int> pick_block(0, m.params.k - 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    std::vector<uint8_t> bits(nv, 0);
    for (int i = 0; i < m.n; ++i) bits[m.var(i, pick_block(rng))] = 1;

    double cur = energy(m, bits);
    std::vector<uint8_t> best_bits = bits;
    double best_e = cur;

    for (int sweep = 0; sweep < cfg.sweeps; ++sweep) {
      const double t = t0 * std::pow(tf / t0, static_cast<double>(sweep) / cfg.sweeps);
      for (int v = 0; v < nv; ++v) {
        const double d = fm.flip_delta(bits, v);
        if (d <= 0.0 || unit(rng) < std::exp(-d / t)) {
          bits[v] ^= 1;
          cur += d;
          if (cur < best_e) {
            best_e = cur;
            best_bits = bits;
          }
        }
      }
    }

    detail::greedy_descent(fm, best_bits);
    double exact = energy(m, best_bits);

    auto decoded = decode_bits(m, best_bits);
    if (decoded.partition) {
      Partition p = *decoded.partition;
      if (!validate_partition(p, m.params.rho).ok) {
        p = repair_partition(m.graph, p, m.params.rho);
      }
      if (validate_partition(p, m.params.rho).ok) {
        std::vector<uint8_t> repaired = encode_partition(m, p);
        double e = energy(m, repaired);
        if (!best || e < best->energy) {
          best = Solution{std::move(repaired), e, std::move(p), true, r};
        }
        continue;
      }
    }
    if (exact < best_infeasible_energy) {
      best_infeasible_energy = exact;
      best_infeasible = best_bits;
    }
  }

  if (!best) {
    throw InfeasibleError("solve_sa: no feasible solution after repair", std::move(best_infeasible),
                          best_infeasible_energy);
  }
  return *best;
}

/// Global minimum over all one-hot, rho-satisfying assignments, enumerated in
/// lexicographic order (first minimum wins ties). Guarded to K^N <= 1e6.
inline Solution solve_exhaustive(const QuboModel& m) {
  const int n = m.n;
  const int k = m.params.k;
  double space = 1.0;
  for (int i = 0; i < n; ++i) {
    space *= k;
    if (space > 1e6) throw std::invalid_argument("solve_exhaustive: instance too large");
  }

  std::vector<int> assign(n, 0);
  std::optional<Solution> best;
  while (true) {
    Partition p(k, assign);
    if (validate_partition(p, m.params.rho).ok) {
      std::vector<uint8_t> bits = encode_partition(m, p);
      double e = energy(m, bits);
      if (!best || e < best->energy) best = Solution{std::move(bits), e, std::move(p), true, 0};
    }
    int pos = n - 1;
    while (pos >= 0 && assign[pos] == k - 1) {
      assign[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++assign[pos];
  }
  if (!best) {
    throw InfeasibleError("solve_exhaustive: no feasible assignment", {}, 0.0);
  }
  return *best;
}

}  // namespace dqc
