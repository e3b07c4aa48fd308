#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "dqc/circuit.hpp"
#include "dqc/graph.hpp"

namespace dqc {

enum class Locality { kSingleQubit, kLocal, kGlobal };

struct GateLocality {
  Locality kind = Locality::kSingleQubit;
  int source = -1;  ///< Partition of operand 0 when global.
  int target = -1;  ///< Partition of operand 1 when global.
};

inline GateLocality classify_gate(const Gate& g, const Partition& p) {
  if (!g.is_two_qubit()) return {Locality::kSingleQubit, -1, -1};
  int a = p.assign[g.operands[0]];
  int b = p.assign[g.operands[1]];
  if (a == b) return {Locality::kLocal, a, b};
  return {Locality::kGlobal, a, b};
}

enum class Impact : int { kNegative = -1, kNone = 0, kPositive = 1 };

/// Effect of sending qubit q to `target` on a later gate:
///  - positive: a global gate on q whose other operand sits in `target`
///    (it rides the same transfer);
///  - negative: a local two-qubit gate on q (the state is needed at home);
///  - none: everything else, including single-qubit gates on q and global
///    gates on q toward a third partition.
inline Impact impact_factor(const Partition& p, const Gate& later, int q, int target) {
  if (!later.is_two_qubit() || !later.acts_on(q)) return Impact::kNone;
  int a = p.assign[later.operands[0]];
  int b = p.assign[later.operands[1]];
  if (a == b) return Impact::kNegative;
  return p.assign[later.other_operand(q)] == target ? Impact::kPositive : Impact::kNone;
}

namespace detail {

inline int transfer_target(const Circuit& c, const Partition& p, int gate_index, int q) {
  const Gate& g = c.gates[gate_index];
  if (!g.is_two_qubit() || !g.acts_on(q)) {
    throw std::invalid_argument("transfer: gate does not act on qubit");
  }
  int target = p.assign[g.other_operand(q)];
  if (target == p.assign[q]) {
    throw std::invalid_argument("transfer: gate is not global");
  }
  return target;
}

}  // namespace detail

/// Size of the lookahead window for sending q at `gate_index`: the distance
/// (inclusive on both ends) to the first negative-impact gate, or to the end
/// of the circuit when none exists.
inline int lookahead_depth(const Circuit& c, const Partition& p, int gate_index, int q) {
  const int target = detail::transfer_target(c, p, gate_index, q);
  const int last = static_cast<int>(c.gates.size()) - 1;
  for (int j = gate_index + 1; j <= last; ++j) {
    if (impact_factor(p, c.gates[j], q, target) == Impact::kNegative) {
      return j - gate_index + 1;
    }
  }
  return last - gate_index + 1;
}

struct Contribution {
  int gate_index = 0;  ///< Circuit index of the contributing gate.
  int offset = 0;      ///< Distance k from the trigger gate, 1 <= k < depth.
  int value = 0;       ///< (depth - k) * impact.

  bool operator==(const Contribution&) const = default;
};

/// Score of one candidate transmission qubit: impacts inside the lookahead
/// window weighted by proximity, cost = sum over k of (depth - k) * E_k.
struct LookaheadEval {
  int qubit = -1;
  int home = -1;
  int target = -1;
  int depth = 0;
  int cost = 0;
  std::vector<Contribution> contributions;  ///< Nonzero terms, in window order.
};

inline LookaheadEval impact_cost(const Circuit& c, const Partition& p, int gate_index, int q) {
  LookaheadEval eval;
  eval.qubit = q;
  eval.home = p.assign[q];
  eval.target = detail::transfer_target(c, p, gate_index, q);
  eval.depth = lookahead_depth(c, p, gate_index, q);
  for (int k = 1; k < eval.depth; ++k) {
    int e = static_cast<int>(impact_factor(p, c.gates[gate_index + k], q, eval.target));
    if (e != 0) {
      int f = (eval.depth - k) * e;
      eval.contributions.push_back({gate_index + k, k, f});
      eval.cost += f;
    }
  }
  return eval;
}

/// Global gates merged into one send (plus one return) of `qubit` to `target`.
struct TransferQueue {
  int qubit = -1;
  int source = -1;
  int target = -1;
  std::vector<int> gates;  ///< Ascending circuit indices; front is the trigger.

  bool operator==(const TransferQueue&) const = default;
};

/// Starting from the global gate at `gate_index`, collect it and every later
/// uncovered global gate on q toward the same target, stopping at the first
/// local two-qubit gate on q. Gates not on q, single-qubit gates on q and
/// global gates on q toward other partitions are scanned past.
inline TransferQueue build_queue(const Circuit& c, const Partition& p, int gate_index, int q,
                                 const std::vector<char>& covered) {
  TransferQueue queue;
  queue.qubit = q;
  queue.source = p.assign[q];
  queue.target = detail::transfer_target(c, p, gate_index, q);
  queue.gates.push_back(gate_index);
  for (int j = gate_index + 1; j < static_cast<int>(c.gates.size()); ++j) {
    const Gate& g = c.gates[j];
    if (!g.is_two_qubit() || !g.acts_on(q)) continue;
    int other = p.assign[g.other_operand(q)];
    if (other == p.assign[q]) break;  // local on q ends the window
    if (other == queue.target && !covered[j]) queue.gates.push_back(j);
  }
  return queue;
}

inline TransferQueue build_queue(const Circuit& c, const Partition& p, int gate_index, int q) {
  return build_queue(c, p, gate_index, q, std::vector<char>(c.gates.size(), 0));
}

/// Ordered merged-transfer queues covering every global gate exactly once.
/// Transmission cost is two per queue (send + return).
struct TransferPlan {
  std::vector<TransferQueue> queues;
  std::map<int, int> coverage;  ///< Global gate index -> queue index.
  int tc = 0;
};

/// Left-to-right pass: for every uncovered global gate, score both operands by
/// impact_cost and transfer the higher-scoring qubit, merging what its queue
/// can carry. Ties prefer the larger queue, then the lower qubit id.
/// `forced` pins the transmission qubit for specific trigger gates, which is
/// useful for what-if comparisons.
inline TransferPlan plan_transfers(const Circuit& c, const Partition& p,
                                   const std::map<int, int>& forced = {}) {
  if (p.size() != c.n_qubits) throw std::invalid_argument("plan_transfers: partition size mismatch");
  TransferPlan plan;
  std::vector<char> covered(c.gates.size(), 0);
  for (int i = 0; i < static_cast<int>(c.gates.size()); ++i) {
    if (covered[i]) continue;
    if (classify_gate(c.gates[i], p).kind != Locality::kGlobal) continue;

    int chosen;
    if (auto it = forced.find(i); it != forced.end()) {
      chosen = it->second;
    } else {
      const int qc = c.gates[i].operands[0];
      const int qt = c.gates[i].operands[1];
      const LookaheadEval ec = impact_cost(c, p, i, qc);
      const LookaheadEval et = impact_cost(c, p, i, qt);
      if (ec.cost != et.cost) {
        chosen = ec.cost > et.cost ? qc : qt;
      } else {
        const auto queue_c = build_queue(c, p, i, qc, covered);
        const auto queue_t = build_queue(c, p, i, qt, covered);
        if (queue_c.gates.size() != queue_t.gates.size()) {
          chosen = queue_c.gates.size() > queue_t.gates.size() ? qc : qt;
        } else {
          chosen = std::min(qc, qt);
        }
      }
    }

    TransferQueue queue = build_queue(c, p, i, chosen, covered);
    const int queue_index = static_cast<int>(plan.queues.size());
    for (int g : queue.gates) {
      covered[g] = 1;
      plan.coverage[g] = queue_index;
    }
    plan.queues.push_back(std::move(queue));
  }
  plan.tc = 2 * static_cast<int>(plan.queues.size());
  return plan;
}

/// Cost of transferring every global gate separately: two per global gate.
inline int naive_cost(const Circuit& c, const Partition& p) {
  int globals = 0;
  for (const Gate& g : c.gates) {
    if (classify_gate(g, p).kind == Locality::kGlobal) ++globals;
  }
  return 2 * globals;
}

/// Minimum transmission cost over all 2^g transmission-qubit choice vectors,
/// each applied with the same greedy left-to-right queue building. Exponential
/// oracle, guarded to at most 16 global gates.
inline int brute_force_optimal(const Circuit& c, const Partition& p) {
  std::vector<int> globals;
  for (int i = 0; i < static_cast<int>(c.gates.size()); ++i) {
    if (classify_gate(c.gates[i], p).kind == Locality::kGlobal) globals.push_back(i);
  }
  const int g = static_cast<int>(globals.size());
  if (g > 16) throw std::invalid_argument("brute_force_optimal: too many global gates");
  if (g == 0) return 0;

  int best = 2 * g;
  std::vector<char> covered(c.gates.size(), 0);
  for (uint32_t mask = 0; mask < (1u << g); ++mask) {
    std::fill(covered.begin(), covered.end(), 0);
    int queues = 0;
    for (int ord = 0; ord < g; ++ord) {
      const int i = globals[ord];
      if (covered[i]) continue;
      const Gate& gate = c.gates[i];
      const int q = (mask >> ord) & 1u ? gate.operands[1] : gate.operands[0];
      TransferQueue queue = build_queue(c, p, i, q, covered);
      for (int idx : queue.gates) covered[idx] = 1;
      ++queues;
    }
    best = std::min(best, 2 * queues);
  }
  return best;
}

}  // namespace dqc
