#include "dqc/graph.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "dqc/parse.hpp"
#include "test_circuits.hpp"

namespace dqc {
namespace {

TEST(QubitGraph, QftFourHasAllPairsWeightOne) {
  QubitGraph g = build_qubit_graph(qft_circuit(4));
  auto edges = g.edges();
  EXPECT_EQ(edges.size(), 6u);
  for (const GraphEdge& e : edges) EXPECT_EQ(e.w, 1);
}

TEST(QubitGraph, NoTwoQubitGatesGivesZeroMatrix) {
  Circuit c = parse_gatelist("qubits 3\nh 0\nh 1\n");
  QubitGraph g = build_qubit_graph(c);
  EXPECT_EQ(g.total_weight(), 0);
  EXPECT_TRUE(g.edges().empty());
}

TEST(QubitGraph, SixQubitSampleWeights) {
  QubitGraph g = build_qubit_graph(parse_qasm(testing::kSixQubitQasm));
  EXPECT_EQ(g.weight(1, 4), 2);
  for (auto [a, b] : {std::pair{0, 3}, {0, 5}, {0, 4}, {0, 2}, {1, 3}, {2, 5}}) {
    EXPECT_EQ(g.weight(a, b), 1) << a << "," << b;
    EXPECT_EQ(g.weight(b, a), 1);
  }
  EXPECT_EQ(g.total_weight(), 8);
  EXPECT_EQ(g.edge_count(), 7);
}

TEST(QubitGraph, DirectionIsDiscarded) {
  Circuit c = parse_gatelist("qubits 2\ncx 0 1\ncx 1 0\n");
  EXPECT_EQ(build_qubit_graph(c).weight(0, 1), 2);
}

TEST(QubitGraph, SwapCountsAsOneInteraction) {
  Circuit c = parse_gatelist("qubits 3\nswap 0 1\ncz 1 2\n");
  QubitGraph g = build_qubit_graph(c);
  EXPECT_EQ(g.weight(0, 1), 1);
  EXPECT_EQ(g.weight(1, 2), 1);
}

TEST(Dispersion, GoldenSixOverFive) {
  QubitGraph g =
      QubitGraph::from_edges(6, {{0, 3, 1}, {0, 4, 1}, {1, 4, 1}, {0, 5, 2}, {1, 3, 1}});
  DispersionStats s = dispersion_stats(g, Partition(2, {0, 0, 0, 1, 1, 1}));
  EXPECT_EQ(s.sum_w, 6);
  EXPECT_EQ(s.n_e, 5);
  ASSERT_TRUE(s.f_gg.has_value());
  EXPECT_EQ(s.f_gg->str(), "6/5");
}

TEST(Dispersion, GoldenSixOverSix) {
  QubitGraph g = QubitGraph::from_edges(
      6, {{0, 2, 1}, {0, 3, 1}, {0, 4, 1}, {1, 2, 1}, {1, 4, 1}, {3, 5, 1}});
  DispersionStats s = dispersion_stats(g, Partition(2, {0, 0, 1, 1, 1, 0}));
  EXPECT_EQ(s.sum_w, 6);
  EXPECT_EQ(s.n_e, 6);
  ASSERT_TRUE(s.f_gg.has_value());
  EXPECT_EQ(s.f_gg->str(), "6/6");
}

TEST(Dispersion, AbsentWhenEverythingIsLocal) {
  QubitGraph g = QubitGraph::from_edges(3, {{0, 1, 2}, {1, 2, 1}});
  DispersionStats s = dispersion_stats(g, Partition(1, {0, 0, 0}));
  EXPECT_EQ(s.sum_w, 0);
  EXPECT_EQ(s.n_e, 0);
  EXPECT_FALSE(s.f_gg.has_value());
}

TEST(CutWeight, SixQubitSampleMinCutPartition) {
  QubitGraph g = build_qubit_graph(parse_qasm(testing::kSixQubitQasm));
  EXPECT_EQ(cut_weight(g, Partition(2, {0, 1, 0, 1, 1, 0})), 2);
}

TEST(CutWeight, PathGraphSplit) {
  QubitGraph g = QubitGraph::from_edges(3, {{0, 1, 1}, {1, 2, 1}});
  EXPECT_EQ(cut_weight(g, Partition(2, {0, 1, 1})), 1);
}

TEST(CutWeight, SinglePartitionIsZero) {
  QubitGraph g = build_qubit_graph(qft_circuit(5));
  EXPECT_EQ(cut_weight(g, Partition(1, {0, 0, 0, 0, 0})), 0);
}

TEST(CutWeight, ConservationAgainstIntraWeight) {
  for (uint64_t seed = 0; seed < 30; ++seed) {
    QubitGraph g = testing::random_graph(seed);
    for (int k : {2, 3}) {
      Partition p = testing::random_partition(seed * 7 + k, g.n, k);
      EXPECT_EQ(cut_weight(g, p) + intra_weight(g, p), g.total_weight());
    }
  }
}

TEST(Dispersion, InvariantUnderLabelPermutation) {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    QubitGraph g = testing::random_graph(seed);
    Partition p = testing::random_partition(seed + 99, g.n, 3);
    std::vector<int> relabel = {2, 0, 1};
    std::vector<int> permuted(p.assign.size());
    for (size_t i = 0; i < p.assign.size(); ++i) permuted[i] = relabel[p.assign[i]];
    EXPECT_EQ(dispersion_stats(g, p), dispersion_stats(g, Partition(3, permuted)));
  }
}

TEST(Dispersion, RatioBounds) {
  for (uint64_t seed = 0; seed < 30; ++seed) {
    QubitGraph g = testing::random_graph(seed);
    Partition p = testing::random_partition(seed + 5, g.n, 2);
    DispersionStats s = dispersion_stats(g, p);
    if (s.n_e > 0) {
      EXPECT_GE(s.f_gg->value(), 1.0);
      EXPECT_LE(s.f_gg->value(), static_cast<double>(s.sum_w));
      EXPECT_GE(s.sum_w, s.n_e);
    }
  }
}

TEST(QubitGraph, EdgeListDump) {
  QubitGraph g = QubitGraph::from_edges(3, {{0, 2, 2}, {0, 1, 1}});
  EXPECT_EQ(to_edge_list(g), "0 1 1\n0 2 2\n");
}

TEST(Partition, RejectsOutOfRangeIds) {
  EXPECT_THROW(Partition(2, {0, 2}), std::invalid_argument);
  EXPECT_THROW(Partition(0, {}), std::invalid_argument);
}

TEST(Partition, CountsSumToSize) {
  Partition p(3, {0, 1, 1, 2, 2, 2});
  auto counts = p.counts();
  EXPECT_EQ(counts, std::vector<int>({1, 2, 3}));
  EXPECT_EQ(std::accumulate(counts.begin(), counts.end(), 0), p.size());
}

}  // namespace
}  // namespace dqc
