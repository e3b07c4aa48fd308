#include "dqc/circuit.hpp"

#include <gtest/gtest.h>

#include <numbers>

#include "dqc/parse.hpp"
#include "test_circuits.hpp"

namespace dqc {
namespace {

TEST(ParseQasm, ParsesSimpleProgram) {
  Circuit c = parse_qasm("qreg q[2]; h q[0]; cx q[0],q[1];");
  EXPECT_EQ(c.n_qubits, 2);
  ASSERT_EQ(c.gates.size(), 2u);
  EXPECT_EQ(c.gates[0].name, "h");
  EXPECT_EQ(c.gates[0].operands, std::vector<int>({0}));
  EXPECT_EQ(c.gates[1].name, "cx");
  EXPECT_EQ(c.gates[1].operands, std::vector<int>({0, 1}));
}

TEST(ParseQasm, RejectsThreeOperandGates) {
  try {
    parse_qasm("qreg q[2];\nccx q[0],q[1],q[1];");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_NE(std::string(e.what()).find("unsupported gate"), std::string::npos);
  }
}

TEST(ParseQasm, RejectsMultipleRegisters) {
  EXPECT_THROW(parse_qasm("qreg q[2]; qreg r[2]; h q[0];"), ParseError);
}

TEST(ParseQasm, RejectsOperandOutOfRange) {
  try {
    parse_qasm("qreg q[2];\nh q[2];");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("operand out of range"), std::string::npos);
  }
}

TEST(ParseQasm, RejectsDuplicateOperand) {
  EXPECT_THROW(parse_qasm("qreg q[2]; cx q[1],q[1];"), ParseError);
}

TEST(ParseQasm, SkipsMeasureBarrierAndCreg) {
  Circuit c = parse_qasm(
      "OPENQASM 2.0; include \"qelib1.inc\"; qreg q[2]; creg c[2];\n"
      "h q[0]; barrier q[0],q[1]; measure q[0] -> c[0];");
  ASSERT_EQ(c.gates.size(), 1u);
  EXPECT_EQ(c.gates[0].name, "h");
}

TEST(ParseQasm, AcceptsCu1AsAliasOfCp) {
  Circuit c = parse_qasm("qreg q[2]; cu1(pi/4) q[0],q[1];");
  ASSERT_EQ(c.gates.size(), 1u);
  EXPECT_EQ(c.gates[0].name, "cp");
  ASSERT_TRUE(c.gates[0].param.has_value());
  EXPECT_DOUBLE_EQ(*c.gates[0].param, std::numbers::pi / 4);
}

TEST(ParseQasm, EvaluatesAngleExpressions) {
  Circuit c = parse_qasm("qreg q[1]; rz(pi/2) q[0]; rz(-pi) q[0]; rz(0.25) q[0]; rz(3*pi/4) q[0];");
  ASSERT_EQ(c.gates.size(), 4u);
  EXPECT_DOUBLE_EQ(*c.gates[0].param, std::numbers::pi / 2);
  EXPECT_DOUBLE_EQ(*c.gates[1].param, -std::numbers::pi);
  EXPECT_DOUBLE_EQ(*c.gates[2].param, 0.25);
  EXPECT_DOUBLE_EQ(*c.gates[3].param, 3 * std::numbers::pi / 4);
}

TEST(ParseQasm, SixQubitSampleTranscription) {
  Circuit c = parse_qasm(testing::kSixQubitQasm);
  EXPECT_EQ(c.n_qubits, 6);
  EXPECT_EQ(c.gates.size(), 10u);
  auto pairs = two_qubit_gates(c);
  ASSERT_EQ(pairs.size(), 8u);
  const std::vector<std::pair<int, int>> expected = {
      {1, 4}, {0, 3}, {0, 5}, {4, 0}, {3, 1}, {2, 5}, {4, 1}, {0, 2}};
  for (size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(pairs[i].a, expected[i].first);
    EXPECT_EQ(pairs[i].b, expected[i].second);
  }
}

TEST(ParseGatelist, ParsesHeaderAndGates) {
  Circuit c = parse_gatelist("qubits 2\ncx 0 1\n");
  EXPECT_EQ(c.n_qubits, 2);
  ASSERT_EQ(c.gates.size(), 1u);
  EXPECT_EQ(c.gates[0].name, "cx");
}

TEST(ParseGatelist, RejectsOperandOutOfRange) {
  try {
    parse_gatelist("qubits 1\ncx 0 1\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_NE(std::string(e.what()).find("operand out of range"), std::string::npos);
  }
}

TEST(ParseGatelist, CountsTwoQubitGates) {
  Circuit c = parse_gatelist("qubits 3\nh 0\ncx 0 2\ncx 1 2\n");
  EXPECT_EQ(c.gates.size(), 3u);
  EXPECT_EQ(two_qubit_gates(c).size(), 2u);
}

TEST(ParseGatelist, SupportsCommentsAndMalformedLineErrors) {
  Circuit c = parse_gatelist("# header comment\nqubits 2\nh 0  # trailing\n");
  EXPECT_EQ(c.gates.size(), 1u);
  EXPECT_THROW(parse_gatelist("qubits 2\ncx 0\n"), ParseError);
  EXPECT_THROW(parse_gatelist("cx 0 1\n"), ParseError);
}

TEST(Qft, SingleQubitIsJustHadamard) {
  Circuit c = qft_circuit(1);
  ASSERT_EQ(c.gates.size(), 1u);
  EXPECT_EQ(c.gates[0].name, "h");
}

TEST(Qft, GateCounts) {
  EXPECT_EQ(qft_circuit(4).gates.size(), 10u);
  EXPECT_EQ(two_qubit_gates(qft_circuit(4)).size(), 6u);
  EXPECT_EQ(two_qubit_gates(qft_circuit(8)).size(), 28u);
}

TEST(Qft, GateCountFormulaHolds) {
  for (int n = 1; n <= 64; ++n) {
    EXPECT_EQ(qft_circuit(n).gates.size(), static_cast<size_t>(n + n * (n - 1) / 2)) << n;
  }
}

TEST(Qft, ControlledPhaseShape) {
  Circuit c = qft_circuit(3);
  // h 0; cp(pi/2) 1->0; cp(pi/4) 2->0; h 1; cp(pi/2) 2->1; h 2
  ASSERT_EQ(c.gates.size(), 6u);
  EXPECT_EQ(c.gates[1].operands, std::vector<int>({1, 0}));
  EXPECT_DOUBLE_EQ(*c.gates[1].param, std::numbers::pi / 2);
  EXPECT_EQ(c.gates[2].operands, std::vector<int>({2, 0}));
  EXPECT_DOUBLE_EQ(*c.gates[2].param, std::numbers::pi / 4);
}

TEST(Qft, RejectsZeroQubits) { EXPECT_THROW(qft_circuit(0), std::invalid_argument); }

TEST(TwoQubitGates, EmptyForSingleQubitCircuits) {
  Circuit c = parse_gatelist("qubits 3\nh 0\nh 1\nh 2\n");
  EXPECT_TRUE(two_qubit_gates(c).empty());
}

TEST(TwoQubitGates, PreservesSourceOrder) {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Circuit c = testing::random_circuit(seed);
    auto pairs = two_qubit_gates(c);
    for (size_t i = 1; i < pairs.size(); ++i) {
      EXPECT_LT(pairs[i - 1].gate_index, pairs[i].gate_index);
    }
  }
}

TEST(Gatelist, RoundTripsThroughSerializer) {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Circuit c = testing::random_circuit(seed);
    Circuit back = parse_gatelist(to_gatelist(c));
    EXPECT_EQ(back.n_qubits, c.n_qubits);
    EXPECT_EQ(back.gates, c.gates);
  }
}

TEST(Gatelist, RoundTripPreservesAngles) {
  Circuit c = qft_circuit(6);
  Circuit back = parse_gatelist(to_gatelist(c));
  EXPECT_EQ(back.gates, c.gates);
}

}  // namespace
}  // namespace dqc
