#pragma once

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "dqc/circuit.hpp"

namespace dqc {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

inline bool parse_int(std::string_view s, int& value) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc() && ptr == last;
}

inline bool parse_double(std::string_view s, double& value) {
  if (s.empty()) return false;
  std::string buf(s);
  char* end = nullptr;
  value = std::strtod(buf.c_str(), &end);
  return end == buf.c_str() + buf.size();
}

// Angle expressions: [-] factor {('*'|'/') factor}, factor = number | pi.
inline bool eval_angle(std::string_view expr, double& value) {
  expr = trim(expr);
  double sign = 1.0;
  if (!expr.empty() && (expr.front() == '-' || expr.front() == '+')) {
    if (expr.front() == '-') sign = -1.0;
    expr.remove_prefix(1);
    expr = trim(expr);
  }
  double acc = 0.0;
  bool have_acc = false;
  char pending_op = '*';
  size_t i = 0;
  while (i < expr.size()) {
    while (i < expr.size() && std::isspace(static_cast<unsigned char>(expr[i]))) ++i;
    if (i >= expr.size()) break;
    size_t start = i;
    while (i < expr.size() && expr[i] != '*' && expr[i] != '/') ++i;
    std::string_view tok = trim(expr.substr(start, i - start));
    double factor = 0.0;
    if (tok == "pi") {
      factor = std::numbers::pi;
    } else if (!parse_double(tok, factor)) {
      return false;
    }
    if (!have_acc) {
      acc = factor;
      have_acc = true;
    } else if (pending_op == '*') {
      acc *= factor;
    } else {
      if (factor == 0.0) return false;
      acc /= factor;
    }
    if (i < expr.size()) {
      pending_op = expr[i];
      ++i;
      if (i >= expr.size()) return false;
    }
  }
  if (!have_acc) return false;
  value = sign * acc;
  return true;
}

struct Statement {
  std::string text;
  int line = 0;
};

// Statements are ';'-separated; '//' comments run to end of line.
inline std::vector<Statement> split_statements(std::string_view text) {
  std::vector<Statement> out;
  std::string current;
  int line = 1;
  int stmt_line = 1;
  for (size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n') ++i;
      if (i < text.size()) ++line;
      continue;
    }
    if (ch == '\n') {
      ++line;
      current.push_back(' ');
      continue;
    }
    if (ch == ';') {
      std::string_view t = trim(current);
      if (!t.empty()) out.push_back({std::string(t), stmt_line});
      current.clear();
      stmt_line = line;
      continue;
    }
    if (trim(current).empty()) stmt_line = line;
    current.push_back(ch);
  }
  std::string_view t = trim(current);
  if (!t.empty()) out.push_back({std::string(t), stmt_line});
  return out;
}

}  // namespace detail

/// OpenQASM 2.0 subset: one qreg, supported mnemonics only, `cu1` accepted as
/// an alias of `cp`. Measure, barrier and creg statements are skipped.
inline Circuit parse_qasm(std::string_view text, std::string name = "qasm") {
  using detail::trim;
  Circuit c;
  c.name = std::move(name);
  bool have_qreg = false;
  std::string reg_name;

  for (const auto& stmt : detail::split_statements(text)) {
    std::string_view s = stmt.text;
    const int line = stmt.line;
    if (s.starts_with("OPENQASM") || s.starts_with("include")) continue;
    if (s.starts_with("creg") || s.starts_with("measure") || s.starts_with("barrier")) continue;
    if (s.starts_with("qreg")) {
      if (have_qreg) throw ParseError(line, "multiple qreg declarations");
      std::string_view rest = trim(s.substr(4));
      size_t lb = rest.find('[');
      size_t rb = rest.find(']');
      if (lb == std::string_view::npos || rb == std::string_view::npos || rb < lb) {
        throw ParseError(line, "malformed qreg declaration");
      }
      reg_name = std::string(trim(rest.substr(0, lb)));
      int n = 0;
      if (reg_name.empty() || !detail::parse_int(rest.substr(lb + 1, rb - lb - 1), n) || n < 1) {
        throw ParseError(line, "malformed qreg declaration");
      }
      c.n_qubits = n;
      have_qreg = true;
      continue;
    }

    // Gate statement: name[(expr)] reg[i] {, reg[j]}
    size_t name_end = 0;
    while (name_end < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[name_end])) || s[name_end] == '_')) {
      ++name_end;
    }
    if (name_end == 0) throw ParseError(line, "malformed statement");
    std::string gate_name(s.substr(0, name_end));
    std::string_view rest = trim(s.substr(name_end));

    if (gate_name == "cu1") gate_name = "cp";
    auto arity = gate_arity(gate_name);
    if (!arity) throw ParseError(line, "unsupported gate '" + gate_name + "'");
    if (!have_qreg) throw ParseError(line, "gate before qreg declaration");

    std::optional<double> param;
    if (!rest.empty() && rest.front() == '(') {
      size_t close = rest.find(')');
      if (close == std::string_view::npos) throw ParseError(line, "unterminated parameter");
      double value = 0.0;
      if (!detail::eval_angle(rest.substr(1, close - 1), value)) {
        throw ParseError(line, "malformed angle expression");
      }
      param = value;
      rest = trim(rest.substr(close + 1));
    }
    if (gate_takes_param(gate_name) && !param) throw ParseError(line, "missing angle for '" + gate_name + "'");
    if (!gate_takes_param(gate_name) && param) throw ParseError(line, "unexpected angle for '" + gate_name + "'");

    std::vector<int> operands;
    size_t pos = 0;
    while (pos < rest.size()) {
      size_t comma = rest.find(',', pos);
      std::string_view arg =
          trim(comma == std::string_view::npos ? rest.substr(pos) : rest.substr(pos, comma - pos));
      pos = comma == std::string_view::npos ? rest.size() : comma + 1;
      if (arg.empty()) throw ParseError(line, "malformed operand list");
      size_t lb = arg.find('[');
      size_t rb = arg.find(']');
      if (lb == std::string_view::npos || rb == std::string_view::npos || rb < lb) {
        throw ParseError(line, "malformed operand");
      }
      if (std::string(trim(arg.substr(0, lb))) != reg_name) {
        throw ParseError(line, "unknown register");
      }
      int q = 0;
      if (!detail::parse_int(arg.substr(lb + 1, rb - lb - 1), q)) {
        throw ParseError(line, "malformed operand index");
      }
      if (q < 0 || q >= c.n_qubits) throw ParseError(line, "operand out of range");
      operands.push_back(q);
    }
    if (static_cast<int>(operands.size()) != *arity) {
      throw ParseError(line, "unsupported gate '" + gate_name + "' with " +
                                 std::to_string(operands.size()) + " operands");
    }
    if (operands.size() == 2 && operands[0] == operands[1]) {
      throw ParseError(line, "duplicate operand");
    }
    c.gates.push_back({static_cast<int>(c.gates.size()), gate_name, std::move(operands), param});
  }
  if (!have_qreg) throw ParseError(1, "missing qreg declaration");
  return c;
}

/// Gate-list text format: `qubits N` header, then `<name> <q0> [<q1>] [<angle>]`
/// per line. `#` starts a comment.
inline Circuit parse_gatelist(std::string_view text, std::string name = "gatelist") {
  Circuit c;
  c.name = std::move(name);
  bool have_header = false;
  int line = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view raw =
        eol == std::string_view::npos ? text.substr(pos) : text.substr(pos, eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line;
    size_t hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    auto tokens = detail::split_ws(raw);
    if (tokens.empty()) continue;

    if (!have_header) {
      int n = 0;
      if (tokens.size() != 2 || tokens[0] != "qubits" || !detail::parse_int(tokens[1], n) || n < 1) {
        throw ParseError(line, "expected 'qubits <N>' header");
      }
      c.n_qubits = n;
      have_header = true;
      continue;
    }

    std::string gate_name(tokens[0]);
    auto arity = gate_arity(gate_name);
    if (!arity) throw ParseError(line, "unsupported gate '" + gate_name + "'");
    size_t expected = 1 + static_cast<size_t>(*arity) + (gate_takes_param(gate_name) ? 1 : 0);
    if (tokens.size() != expected) throw ParseError(line, "malformed line for '" + gate_name + "'");

    std::vector<int> operands;
    for (int i = 0; i < *arity; ++i) {
      int q = 0;
      if (!detail::parse_int(tokens[1 + i], q)) throw ParseError(line, "malformed qubit id");
      if (q < 0 || q >= c.n_qubits) throw ParseError(line, "operand out of range");
      operands.push_back(q);
    }
    if (operands.size() == 2 && operands[0] == operands[1]) {
      throw ParseError(line, "duplicate operand");
    }
    std::optional<double> param;
    if (gate_takes_param(gate_name)) {
      double value = 0.0;
      if (!detail::parse_double(tokens.back(), value)) throw ParseError(line, "malformed angle");
      param = value;
    }
    c.gates.push_back({static_cast<int>(c.gates.size()), gate_name, std::move(operands), param});
  }
  if (!have_header) throw ParseError(1, "expected 'qubits <N>' header");
  return c;
}

}  // namespace dqc
