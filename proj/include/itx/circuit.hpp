#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "itx/ring.hpp"

namespace itx {

using GateId = std::uint32_t;

enum class GateKind : std::uint8_t { Input, ConstInt, Add, Mul };

// One gate of an arithmetic circuit. Inputs carry their slot index and
// constants carry a plain integer in payload; Add/Mul reference earlier gates.
struct Gate {
  GateKind kind;
  GateId lhs = 0;
  GateId rhs = 0;
  long long payload = 0;
};

struct CircuitStats {
  std::size_t gates = 0;
  std::size_t adds = 0;
  std::size_t muls = 0;
  std::size_t consts = 0;
  std::size_t inputs = 0;

  friend bool operator==(const CircuitStats&, const CircuitStats&) = default;
};

// An arithmetic circuit over an unspecified commutative ring: a gate list in
// topological order (every operand id is smaller than the gate's own id) plus
// labeled output taps. Constants are plain integers, embedded into the ring
// only at evaluation time, so one circuit evaluates over any ring.
class Circuit {
 public:
  GateId add_input() {
    gates_.push_back(Gate{GateKind::Input, 0, 0, static_cast<long long>(input_count_)});
    ++input_count_;
    return last_id();
  }

  GateId add_const(long long z) {
    gates_.push_back(Gate{GateKind::ConstInt, 0, 0, z});
    return last_id();
  }

  GateId add_add(GateId l, GateId r) {
    check_operand(l);
    check_operand(r);
    gates_.push_back(Gate{GateKind::Add, l, r, 0});
    return last_id();
  }

  GateId add_mul(GateId l, GateId r) {
    check_operand(l);
    check_operand(r);
    gates_.push_back(Gate{GateKind::Mul, l, r, 0});
    return last_id();
  }

  void add_output(std::string label, GateId id) {
    check_operand(id);
    outputs_.emplace_back(std::move(label), id);
  }

  std::size_t gate_count() const { return gates_.size(); }
  std::uint32_t input_count() const { return input_count_; }
  const std::vector<Gate>& gates() const { return gates_; }
  const std::vector<std::pair<std::string, GateId>>& outputs() const { return outputs_; }

  CircuitStats stats() const {
    CircuitStats s;
    s.gates = gates_.size();
    for (const Gate& g : gates_) {
      switch (g.kind) {
        case GateKind::Input: ++s.inputs; break;
        case GateKind::ConstInt: ++s.consts; break;
        case GateKind::Add: ++s.adds; break;
        case GateKind::Mul: ++s.muls; break;
      }
    }
    return s;
  }

  // Text form, one gate per line in id order, then the output taps:
  //   <id> INPUT <slot>
  //   <id> CONST <integer>
  //   <id> ADD <lhs> <rhs>
  //   <id> MUL <lhs> <rhs>
  //   OUTPUT <label> <id>
  void dump(std::ostream& out) const {
    for (std::size_t i = 0; i < gates_.size(); ++i) {
      const Gate& g = gates_[i];
      out << i << ' ';
      switch (g.kind) {
        case GateKind::Input: out << "INPUT " << g.payload; break;
        case GateKind::ConstInt: out << "CONST " << g.payload; break;
        case GateKind::Add: out << "ADD " << g.lhs << ' ' << g.rhs; break;
        case GateKind::Mul: out << "MUL " << g.lhs << ' ' << g.rhs; break;
      }
      out << '\n';
    }
    for (const auto& [label, id] : outputs_) out << "OUTPUT " << label << ' ' << id << '\n';
  }

  static Circuit parse(std::istream& in) {
    Circuit c;
    std::string line;
    int lineno = 0;
    bool outputs_started = false;
    auto fail = [&lineno](const std::string& msg) {
      throw std::runtime_error("line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
      ++lineno;
      std::istringstream ls(line);
      std::string first;
      if (!(ls >> first)) continue;  // blank line
      if (first == "OUTPUT") {
        std::string label;
        GateId id;
        if (!(ls >> label >> id)) fail("malformed OUTPUT line");
        if (id >= c.gates_.size()) fail("output references unknown gate");
        c.outputs_.emplace_back(std::move(label), id);
        outputs_started = true;
        continue;
      }
      if (outputs_started) fail("gate line after OUTPUT lines");
      GateId id;
      try {
        std::size_t used = 0;
        unsigned long v = std::stoul(first, &used);
        if (used != first.size()) throw std::invalid_argument("");
        id = static_cast<GateId>(v);
      } catch (const std::exception&) {
        fail("expected gate id");
        throw;  // unreachable
      }
      if (id != c.gates_.size()) fail("gate ids must be consecutive from 0");
      std::string op;
      if (!(ls >> op)) fail("missing gate kind");
      if (op == "INPUT") {
        long long slot;
        if (!(ls >> slot)) fail("malformed INPUT line");
        if (slot != static_cast<long long>(c.input_count_)) fail("input slots must be consecutive from 0");
        c.add_input();
      } else if (op == "CONST") {
        long long z;
        if (!(ls >> z)) fail("malformed CONST line");
        c.add_const(z);
      } else if (op == "ADD" || op == "MUL") {
        GateId l, r;
        if (!(ls >> l >> r)) fail("malformed " + op + " line");
        if (l >= id || r >= id) fail("operand id must precede gate id");
        if (op == "ADD")
          c.add_add(l, r);
        else
          c.add_mul(l, r);
      } else {
        fail("unknown gate kind '" + op + "'");
      }
      std::string extra;
      if (ls >> extra) fail("trailing tokens");
    }
    return c;
  }

 private:
  std::vector<Gate> gates_;
  std::uint32_t input_count_ = 0;
  std::vector<std::pair<std::string, GateId>> outputs_;

  GateId last_id() const { return static_cast<GateId>(gates_.size() - 1); }

  void check_operand(GateId id) const {
    if (id >= gates_.size())
      throw std::invalid_argument("gate operand must reference an existing gate");
  }
};

// Evaluates every gate over the given ring; result is aligned with gate ids.
// The input span must match the circuit's input count exactly.
template <Ring R>
std::vector<typename R::value_type> evaluate_gates(const Circuit& c,
                                                   std::span<const typename R::value_type> inputs,
                                                   const R& ring) {
  if (inputs.size() != c.input_count())
    throw std::invalid_argument("input count mismatch: circuit expects " +
                                std::to_string(c.input_count()) + ", got " +
                                std::to_string(inputs.size()));
  std::vector<typename R::value_type> vals;
  vals.reserve(c.gate_count());
  for (const Gate& g : c.gates()) {
    switch (g.kind) {
      case GateKind::Input:
        vals.push_back(inputs[static_cast<std::size_t>(g.payload)]);
        break;
      case GateKind::ConstInt:
        vals.push_back(ring.from_integer(g.payload));
        break;
      case GateKind::Add:
        vals.push_back(ring.add(vals[g.lhs], vals[g.rhs]));
        break;
      case GateKind::Mul:
        vals.push_back(ring.mul(vals[g.lhs], vals[g.rhs]));
        break;
    }
  }
  return vals;
}

// Evaluates and returns the labeled outputs only.
template <Ring R>
std::map<std::string, typename R::value_type> evaluate(const Circuit& c,
                                                       std::span<const typename R::value_type> inputs,
                                                       const R& ring) {
  auto vals = evaluate_gates(c, inputs, ring);
  std::map<std::string, typename R::value_type> out;
  for (const auto& [label, id] : c.outputs()) out.emplace(label, vals[id]);
  return out;
}

}  // namespace itx
