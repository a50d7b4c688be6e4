#include "revsynth/circuit.hpp"

#include <algorithm>

#include "revsynth/error.hpp"

namespace revsynth {

const char* to_string(GateKind kind) {
  switch (kind) {
    case GateKind::VTOF: return "VTOF";
    case GateKind::FRED: return "FRED";
    case GateKind::CKNOT: return "CKNOT";
    case GateKind::CKSWAP: return "CKSWAP";
  }
  return "?";
}

const char* to_string(LineRole role) {
  switch (role) {
    case LineRole::data: return "data";
    case LineRole::ancilla0: return "ancilla0";
    case LineRole::ancilla1: return "ancilla1";
    case LineRole::borrowed: return "borrowed";
  }
  return "?";
}

Gate Gate::vtof(Line control, Line invert, Line target) {
  return Gate{GateKind::VTOF, {control, invert, target}};
}

Gate Gate::fred(Line control, Line t1, Line t2) {
  return Gate{GateKind::FRED, {control, t1, t2}};
}

Gate Gate::cknot(std::vector<Line> controls, Line target) {
  controls.push_back(target);
  return Gate{GateKind::CKNOT, std::move(controls)};
}

Gate Gate::ckswap(std::vector<Line> controls, Line t1, Line t2) {
  controls.push_back(t1);
  controls.push_back(t2);
  return Gate{GateKind::CKSWAP, std::move(controls)};
}

unsigned Gate::control_count() const {
  switch (kind) {
    case GateKind::VTOF:
    case GateKind::FRED: return 1;
    case GateKind::CKNOT: return static_cast<unsigned>(lines.size()) - 1;
    case GateKind::CKSWAP: return static_cast<unsigned>(lines.size()) - 2;
  }
  return 0;
}

std::span<const Line> Gate::controls() const {
  return std::span<const Line>(lines).first(control_count());
}

void validate_gate(const Gate& g, unsigned width) {
  const std::size_t arity = g.lines.size();
  const bool arity_ok = [&] {
    switch (g.kind) {
      case GateKind::VTOF:
      case GateKind::FRED: return arity == 3;
      case GateKind::CKNOT: return arity >= 1;
      case GateKind::CKSWAP: return arity >= 2;
    }
    return false;
  }();
  if (!arity_ok) {
    throw SynthError(ErrorCode::InvalidGate, std::string(to_string(g.kind)) +
                                                 " gate has wrong arity " +
                                                 std::to_string(arity));
  }
  for (std::size_t i = 0; i < arity; ++i) {
    if (g.lines[i] >= width) {
      throw SynthError(ErrorCode::InvalidGate,
                       std::string(to_string(g.kind)) + " uses line " +
                           std::to_string(g.lines[i] + 1) +
                           " outside a circuit of width " + std::to_string(width));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (g.lines[i] == g.lines[j]) {
        throw SynthError(ErrorCode::InvalidGate,
                         std::string(to_string(g.kind)) + " repeats line " +
                             std::to_string(g.lines[i] + 1));
      }
    }
  }
}

Circuit::Circuit(unsigned width) : roles_(width, LineRole::data) {}

Circuit::Circuit(std::vector<LineRole> roles, Fragment gates)
    : roles_(std::move(roles)) {
  append(gates);
}

void Circuit::set_role(Line l, LineRole role) { roles_.at(l) = role; }

void Circuit::append(Gate g) {
  validate_gate(g, width());
  gates_.push_back(std::move(g));
}

void Circuit::append(std::span<const Gate> gates) {
  for (const Gate& g : gates) append(g);
}

std::vector<Line> Circuit::lines_with_role(LineRole role) const {
  std::vector<Line> out;
  for (Line l = 0; l < width(); ++l) {
    if (roles_[l] == role) out.push_back(l);
  }
  return out;
}

RoleCounts Circuit::role_counts() const {
  RoleCounts c;
  for (LineRole r : roles_) {
    switch (r) {
      case LineRole::data: ++c.data; break;
      case LineRole::ancilla0: ++c.ancilla0; break;
      case LineRole::ancilla1: ++c.ancilla1; break;
      case LineRole::borrowed: ++c.borrowed; break;
    }
  }
  return c;
}

std::size_t Circuit::primitive_gate_count() const {
  return static_cast<std::size_t>(std::count_if(
      gates_.begin(), gates_.end(), [](const Gate& g) { return g.is_primitive(); }));
}

bool Circuit::is_primitive() const {
  return primitive_gate_count() == gates_.size();
}

void apply_gate(const Gate& g, std::span<std::uint8_t> bits) {
  const auto& l = g.lines;
  switch (g.kind) {
    case GateKind::VTOF: {
      const std::uint8_t a = bits[l[0]], b = bits[l[1]], c = bits[l[2]];
      bits[l[1]] = b ^ 1u;
      bits[l[2]] = c ^ (a & b);
      return;
    }
    case GateKind::FRED: {
      if (bits[l[0]]) std::swap(bits[l[1]], bits[l[2]]);
      return;
    }
    case GateKind::CKNOT: {
      const std::size_t k = l.size() - 1;
      std::uint8_t all = 1;
      for (std::size_t i = 0; i < k; ++i) all &= bits[l[i]];
      bits[l[k]] ^= all;
      return;
    }
    case GateKind::CKSWAP: {
      const std::size_t k = l.size() - 2;
      std::uint8_t all = 1;
      for (std::size_t i = 0; i < k; ++i) all &= bits[l[i]];
      if (all) std::swap(bits[l[k]], bits[l[k + 1]]);
      return;
    }
  }
}

State pack_bits(std::span<const std::uint8_t> bits) {
  State s = 0;
  for (std::uint8_t b : bits) s = (s << 1) | (b & 1u);
  return s;
}

std::vector<std::uint8_t> unpack_bits(State s, unsigned width) {
  std::vector<std::uint8_t> bits(width);
  for (Line l = 0; l < width; ++l) bits[l] = (s >> bit_of(l, width)) & 1u;
  return bits;
}

Fragment reversed(const Fragment& f) { return Fragment(f.rbegin(), f.rend()); }

}  // namespace revsynth
