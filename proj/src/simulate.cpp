#include "revsynth/simulate.hpp"

#include <omp.h>

#include <cstdint>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "revsynth/error.hpp"

namespace revsynth {

namespace {

State mask_of(Line l, unsigned width) { return State{1} << bit_of(l, width); }

void require_simulable(const Circuit& c) {
  if (c.width() < 1 || c.width() > kMaxWidth) {
    throw SynthError(ErrorCode::WidthOutOfRange,
                     "exhaustive simulation needs 1 <= width <= 16, got " +
                         std::to_string(c.width()));
  }
}

/// Enumerates the inputs a contract check must cover: every data and
/// borrowed assignment, ancillas at their declared values.
struct InputSpace {
  unsigned width;
  std::vector<State> data_masks;      // MSB-first among data lines
  std::vector<State> borrowed_masks;
  State ancilla_bits = 0;

  explicit InputSpace(const Circuit& c) : width(c.width()) {
    for (Line l = 0; l < c.width(); ++l) {
      const State m = mask_of(l, c.width());
      switch (c.role(l)) {
        case LineRole::data: data_masks.push_back(m); break;
        case LineRole::borrowed: borrowed_masks.push_back(m); break;
        case LineRole::ancilla1: ancilla_bits |= m; break;
        case LineRole::ancilla0: break;
      }
    }
  }

  unsigned data_width() const { return static_cast<unsigned>(data_masks.size()); }
  unsigned free_bits() const {
    return static_cast<unsigned>(data_masks.size() + borrowed_masks.size());
  }

  State scatter_data(State d) const {
    State s = 0;
    const std::size_t n = data_masks.size();
    for (std::size_t j = 0; j < n; ++j) {
      if ((d >> (n - 1 - j)) & 1u) s |= data_masks[j];
    }
    return s;
  }

  State scatter_borrowed(State b) const {
    State s = 0;
    const std::size_t n = borrowed_masks.size();
    for (std::size_t j = 0; j < n; ++j) {
      if ((b >> (n - 1 - j)) & 1u) s |= borrowed_masks[j];
    }
    return s;
  }

  State data_of(std::uint64_t index) const {
    return static_cast<State>(index >> borrowed_masks.size());
  }

  State input(std::uint64_t index) const {
    const State b = static_cast<State>(index & ((std::uint64_t{1} << borrowed_masks.size()) - 1));
    return scatter_data(data_of(index)) | scatter_borrowed(b) | ancilla_bits;
  }

  /// Input with the data bits replaced by target(data).
  State expected(std::uint64_t index, const Permutation& target) const {
    const State in = input(index);
    State data_mask = 0;
    for (State m : data_masks) data_mask |= m;
    return (in & ~data_mask) | scatter_data(target(data_of(index)));
  }
};

InputSpace checked_space(const Circuit& c, const Permutation& target) {
  InputSpace space(c);
  if (space.data_width() != target.width()) {
    throw SynthError(ErrorCode::WidthMismatch,
                     "circuit has " + std::to_string(space.data_width()) +
                         " data lines but the target permutation has width " +
                         std::to_string(target.width()));
  }
  if (c.width() > 32 || space.free_bits() > 24) {
    throw SynthError(ErrorCode::WidthOutOfRange,
                     "too many free input lines for exhaustive verification");
  }
  return space;
}

SynthesisReport base_report(const Circuit& c) {
  SynthesisReport r;
  r.width = c.width();
  r.gate_count = c.gates().size();
  r.primitive_gate_count = c.primitive_gate_count();
  r.roles = c.role_counts();
  return r;
}

std::string bits(State s, unsigned width) {
  std::string out(width, '0');
  for (unsigned i = 0; i < width; ++i) {
    if ((s >> (width - 1 - i)) & 1u) out[i] = '1';
  }
  return out;
}

State run_reference(const Circuit& c, State s) {
  auto b = unpack_bits(s, c.width());
  for (const Gate& g : c.gates()) apply_gate(g, b);
  return pack_bits(b);
}

}  // namespace

CompiledCircuit::CompiledCircuit(const Circuit& c) : width_(c.width()) {
  gates_.reserve(c.gates().size());
  for (const Gate& g : c.gates()) {
    CompiledGate cg{g.kind, 0, 0, 0};
    const auto& l = g.lines;
    switch (g.kind) {
      case GateKind::VTOF:
        cg.controls = mask_of(l[0], width_);
        cg.a = mask_of(l[1], width_);
        cg.b = mask_of(l[2], width_);
        break;
      case GateKind::FRED:
        cg.controls = mask_of(l[0], width_);
        cg.a = mask_of(l[1], width_);
        cg.b = mask_of(l[2], width_);
        break;
      case GateKind::CKNOT:
        for (Line x : g.controls()) cg.controls |= mask_of(x, width_);
        cg.a = mask_of(l.back(), width_);
        break;
      case GateKind::CKSWAP:
        for (Line x : g.controls()) cg.controls |= mask_of(x, width_);
        cg.a = mask_of(l[l.size() - 2], width_);
        cg.b = mask_of(l.back(), width_);
        break;
    }
    gates_.push_back(cg);
  }
}

void run_all(const Circuit& c, std::vector<State>& states) {
  const CompiledCircuit cc(c);
  const auto n = static_cast<std::int64_t>(states.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) states[i] = cc.run(states[i]);
}

Permutation circuit_to_permutation(const Circuit& c) {
  require_simulable(c);
  std::vector<State> map(std::size_t{1} << c.width());
  for (State x = 0; x < map.size(); ++x) map[x] = x;
  run_all(c, map);
  return Permutation(c.width(), std::move(map));
}

Permutation circuit_to_permutation_reference(const Circuit& c) {
  require_simulable(c);
  std::vector<State> map(std::size_t{1} << c.width());
  for (State x = 0; x < map.size(); ++x) map[x] = run_reference(c, x);
  return Permutation(c.width(), std::move(map));
}

SynthesisReport verify_realizes(const Circuit& c, const Permutation& target) {
  const InputSpace space = checked_space(c, target);
  const CompiledCircuit cc(c);
  const auto total = static_cast<std::int64_t>(std::uint64_t{1} << space.free_bits());

  std::int64_t first_fail = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for schedule(static) reduction(min : first_fail)
  for (std::int64_t i = 0; i < total; ++i) {
    if (cc.run(space.input(i)) != space.expected(i, target) && i < first_fail) {
      first_fail = i;
    }
  }

  SynthesisReport r = base_report(c);
  r.inputs_checked = static_cast<std::uint64_t>(total);
  r.pass = first_fail == std::numeric_limits<std::int64_t>::max();
  if (!r.pass) {
    const State in = space.input(first_fail);
    r.counterexample = Counterexample{in, cc.run(in), space.expected(first_fail, target)};
  }
  return r;
}

SynthesisReport verify_realizes_reference(const Circuit& c,
                                          const Permutation& target) {
  const InputSpace space = checked_space(c, target);
  const std::uint64_t total = std::uint64_t{1} << space.free_bits();
  SynthesisReport r = base_report(c);
  r.inputs_checked = total;
  r.pass = true;
  for (std::uint64_t i = 0; i < total; ++i) {
    const State in = space.input(i);
    const State out = run_reference(c, in);
    const State want = space.expected(i, target);
    if (out != want) {
      r.pass = false;
      r.counterexample = Counterexample{in, out, want};
      break;
    }
  }
  return r;
}

std::string format_report(const SynthesisReport& r) {
  std::ostringstream out;
  if (!r.backend.empty()) out << "backend: " << r.backend << '\n';
  out << "width: " << r.width << '\n'
      << "gates: " << r.gate_count << '\n'
      << "primitive_gates: " << r.primitive_gate_count << '\n'
      << "roles: data=" << r.roles.data << " ancilla0=" << r.roles.ancilla0
      << " ancilla1=" << r.roles.ancilla1 << " borrowed=" << r.roles.borrowed << '\n'
      << "inputs_checked: " << r.inputs_checked << '\n';
  if (r.pass) {
    out << "verdict: pass\n";
  } else {
    out << "verdict: fail";
    if (r.counterexample) {
      out << " input=" << bits(r.counterexample->input, r.width)
          << " output=" << bits(r.counterexample->output, r.width)
          << " expected=" << bits(r.counterexample->expected, r.width);
    }
    out << '\n';
  }
  return out.str();
}

std::string format_report_json(const SynthesisReport& r) {
  nlohmann::ordered_json j;
  if (!r.backend.empty()) j["backend"] = r.backend;
  j["width"] = r.width;
  j["gates"] = r.gate_count;
  j["primitive_gates"] = r.primitive_gate_count;
  j["roles"] = {{"data", r.roles.data},
                {"ancilla0", r.roles.ancilla0},
                {"ancilla1", r.roles.ancilla1},
                {"borrowed", r.roles.borrowed}};
  j["inputs_checked"] = r.inputs_checked;
  j["verdict"] = r.pass ? "pass" : "fail";
  if (r.counterexample) {
    j["counterexample"] = {{"input", bits(r.counterexample->input, r.width)},
                           {"output", bits(r.counterexample->output, r.width)},
                           {"expected", bits(r.counterexample->expected, r.width)}};
  }
  return j.dump(2) + "\n";
}

}  // namespace revsynth
