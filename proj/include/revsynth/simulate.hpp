#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "revsynth/circuit.hpp"
#include "revsynth/permutation.hpp"

namespace revsynth {

/// Gate lowered to bit masks over a packed state.
struct CompiledGate {
  GateKind kind;
  State controls;  // mask of control bits (all must be 1)
  State a;         // VTOF invert-line bit; FRED/CKSWAP first target; CKNOT target
  State b;         // VTOF target bit; FRED/CKSWAP second target
};

class CompiledCircuit {
 public:
  explicit CompiledCircuit(const Circuit& c);

  unsigned width() const { return width_; }

  State run(State s) const {
    for (const CompiledGate& g : gates_) s = step(g, s);
    return s;
  }

  static State step(const CompiledGate& g, State s) {
    switch (g.kind) {
      case GateKind::VTOF: {
        // Target update uses the pre-flip invert-line value.
        const State fire = ((s & g.controls) && (s & g.a)) ? g.b : 0;
        return (s ^ g.a) ^ fire;
      }
      case GateKind::CKNOT:
        return (s & g.controls) == g.controls ? s ^ g.a : s;
      case GateKind::FRED:
      case GateKind::CKSWAP: {
        if ((s & g.controls) != g.controls) return s;
        const bool differ = ((s & g.a) != 0) != ((s & g.b) != 0);
        return differ ? s ^ (g.a | g.b) : s;
      }
    }
    return s;
  }

 private:
  unsigned width_;
  std::vector<CompiledGate> gates_;
};

/// Permutation induced on all 2^w states. OpenMP-parallel over inputs.
Permutation circuit_to_permutation(const Circuit& c);

/// Serial reference: unpacks every state and applies `apply_gate` literally.
Permutation circuit_to_permutation_reference(const Circuit& c);

/// Applies the circuit to every state in `states` in place (parallel).
void run_all(const Circuit& c, std::vector<State>& states);

struct Counterexample {
  State input;     // full circuit state
  State output;    // what the circuit produced
  State expected;  // what the contract demands
};

struct SynthesisReport {
  std::string backend;  // empty when the report comes from plain verification
  unsigned width = 0;
  std::size_t gate_count = 0;
  std::size_t primitive_gate_count = 0;
  RoleCounts roles;
  bool pass = false;
  std::optional<Counterexample> counterexample;
  std::uint64_t inputs_checked = 0;
};

/// Exhaustive contract check: for every data assignment, every borrowed
/// assignment and every ancilla at its declared value, data lines must carry
/// target(data) and all auxiliary lines must be restored. Parallel; the
/// counterexample reported is the smallest failing input index.
SynthesisReport verify_realizes(const Circuit& c, const Permutation& target);

/// Serial reference of the same check.
SynthesisReport verify_realizes_reference(const Circuit& c,
                                          const Permutation& target);

std::string format_report(const SynthesisReport& r);
std::string format_report_json(const SynthesisReport& r);

}  // namespace revsynth
