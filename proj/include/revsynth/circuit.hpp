#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "revsynth/permutation.hpp"

namespace revsynth {

/// Lines are 0-based in memory (line 0 is line 1 in netlist files, the MSB) and
/// 1-based in the netlist text format.
using Line = unsigned;

enum class GateKind : std::uint8_t {
  VTOF,    // variated Toffoli: (a, b, c) -> (a, b+1, ab+c)
  FRED,    // Fredkin: swap b, c iff a
  CKNOT,   // k controls then target; NOT is k=0, CNOT k=1
  CKSWAP,  // k controls then two targets; SWAP is k=0
};

const char* to_string(GateKind kind);

struct Gate {
  GateKind kind;
  /// VTOF: control, invert-line, target. FRED: control, target, target.
  /// CKNOT: controls..., target. CKSWAP: controls..., target, target.
  std::vector<Line> lines;

  static Gate vtof(Line control, Line invert, Line target);
  static Gate fred(Line control, Line t1, Line t2);
  static Gate cknot(std::vector<Line> controls, Line target);
  static Gate not_gate(Line target) { return cknot({}, target); }
  static Gate cnot(Line control, Line target) { return cknot({control}, target); }
  static Gate ckswap(std::vector<Line> controls, Line t1, Line t2);
  static Gate swap(Line t1, Line t2) { return ckswap({}, t1, t2); }

  bool is_primitive() const {
    return kind == GateKind::VTOF || kind == GateKind::FRED;
  }

  /// Number of controls of a macro (k of C^kNOT / C^kSWAP); 1 for FRED and
  /// VTOF's single control.
  unsigned control_count() const;

  std::span<const Line> controls() const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

using Fragment = std::vector<Gate>;

enum class LineRole : std::uint8_t { data, ancilla0, ancilla1, borrowed };

const char* to_string(LineRole role);

inline bool is_ancilla(LineRole r) {
  return r == LineRole::ancilla0 || r == LineRole::ancilla1;
}

struct RoleCounts {
  unsigned data = 0;
  unsigned ancilla0 = 0;
  unsigned ancilla1 = 0;
  unsigned borrowed = 0;
};

class Circuit {
 public:
  Circuit() = default;
  /// All lines data.
  explicit Circuit(unsigned width);
  Circuit(std::vector<LineRole> roles, Fragment gates = {});

  unsigned width() const { return static_cast<unsigned>(roles_.size()); }
  std::span<const LineRole> roles() const { return roles_; }
  LineRole role(Line l) const { return roles_.at(l); }
  const Fragment& gates() const { return gates_; }

  void set_role(Line l, LineRole role);

  /// Throws InvalidGate if the gate does not fit this circuit.
  void append(Gate g);
  void append(std::span<const Gate> gates);

  std::vector<Line> lines_with_role(LineRole role) const;
  RoleCounts role_counts() const;
  std::size_t primitive_gate_count() const;
  bool is_primitive() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::vector<LineRole> roles_;
  Fragment gates_;
};

/// Throws InvalidGate if arity or line indices are wrong for `width`.
void validate_gate(const Gate& g, unsigned width);

/// Reference gate semantics on an explicit bit array (bits[l] is line l).
/// All inputs are read before any output is written.
void apply_gate(const Gate& g, std::span<std::uint8_t> bits);

/// Packs/unpacks line values; line 0 is the most-significant bit.
State pack_bits(std::span<const std::uint8_t> bits);
std::vector<std::uint8_t> unpack_bits(State s, unsigned width);

/// Bit position of a line inside a packed state.
inline unsigned bit_of(Line l, unsigned width) { return width - 1 - l; }

/// Reverses a macro-level fragment. Valid as an inverse only when every gate
/// is self-inverse (CKNOT, CKSWAP, FRED); VTOF is not.
Fragment reversed(const Fragment& f);

// Netlist text format (bit-exact round trip).
void write_netlist(std::ostream& out, const Circuit& c);
Circuit read_netlist(std::istream& in);
Circuit load_netlist(const std::string& path);
void save_netlist(const std::string& path, const Circuit& c);

}  // namespace revsynth
