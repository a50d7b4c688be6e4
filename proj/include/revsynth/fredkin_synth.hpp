#pragma once

#include <span>
#include <vector>

#include "revsynth/circuit.hpp"
#include "revsynth/permutation.hpp"

namespace revsynth {

struct WeightString {
  unsigned width = 0;
  State bits = 0;

  unsigned weight() const { return hamming_weight(bits); }
  /// Value on line l (line 0 = MSB).
  bool at(Line l) const { return (bits >> bit_of(l, width)) & 1u; }

  friend bool operator==(const WeightString&, const WeightString&) = default;
};

/// Path from s1 to s2 whose neighbours are at Hamming distance 2. Each step
/// moves the lowest-index surplus one of the current string onto the
/// lowest-index missing one.
std::vector<WeightString> hamming_path(const WeightString& s1,
                                       const WeightString& s2);

/// Macro fragment (CKSWAP gates on lines 0..m-1) inducing exactly the
/// transposition (s1 s2) on their weight class. Classes of lower weight are
/// untouched.
Fragment synth_transposition(const WeightString& s1, const WeightString& s2);

/// Ancilla construction, macro level: C^(k-1)SWAP(controls[..k-1]; controls[k-1],
/// ancilla), FRED(ancilla; t1, t2), then the first gate again. Needs k >= 2.
Fragment synth_ckswap_ancilla(std::span<const Line> controls, Line t1, Line t2,
                              Line ancilla);

/// Borrowed-pair construction, macro level (ten gates). Needs k >= 2.
Fragment synth_ckswap_borrowed_pair(std::span<const Line> controls, Line t1,
                                    Line t2, Line p, Line q);

/// Primitive expansion of the borrowed-pair construction (k >= 2). Inner
/// C^(k-1)SWAPs borrow this gate's targets. Identity whenever p == q.
Fragment expand_ckswap_borrowed_pair(std::span<const Line> controls, Line t1,
                                     Line t2, Line p, Line q);

/// Primitive C^kSWAP with one ancilla line holding `ancilla_value` on entry.
/// Value 0 uses the ancilla construction on top of borrowed-pair levels.
/// Value 1 also covers k = 0 (FRED controlled by the ancilla) and, for k >= 2,
/// uses S, FRED(x), S, FRED(x), C^(k-1)SWAP(targets), where S swaps the last
/// control with the ancilla under the remaining controls.
Fragment expand_ckswap(std::span<const Line> controls, Line t1, Line t2,
                       Line ancilla, unsigned ancilla_value);

/// C^kSWAP over FRED on k+3 lines: controls 0..k-1, targets k and k+1, and
/// ancilla(0) on line k+2. For k = 1 a single FRED on 3 lines.
Circuit synth_ckswap(unsigned k);

/// True when the target moves some weight-1 string. Fredkin gates fix every
/// weight-1 state, so such targets need the ancilla line held at 1.
bool needs_unit_ancilla(const Permutation& p);

/// One stage of the conservative pipeline.
struct ConservativeStage {
  unsigned weight;
  Fragment gates;  // macro level, data lines only
};

/// Stages in ascending weight; stage k corrects whatever the earlier stages
/// did to the weight-k class.
std::vector<ConservativeStage> plan_conservative(const Permutation& p);

/// Any conservative permutation of width 3..12 on width+1 lines. The last
/// line is an ancilla: held at 0 when the weight-1 class is fixed, at 1
/// otherwise.
Circuit synth_conservative(const Permutation& p);

}  // namespace revsynth
