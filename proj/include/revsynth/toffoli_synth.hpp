#pragma once

#include <span>

#include "revsynth/circuit.hpp"
#include "revsynth/permutation.hpp"

namespace revsynth {

// Primitive VTOF fragments. Helper lines are restored for every start value.

/// (a, b, c) -> (a, b, c+1) from four VTOFs alternating the two helpers.
Fragment synth_not(Line target, Line h1, Line h2);

/// Two VTOFs with `helper` as the invert-line: (a, h, c) -> (a, h, a+c).
Fragment synth_cnot(Line control, Line target, Line helper);

/// Toffoli = VTOF then NOT on the second control, using the first control and
/// the target as the NOT's helpers. Five gates, no outside line.
Fragment synth_ccnot(Line c1, Line c2, Line target);

/// target ^= AND(controls). `helpers` must supply 2 lines for k=0, 1 for k=1,
/// none for k=2 and one borrowed line for k>=3 (extra entries are ignored).
/// For k>=3 two C^(k-1)NOTs onto the borrowed line sandwich two Toffolis; the
/// inner level borrows this level's target, so one outside line serves the
/// whole recursion. Throws InsufficientLines.
Fragment synth_cknot(std::span<const Line> controls, Line target,
                     std::span<const Line> helpers);

// Macro-level generator circuits on lines 0..n-1.

/// Swaps states 0 and 1: NOT on lines 0..n-2, C^(n-1)NOT onto line n-1, NOTs.
Fragment synth_t1(unsigned n);

/// Swaps states 2^n-2 and 2^n-1: C^(n-1)NOT onto line n-1.
Fragment synth_t1_primed(unsigned n);

/// k -> k+1 mod 2^n: C^(n-1)NOT onto line 0 first, down to NOT on line n-1.
Fragment synth_t2(unsigned n);

/// Macro fragment for one token (T2 and T2p share a circuit).
Fragment token_fragment(Token t, unsigned n);

/// Any permutation of width 3..15 on width+1 lines; the last line is borrowed.
Circuit synth_general(const Permutation& p);

}  // namespace revsynth
