#pragma once

#include "revsynth/circuit.hpp"

namespace revsynth {

enum class Alphabet { vtof, fred };

/// Expands every macro into the primitive of `alphabet`. Auxiliary lines are
/// picked from the circuit roles: free data lines first (ascending), then
/// borrowed, then ancilla lines. VTOF helpers are restored for every start
/// value, so the induced permutation is preserved on all inputs. C^kSWAP
/// expansions (k = 0 or k >= 2) rely on an ancilla line and preserve the
/// permutation on inputs where ancillas hold their declared values.
///
/// Throws UnexpandableMacro on an alphabet mismatch and InsufficientLines
/// when the needed auxiliary lines are missing.
Circuit expand_macros(const Circuit& c, Alphabet alphabet);

}  // namespace revsynth
