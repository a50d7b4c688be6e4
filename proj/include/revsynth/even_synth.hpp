#pragma once

#include <span>
#include <vector>

#include "revsynth/circuit.hpp"
#include "revsynth/permutation.hpp"

namespace revsynth {

/// Adjacent token pairs: M1 = t'1 t'1, M2 = t'2 t'2, M3 = t'1 t'2, M4 = t'2 t'1.
enum class TokenPair { M1, M2, M3, M4 };

const char* to_string(TokenPair p);

/// Throws OddTokenCount unless the tokens are primed with an even count of
/// each kind.
std::vector<TokenPair> pair_tokens(std::span<const Token> tokens);

/// Permutation a pair denotes on n bits.
Permutation pair_permutation(TokenPair pair, unsigned n);

/// Realizes a + aC + bC on line 0 and b + aC on line n-1, with C the product
/// of the middle lines, from four C^kNOTs split over the two halves of the
/// middle lines. Equals t'1 followed by C^(n-1)NOT onto line 0.
Fragment synth_fused(unsigned n);

/// Macro fragment on exactly n lines for one pair; every C^kNOT has at most
/// n-2 controls, so each expansion can borrow a data line.
Fragment synth_pair(TokenPair pair, unsigned n);

/// Any even permutation of width 3..16 on exactly width lines.
Circuit synth_even(const Permutation& p);

}  // namespace revsynth
