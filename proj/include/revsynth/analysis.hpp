#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "revsynth/permutation.hpp"

namespace revsynth {

/// Entry i is 1 when the permutation restricted to weight class i is odd.
struct ParityVector {
  unsigned width = 0;
  std::vector<std::uint8_t> entries;  // width + 1 values

  ParityVector operator^(const ParityVector& o) const;
  std::string str() const;  // "0 1 0 1 0"

  friend bool operator==(const ParityVector&, const ParityVector&) = default;
};

/// Throws NotConservative.
ParityVector parity_vector(const Permutation& p);

/// C(n, k) mod 2 by Lucas: odd iff k's bits are a subset of n's.
inline unsigned binomial_mod2(unsigned n, unsigned k) {
  return k <= n && (k & ~n) == 0 ? 1u : 0u;
}

/// Closed form for C^kSWAP on m lines: entry i = C(m-2-k, i-k-1) mod 2.
/// k = 0 is SWAP. Throws RangeError unless k <= m-2.
ParityVector ckswap_parity_formula(unsigned k, unsigned m);

/// C^kSWAP on the lowest-index lines of an m-line space: controls 0..k-1,
/// targets k and k+1.
Permutation embedded_ckswap(unsigned k, unsigned m);

/// `g` (width k) acting on lines 0..k-1 of an n-line space.
Permutation embed_gate(const Permutation& g, unsigned n);

struct IndependenceResult {
  bool independent = false;
  /// Independent: the first coordinate at which the system
  /// sum_i c_i p_{s_i} = p_{s_k} (coordinates taken in ascending order) has no
  /// solution, and a set of coordinates whose sum vanishes on every spanning
  /// vector but is 1 on the target.
  unsigned failing_coordinate = 0;
  std::vector<unsigned> witness;
  /// Dependent: coefficients c_0..c_{k-1}.
  std::vector<std::uint8_t> coefficients;
};

/// GF(2) membership test of the C^kSWAP parity vector in the span of the
/// C^iSWAP vectors for i < k, on m lines. Throws RangeError unless
/// 1 <= k <= m-2.
IndependenceResult independence_check(unsigned k, unsigned m);

/// Parity of a width-k gate viewed as an n-bit gate. Throws RangeError if
/// n < k.
Parity embedded_parity(const Permutation& g, unsigned n);

}  // namespace revsynth
