#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace revsynth {

/// Widest permutation the library handles as a full lookup table.
inline constexpr unsigned kMaxWidth = 16;

using State = std::uint32_t;

enum class Parity { even, odd };

inline Parity operator^(Parity a, Parity b) {
  return a == b ? Parity::even : Parity::odd;
}

const char* to_string(Parity p);

/// A bijection on {0, ..., 2^width - 1}. Position i of `map()` holds the image
/// of i. Bit strings are read with line 1 as the most-significant bit.
class Permutation {
 public:
  /// Validates that `map` has 2^width entries forming a bijection.
  Permutation(unsigned width, std::vector<State> map);

  static Permutation identity(unsigned width);

  unsigned width() const { return width_; }
  std::size_t size() const { return map_.size(); }
  State operator()(State x) const { return map_[x]; }
  std::span<const State> map() const { return map_; }

  Permutation inverse() const;

  /// Apply `*this` first, then `next`.
  Permutation then(const Permutation& next) const;

  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  unsigned width_;
  std::vector<State> map_;
};

/// Parity of an arbitrary permutation of {0, ..., size-1} given as a table.
Parity table_parity(std::span<const State> table);

Parity parity(const Permutation& p);

using Transposition = std::pair<State, State>;

/// Transpositions whose left-to-right composition (first applied first)
/// equals `p`. Each pair is ordered (smaller, larger).
std::vector<Transposition> to_transpositions(const Permutation& p);

/// Table-level version used for weight classes.
std::vector<Transposition> table_transpositions(std::span<const State> table);

/// Composes transpositions left to right into a width-bit permutation.
Permutation compose_transpositions(unsigned width,
                                   std::span<const Transposition> swaps);

// ---------------------------------------------------------------------------
// Hamming-weight classes

unsigned hamming_weight(State x);

/// Members of the weight-k class of m-bit strings in lexicographic order
/// (which, with line 1 as the MSB, is ascending integer order).
std::vector<State> weight_class_members(unsigned m, unsigned k);

bool is_conservative(const Permutation& p);

struct WeightClassDecomposition {
  unsigned width = 0;
  /// classes[k][i] = index (within class k) of the image of member i.
  std::vector<std::vector<State>> classes;
};

/// Throws NotConservative if some string changes Hamming weight.
WeightClassDecomposition weight_decompose(const Permutation& p);

Permutation recompose(const WeightClassDecomposition& d);

// ---------------------------------------------------------------------------
// Generator decomposition

enum class Token { T1, T2, T1p, T2p };
enum class GeneratorVariant { standard, primed };

const char* to_string(Token t);

/// The permutation one token denotes on n bits: T1 swaps 0 and 1, T1p swaps
/// 2^n-2 and 2^n-1, T2/T2p add one modulo 2^n.
Permutation token_permutation(Token t, unsigned width);

/// Token sequence whose left-to-right composition equals `p`: every
/// transposition is split into adjacent swaps, every adjacent swap becomes a
/// conjugation of the swap generator by powers of the +1 generator.
std::vector<Token> decompose_generators(const Permutation& p,
                                        GeneratorVariant variant);

/// Left-to-right composition of a token sequence.
Permutation compose_tokens(unsigned width, std::span<const Token> tokens);

// ---------------------------------------------------------------------------
// Sampling

enum class PermKind { any, even, conservative };

Permutation sample_permutation(unsigned width, PermKind kind,
                               std::uint64_t seed);

// ---------------------------------------------------------------------------
// Text formats

/// `perm <n>` followed by 2^n images.
void write_permutation(std::ostream& out, const Permutation& p);

/// 2^n lines `<input bits> <output bits>`.
void write_truth_table(std::ostream& out, const Permutation& p);

/// Reads either format; `#` starts a comment.
Permutation read_permutation(std::istream& in);

Permutation load_permutation(const std::string& path);

}  // namespace revsynth
