#include "revsynth/even_synth.hpp"

#include <array>
#include <string>

#include "revsynth/error.hpp"
#include "revsynth/expand.hpp"
#include "revsynth/toffoli_synth.hpp"

namespace revsynth {

const char* to_string(TokenPair p) {
  switch (p) {
    case TokenPair::M1: return "M1";
    case TokenPair::M2: return "M2";
    case TokenPair::M3: return "M3";
    case TokenPair::M4: return "M4";
  }
  return "?";
}

std::vector<TokenPair> pair_tokens(std::span<const Token> tokens) {
  std::size_t swaps = 0;
  for (Token t : tokens) {
    if (t == Token::T1 || t == Token::T2) {
      throw SynthError(ErrorCode::OddTokenCount, "pairing needs primed tokens");
    }
    if (t == Token::T1p) ++swaps;
  }
  if (swaps % 2 != 0 || (tokens.size() - swaps) % 2 != 0) {
    throw SynthError(ErrorCode::OddTokenCount,
                     "token counts must both be even (t'1: " + std::to_string(swaps) +
                         ", t'2: " + std::to_string(tokens.size() - swaps) + ")");
  }
  std::vector<TokenPair> out;
  out.reserve(tokens.size() / 2);
  for (std::size_t i = 0; i < tokens.size(); i += 2) {
    const bool first_swap = tokens[i] == Token::T1p;
    const bool second_swap = tokens[i + 1] == Token::T1p;
    if (first_swap && second_swap) {
      out.push_back(TokenPair::M1);
    } else if (!first_swap && !second_swap) {
      out.push_back(TokenPair::M2);
    } else {
      out.push_back(first_swap ? TokenPair::M3 : TokenPair::M4);
    }
  }
  return out;
}

Permutation pair_permutation(TokenPair pair, unsigned n) {
  std::array<Token, 2> t{};
  switch (pair) {
    case TokenPair::M1: t = {Token::T1p, Token::T1p}; break;
    case TokenPair::M2: t = {Token::T2p, Token::T2p}; break;
    case TokenPair::M3: t = {Token::T1p, Token::T2p}; break;
    case TokenPair::M4: t = {Token::T2p, Token::T1p}; break;
  }
  return compose_tokens(n, t);
}

Fragment synth_fused(unsigned n) {
  if (n < 3) throw SynthError(ErrorCode::WidthOutOfRange, "fused gate needs n >= 3");
  const Line a = 0;
  const Line b = n - 1;
  const unsigned middle = n - 2;
  const unsigned x_size = (middle + 1) / 2;
  std::vector<Line> g1;
  std::vector<Line> g2;
  for (Line l = 1; l <= x_size; ++l) g1.push_back(l);
  for (Line l = 1 + x_size; l < b; ++l) g2.push_back(l);
  g1.push_back(b);
  g2.push_back(a);
  // a ^= Xb; b ^= Ya; a ^= Xb; b ^= Ya
  const Gate first = Gate::cknot(g1, a);
  const Gate second = Gate::cknot(g2, b);
  return {first, second, first, second};
}

namespace {

/// +1 on lines 0..top, highest target first.
Fragment increment_ladder(Line top, Line first_target) {
  Fragment f;
  for (Line target = first_target; target <= top; ++target) {
    std::vector<Line> lower;
    for (Line l = target + 1; l <= top; ++l) lower.push_back(l);
    f.push_back(Gate::cknot(std::move(lower), target));
  }
  return f;
}

}  // namespace

Fragment synth_pair(TokenPair pair, unsigned n) {
  if (n < 3) throw SynthError(ErrorCode::WidthOutOfRange, "pair synthesis needs n >= 3");
  switch (pair) {
    case TokenPair::M1: return {};
    case TokenPair::M2: return increment_ladder(n - 2, 0);
    case TokenPair::M3: {
      // t'1 followed by t'2: the swap merges with t'2's top gate.
      Fragment f = synth_fused(n);
      const Fragment rest = increment_ladder(n - 1, 1);
      f.insert(f.end(), rest.begin(), rest.end());
      return f;
    }
    case TokenPair::M4: {
      // t'2 t'1 = (+2) followed by the inverse of M3.
      Fragment f = increment_ladder(n - 2, 0);
      const Fragment back = reversed(synth_pair(TokenPair::M3, n));
      f.insert(f.end(), back.begin(), back.end());
      return f;
    }
  }
  return {};
}

Circuit synth_even(const Permutation& p) {
  const unsigned n = p.width();
  if (n < 3 || n > 16) {
    throw SynthError(ErrorCode::WidthOutOfRange,
                     "even synthesis needs width in [3, 16], got " + std::to_string(n));
  }
  if (parity(p) == Parity::odd) {
    throw SynthError(ErrorCode::OddPermutation,
                     "permutation is odd; without extra lines only even "
                     "permutations can be realized");
  }
  const std::vector<LineRole> roles(n, LineRole::data);
  auto expanded = [&](const Fragment& macro) {
    return expand_macros(Circuit(roles, macro), Alphabet::vtof).gates();
  };

  Circuit out(roles);
  if (n == 3) {
    // Every C^kNOT here has k <= 2 and needs no spare line.
    const Fragment t1 = expanded(synth_t1(n));
    const Fragment t2 = expanded(synth_t2(n));
    for (Token t : decompose_generators(p, GeneratorVariant::standard)) {
      out.append(t == Token::T1 ? t1 : t2);
    }
    return out;
  }

  const std::vector<Token> tokens = decompose_generators(p, GeneratorVariant::primed);
  std::array<Fragment, 4> blocks;
  for (TokenPair m : {TokenPair::M2, TokenPair::M3, TokenPair::M4}) {
    blocks[static_cast<std::size_t>(m)] = expanded(synth_pair(m, n));
  }
  for (TokenPair m : pair_tokens(tokens)) out.append(blocks[static_cast<std::size_t>(m)]);
  return out;
}

}  // namespace revsynth
