#include <gtest/gtest.h>

#include "oracles.hpp"
#include "revsynth/error.hpp"
#include "revsynth/even_synth.hpp"
#include "revsynth/simulate.hpp"

namespace {

using namespace revsynth;
using oracle::from_bits;

Permutation plus(unsigned n, State k) {
  return oracle::from_function(n, [=](State s) { return (s + k) % (State{1} << n); });
}

Permutation swap_top(unsigned n) {
  const State a = (State{1} << n) - 2, b = a + 1;
  return oracle::from_function(n, [=](State s) { return s == a ? b : s == b ? a : s; });
}

/// Full top-line flip controlled by every other line.
Permutation top_flip(unsigned n) {
  std::vector<Line> controls;
  for (Line l = 1; l < n; ++l) controls.push_back(l);
  return oracle::from_function(n, [&](State s) { return oracle::cknot(s, n, controls, 0); });
}

Permutation table_of(const Fragment& f, unsigned n) { return Permutation(n, oracle::table(f, n)); }

TEST(Pairing, Examples) {
  using T = Token;
  EXPECT_EQ(pair_tokens(std::vector<T>{T::T1p, T::T1p}), (std::vector<TokenPair>{TokenPair::M1}));
  EXPECT_EQ(pair_tokens(std::vector<T>{T::T2p, T::T2p, T::T1p, T::T1p}),
            (std::vector<TokenPair>{TokenPair::M2, TokenPair::M1}));
  EXPECT_EQ(pair_tokens(std::vector<T>{T::T1p, T::T2p, T::T2p, T::T1p}),
            (std::vector<TokenPair>{TokenPair::M3, TokenPair::M4}));
  EXPECT_TRUE(pair_tokens(std::vector<T>{}).empty());
}

TEST(Pairing, OddCountsRejected) {
  using T = Token;
  for (const std::vector<T>& ts : {std::vector<T>{T::T1p}, std::vector<T>{T::T1p, T::T2p, T::T2p},
                                   std::vector<T>{T::T1p, T::T2p, T::T1p, T::T1p},
                                   std::vector<T>{T::T1, T::T1}}) {
    try {
      pair_tokens(ts);
      FAIL();
    } catch (const SynthError& e) {
      EXPECT_EQ(e.code(), ErrorCode::OddTokenCount);
    }
  }
}

TEST(Pairing, CompositionPreserved) {
  for (unsigned n : {3u, 4u}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Permutation p = sample_permutation(n, PermKind::even, seed);
      Permutation acc = Permutation::identity(n);
      for (TokenPair m : pair_tokens(decompose_generators(p, GeneratorVariant::primed))) {
        acc = acc.then(pair_permutation(m, n));
      }
      EXPECT_EQ(acc, p);
    }
  }
}

TEST(Fused, MatchesSwapThenTopFlip) {
  for (unsigned n = 3; n <= 6; ++n) {
    EXPECT_EQ(table_of(synth_fused(n), n), swap_top(n).then(top_flip(n))) << "n=" << n;
  }
}

TEST(Fused, ClosedForm) {
  for (unsigned n = 3; n <= 6; ++n) {
    const Fragment f = synth_fused(n);
    for (State s = 0; s < (State{1} << n); ++s) {
      unsigned c = 1;
      for (Line l = 1; l + 1 < n; ++l) c &= oracle::get(s, l, n);
      const unsigned a = oracle::get(s, 0, n), b = oracle::get(s, n - 1, n);
      State want = oracle::put(s, 0, n, a ^ (a & c) ^ (b & c));
      want = oracle::put(want, n - 1, n, b ^ (a & c));
      EXPECT_EQ(oracle::run(f, s, n), want);
    }
  }
}

TEST(Fused, SpotValues) {
  const Fragment f = synth_fused(4);
  EXPECT_EQ(oracle::run(f, from_bits({1, 1, 1, 1}), 4), from_bits({1, 1, 1, 0}));
  EXPECT_EQ(oracle::run(f, from_bits({0, 1, 1, 1}), 4), from_bits({1, 1, 1, 1}));
  EXPECT_EQ(oracle::run(f, from_bits({1, 0, 1, 1}), 4), from_bits({1, 0, 1, 1}));
  EXPECT_EQ(oracle::run(f, from_bits({0, 1, 0, 1}), 4), from_bits({0, 1, 0, 1}));
}

TEST(Fused, EachGateLeavesALineToBorrow) {
  for (unsigned n = 4; n <= 10; ++n) {
    for (const Gate& g : synth_fused(n)) EXPECT_LE(g.control_count(), n - 2);
  }
}

TEST(Pairs, MatchTheirTokens) {
  for (unsigned n = 3; n <= 6; ++n) {
    for (TokenPair m : {TokenPair::M1, TokenPair::M2, TokenPair::M3, TokenPair::M4}) {
      EXPECT_EQ(table_of(synth_pair(m, n), n), pair_permutation(m, n))
          << to_string(m) << " n=" << n;
    }
  }
}

TEST(Pairs, Examples) {
  EXPECT_TRUE(synth_pair(TokenPair::M1, 4).empty());
  EXPECT_EQ(table_of(synth_pair(TokenPair::M2, 4), 4), plus(4, 2));
  EXPECT_EQ(table_of(synth_pair(TokenPair::M3, 3), 3), swap_top(3).then(plus(3, 1)));
  EXPECT_EQ(table_of(synth_pair(TokenPair::M4, 3), 3), plus(3, 1).then(swap_top(3)));
}

TEST(Pairs, OnlyTheFusedGateHasManyControls) {
  for (unsigned n = 4; n <= 8; ++n) {
    for (TokenPair m : {TokenPair::M2, TokenPair::M3, TokenPair::M4}) {
      for (const Gate& g : synth_pair(m, n)) {
        EXPECT_LE(g.control_count(), n - 2) << to_string(m) << " n=" << n;
        for (Line l : g.lines) EXPECT_LT(l, n);
      }
    }
  }
}

TEST(Even, IdentityIsEmpty) {
  const Circuit c = synth_even(Permutation::identity(4));
  EXPECT_TRUE(c.gates().empty());
  EXPECT_EQ(c.width(), 4u);
  EXPECT_TRUE(verify_realizes(c, Permutation::identity(4)).pass);
}

TEST(Even, OddRejected) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Permutation p = sample_permutation(3, PermKind::any, seed);
    if (parity(p) == Parity::even) continue;
    try {
      synth_even(p);
      FAIL();
    } catch (const SynthError& e) {
      EXPECT_EQ(e.code(), ErrorCode::OddPermutation);
    }
  }
}

TEST(Even, WidthOutOfRange) {
  try {
    synth_even(Permutation::identity(2));
    FAIL();
  } catch (const SynthError& e) {
    EXPECT_EQ(e.code(), ErrorCode::WidthOutOfRange);
  }
}

TEST(Even, RandomTargetsVerifyOnExactWidth) {
  for (unsigned n : {3u, 4u}) {
    for (std::uint64_t seed = 0; seed < (n == 3 ? 30u : 50u); ++seed) {
      const Permutation p = sample_permutation(n, PermKind::even, seed);
      const Circuit c = synth_even(p);
      EXPECT_EQ(c.width(), n);
      EXPECT_EQ(c.role_counts().data, n);
      EXPECT_TRUE(c.is_primitive());
      EXPECT_TRUE(verify_realizes(c, p).pass) << "n=" << n << " seed=" << seed;
    }
  }
}

TEST(Even, FiveBits) {
  const Permutation p = sample_permutation(5, PermKind::even, 3);
  const Circuit c = synth_even(p);
  EXPECT_EQ(c.width(), 5u);
  EXPECT_TRUE(verify_realizes(c, p).pass);
}

}  // namespace
