#include <gtest/gtest.h>

#include "oracles.hpp"
#include "revsynth/error.hpp"
#include "revsynth/simulate.hpp"
#include "revsynth/toffoli_synth.hpp"

namespace {

using namespace revsynth;
using oracle::from_bits;

State run(const Fragment& f, State s, unsigned w) { return oracle::run(f, s, w); }

TEST(BaseCases, NotFragment) {
  const Fragment f = synth_not(2, 0, 1);
  ASSERT_EQ(f.size(), 4u);
  for (const Gate& g : f) EXPECT_EQ(g.kind, GateKind::VTOF);
  EXPECT_EQ(run(f, from_bits({0, 0, 0}), 3), from_bits({0, 0, 1}));
  EXPECT_EQ(run(f, from_bits({1, 1, 0}), 3), from_bits({1, 1, 1}));
  for (State s = 0; s < 8; ++s) {
    EXPECT_EQ(run(f, s, 3), s ^ 1u);  // both helpers restored for all four values
    EXPECT_EQ(run(f, run(f, s, 3), 3), s);
  }
}

TEST(BaseCases, CnotFragment) {
  const Fragment f = synth_cnot(0, 2, 1);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(run(f, from_bits({1, 0, 0}), 3), from_bits({1, 0, 1}));
  EXPECT_EQ(run(f, from_bits({0, 1, 1}), 3), from_bits({0, 1, 1}));
  for (State s = 0; s < 8; ++s) {
    EXPECT_EQ(run(f, s, 3), oracle::cknot(s, 3, {0}, 2));
  }
}

TEST(BaseCases, ToffoliFragment) {
  const Fragment f = synth_ccnot(0, 1, 2);
  EXPECT_EQ(f.size(), 5u);
  for (State s = 0; s < 8; ++s) EXPECT_EQ(run(f, s, 3), oracle::cknot(s, 3, {0, 1}, 2));
}

TEST(Cknot, SmallCasesUseNoBorrowedLine) {
  const std::vector<Line> none;
  const std::vector<Line> two{1, 2};
  EXPECT_EQ(synth_cknot(std::vector<Line>{0, 1}, 2, none).size(), 5u);
  EXPECT_EQ(synth_cknot(std::vector<Line>{0}, 2, std::vector<Line>{1}), synth_cnot(0, 2, 1));
  EXPECT_EQ(synth_cknot(none, 0, two), synth_not(0, 1, 2));
}

TEST(Cknot, MatchesOracleUnderBothBorrowedValues) {
  // Lines: controls 0..k-1, target k, borrowed k+1; all 2^(k+2) inputs.
  for (unsigned k = 0; k <= 6; ++k) {
    const unsigned w = std::max(k + 2, 3u);
    std::vector<Line> controls;
    for (Line l = 0; l < k; ++l) controls.push_back(l);
    std::vector<Line> helpers;
    for (Line l = k + 1; l < w; ++l) helpers.push_back(l);
    if (k == 0) helpers = {1, 2};
    const Fragment f = synth_cknot(controls, k, helpers);
    for (State s = 0; s < (State{1} << w); ++s) {
      EXPECT_EQ(run(f, s, w), oracle::cknot(s, w, controls, k)) << "k=" << k << " s=" << s;
    }
  }
}

TEST(Cknot, ThreeControlsAllOnes) {
  // controls 1,1,1, target 0, borrowed 1 -> target 1, borrowed 1
  const std::vector<Line> c{0, 1, 2};
  const std::vector<Line> h{4};
  EXPECT_EQ(run(synth_cknot(c, 3, h), from_bits({1, 1, 1, 0, 1}), 5), from_bits({1, 1, 1, 1, 1}));
}

TEST(Cknot, FourControlsOnSixLines) {
  const std::vector<Line> c{0, 2, 3, 5};
  const std::vector<Line> h{1};
  const Fragment f = synth_cknot(c, 4, h);
  for (State s = 0; s < 64; ++s) EXPECT_EQ(run(f, s, 6), oracle::cknot(s, 6, c, 4));
}

TEST(Cknot, GateCountGrowsMonotonically) {
  std::size_t prev = 0;
  for (unsigned k = 2; k <= 10; ++k) {
    std::vector<Line> controls;
    for (Line l = 0; l < k; ++l) controls.push_back(l);
    const std::vector<Line> h{k + 1};
    const std::size_t n = synth_cknot(controls, k, h).size();
    EXPECT_GT(n, prev);
    EXPECT_GE(n, 2 * prev);  // two copies of the previous level per step
    prev = n;
  }
}

TEST(Cknot, InsufficientLines) {
  const std::vector<Line> none;
  try {
    synth_cknot(std::vector<Line>{0, 1, 2}, 3, none);
    FAIL();
  } catch (const SynthError& e) {
    EXPECT_EQ(e.code(), ErrorCode::InsufficientLines);
  }
  EXPECT_THROW(synth_cknot(none, 0, std::vector<Line>{1}), SynthError);
}

TEST(Generators, T1SwapsZeroAndOne) {
  for (unsigned n : {2u, 3u, 4u}) {
    const Fragment f = synth_t1(n);
    EXPECT_EQ(f.size(), 2 * (n - 1) + 1);
    for (State s = 0; s < (State{1} << n); ++s) {
      const State want = s == 0 ? 1 : s == 1 ? 0 : s;
      EXPECT_EQ(run(f, s, n), want);
      EXPECT_EQ(run(f, run(f, s, n), n), s);
    }
  }
}

TEST(Generators, T1PrimedSwapsTopTwo) {
  const Fragment f = synth_t1_primed(3);
  for (State s = 0; s < 8; ++s) EXPECT_EQ(run(f, s, 3), s == 6 ? 7u : s == 7 ? 6u : s);
}

TEST(Generators, T2AddsOne) {
  EXPECT_EQ(synth_t2(1), (Fragment{Gate::not_gate(0)}));
  EXPECT_EQ(run(synth_t2(3), 7, 3), 0u);
  EXPECT_EQ(run(synth_t2(3), 3, 3), 4u);
  for (unsigned n = 1; n <= 4; ++n) {
    const Fragment f = synth_t2(n);
    const State size = State{1} << n;
    for (State s = 0; s < size; ++s) {
      EXPECT_EQ(run(f, s, n), (s + 1) % size);
      State t = s;
      for (State i = 0; i < size; ++i) t = run(f, t, n);
      EXPECT_EQ(t, s);
    }
  }
}

TEST(General, IdentityGivesEmptyCircuit) {
  const Circuit c = synth_general(Permutation::identity(3));
  EXPECT_TRUE(c.gates().empty());
  EXPECT_EQ(c.width(), 4u);
  EXPECT_TRUE(verify_realizes(c, Permutation::identity(3)).pass);
}

TEST(General, RandomTargetsVerify) {
  for (unsigned n : {3u, 4u}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Permutation p = sample_permutation(n, PermKind::any, seed);
      const Circuit c = synth_general(p);
      EXPECT_EQ(c.width(), n + 1);
      EXPECT_EQ(c.role(n), LineRole::borrowed);
      EXPECT_EQ(c.role_counts().borrowed, 1u);
      EXPECT_TRUE(c.is_primitive());
      const SynthesisReport r = verify_realizes(c, p);
      EXPECT_TRUE(r.pass) << "n=" << n << " seed=" << seed;
      EXPECT_EQ(r.inputs_checked, std::uint64_t{1} << (n + 1));
    }
  }
}

TEST(General, OddTargetAndBorrowedLineRestored) {
  const Permutation p = oracle::from_function(4, [](State s) { return s == 3 ? 9 : s == 9 ? 3 : s; });
  ASSERT_EQ(parity(p), Parity::odd);
  const Circuit c = synth_general(p);
  const auto t = oracle::table(c);
  for (State s = 0; s < 32; ++s) {
    EXPECT_EQ(t[s] & 1u, s & 1u);  // borrowed line is the LSB
    EXPECT_EQ(t[s] >> 1, p(s >> 1));
  }
}

TEST(General, WidthOutOfRange) {
  for (unsigned n : {1u, 2u, 16u}) {
    try {
      synth_general(Permutation::identity(n));
      FAIL();
    } catch (const SynthError& e) {
      EXPECT_EQ(e.code(), ErrorCode::WidthOutOfRange);
    }
  }
}

}  // namespace
