#include <gtest/gtest.h>

#include <random>

#include "json.hpp"
#include "oracles.hpp"
#include "revsynth/error.hpp"
#include "revsynth/simulate.hpp"

namespace {

using namespace revsynth;

const std::vector<LineRole> kData3(3, LineRole::data);

TEST(Simulate, EmptyCircuitIsIdentity) {
  EXPECT_TRUE(circuit_to_permutation(Circuit(4)).is_identity());
}

TEST(Simulate, TwoVtofCnot) {
  const Circuit c(kData3, {Gate::vtof(0, 1, 2), Gate::vtof(0, 1, 2)});
  const Permutation want = oracle::from_function(3, [](State s) {
    return oracle::put(s, 2, 3, oracle::get(s, 0, 3) ^ oracle::get(s, 2, 3));
  });
  EXPECT_EQ(circuit_to_permutation(c), want);
}

TEST(Simulate, FourVtofNot) {
  const Circuit c(kData3, {Gate::vtof(0, 1, 2), Gate::vtof(1, 0, 2), Gate::vtof(0, 1, 2),
                           Gate::vtof(1, 0, 2)});
  const Permutation want = oracle::from_function(3, [](State s) { return s ^ 1u; });
  EXPECT_EQ(circuit_to_permutation(c), want);
}

TEST(Simulate, ParallelAndReferenceAgreeWithOracle) {
  std::mt19937_64 rng(31);
  for (unsigned w = 3; w <= 8; ++w) {
    Circuit c(w);
    std::vector<Line> lines(w);
    for (Line l = 0; l < w; ++l) lines[l] = l;
    for (int i = 0; i < 60; ++i) {
      std::shuffle(lines.begin(), lines.end(), rng);
      c.append(i % 3 == 0 ? Gate::fred(lines[0], lines[1], lines[2])
               : i % 3 == 1 ? Gate::vtof(lines[0], lines[1], lines[2])
                            : Gate::cknot({lines[0], lines[1]}, lines[2]));
    }
    const auto want = oracle::table(c);
    const Permutation fast = circuit_to_permutation(c);
    EXPECT_EQ(std::vector<State>(fast.map().begin(), fast.map().end()), want);
    EXPECT_EQ(circuit_to_permutation_reference(c), fast);
  }
}

TEST(Verify, CnotCascadePasses) {
  const Circuit c(kData3, {Gate::vtof(0, 1, 2), Gate::vtof(0, 1, 2)});
  const Permutation cnot = oracle::from_function(3, [](State s) { return oracle::cknot(s, 3, {0}, 2); });
  const SynthesisReport r = verify_realizes(c, cnot);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.inputs_checked, 8u);
  EXPECT_EQ(r.primitive_gate_count, 2u);
  EXPECT_EQ(r.roles.data, 3u);
}

TEST(Verify, SingleVtofIsNotToffoli) {
  const Circuit c(kData3, {Gate::vtof(0, 1, 2)});
  const Permutation toffoli =
      oracle::from_function(3, [](State s) { return oracle::cknot(s, 3, {0, 1}, 2); });
  const SynthesisReport r = verify_realizes(c, toffoli);
  EXPECT_FALSE(r.pass);
  ASSERT_TRUE(r.counterexample);
  EXPECT_EQ(r.counterexample->input, 0b000u);
  EXPECT_EQ(r.counterexample->output, 0b010u);
  EXPECT_EQ(r.counterexample->expected, 0b000u);
}

TEST(Verify, BorrowedFailureOnlyAtStartOne) {
  // d1 ^= b: the identity exactly when the borrowed line starts at 0.
  const std::vector<LineRole> roles{LineRole::data, LineRole::data, LineRole::borrowed};
  const Circuit c(roles, {Gate::cnot(2, 1)});
  const Permutation id = Permutation::identity(2);
  for (State s = 0; s < 8; ++s) {
    const State out = oracle::run(std::vector<Gate>(c.gates().begin(), c.gates().end()), s, 3);
    EXPECT_EQ(out != s, oracle::get(s, 2, 3) == 1) << s;
  }
  const SynthesisReport r = verify_realizes(c, id);
  EXPECT_FALSE(r.pass);
  ASSERT_TRUE(r.counterexample);
  EXPECT_EQ(oracle::get(r.counterexample->input, 2, 3), 1u);

  // The same gates with the line declared ancilla0 pass: only 0 is checked.
  const Circuit as_ancilla({LineRole::data, LineRole::data, LineRole::ancilla0},
                           std::vector<Gate>(c.gates().begin(), c.gates().end()));
  EXPECT_TRUE(verify_realizes(as_ancilla, id).pass);
  EXPECT_EQ(verify_realizes(as_ancilla, id).inputs_checked, 4u);
  EXPECT_TRUE(verify_realizes_reference(as_ancilla, id).pass);
  EXPECT_FALSE(verify_realizes_reference(c, id).pass);
}

TEST(Verify, AncillaOneIsHeldAtOne) {
  // NOT on a data line controlled by the ancilla: a plain NOT when it holds 1.
  const Circuit c({LineRole::data, LineRole::ancilla1}, {Gate::cnot(1, 0)});
  const Permutation flip = oracle::from_function(1, [](State s) { return s ^ 1u; });
  EXPECT_TRUE(verify_realizes(c, flip).pass);
  const Circuit as_zero({LineRole::data, LineRole::ancilla0}, {Gate::cnot(1, 0)});
  EXPECT_FALSE(verify_realizes(as_zero, flip).pass);
}

TEST(Verify, WidthMismatch) {
  try {
    verify_realizes(Circuit(3), Permutation::identity(4));
    FAIL();
  } catch (const SynthError& e) {
    EXPECT_EQ(e.code(), ErrorCode::WidthMismatch);
  }
}

TEST(Verify, ParallelMatchesReferenceOnMutants) {
  std::mt19937_64 rng(32);
  const std::vector<LineRole> roles{LineRole::data, LineRole::borrowed, LineRole::data,
                                    LineRole::data, LineRole::ancilla1};
  for (int trial = 0; trial < 50; ++trial) {
    Circuit c(roles);
    for (int i = 0; i < 6; ++i) {
      const Line a = rng() % 5, b = (a + 1 + rng() % 4) % 5;
      Line t = rng() % 5;
      while (t == a || t == b) t = (t + 1) % 5;
      c.append(Gate::cknot({a, b}, t));
    }
    const Permutation target = sample_permutation(3, PermKind::any, trial);
    const SynthesisReport p = verify_realizes(c, target);
    const SynthesisReport r = verify_realizes_reference(c, target);
    EXPECT_EQ(p.pass, r.pass);
    if (!p.pass) {
      EXPECT_EQ(p.counterexample->input, r.counterexample->input);
      EXPECT_EQ(p.counterexample->output, r.counterexample->output);
    }
  }
}

TEST(Report, TextAndJsonCarryTheSameFields) {
  const Circuit c(kData3, {Gate::vtof(0, 1, 2)});
  SynthesisReport r = verify_realizes(c, Permutation::identity(3));
  r.backend = "general";
  const std::string text = format_report(r);
  EXPECT_EQ(text,
            "backend: general\nwidth: 3\ngates: 1\nprimitive_gates: 1\n"
            "roles: data=3 ancilla0=0 ancilla1=0 borrowed=0\ninputs_checked: 8\n"
            "verdict: fail input=000 output=010 expected=000\n");
  const auto j = nlohmann::json::parse(format_report_json(r));
  EXPECT_EQ(j["backend"], "general");
  EXPECT_EQ(j["primitive_gates"], 1);
  EXPECT_EQ(j["roles"]["data"], 3);
  EXPECT_EQ(j["verdict"], "fail");
  EXPECT_EQ(j["counterexample"]["output"], "010");
}

}  // namespace
