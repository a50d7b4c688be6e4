#include "revsynth/toffoli_synth.hpp"

#include <vector>

#include "revsynth/error.hpp"
#include "revsynth/expand.hpp"

namespace revsynth {

Fragment synth_not(Line target, Line h1, Line h2) {
  return {Gate::vtof(h1, h2, target), Gate::vtof(h2, h1, target),
          Gate::vtof(h1, h2, target), Gate::vtof(h2, h1, target)};
}

Fragment synth_cnot(Line control, Line target, Line helper) {
  return {Gate::vtof(control, helper, target), Gate::vtof(control, helper, target)};
}

Fragment synth_ccnot(Line c1, Line c2, Line target) {
  Fragment f{Gate::vtof(c1, c2, target)};
  const Fragment fix = synth_not(c2, c1, target);
  f.insert(f.end(), fix.begin(), fix.end());
  return f;
}

namespace {

void cknot_into(Fragment& out, std::span<const Line> controls, Line target,
                Line borrowed) {
  const std::size_t k = controls.size();
  if (k == 2) {
    const Fragment t = synth_ccnot(controls[0], controls[1], target);
    out.insert(out.end(), t.begin(), t.end());
    return;
  }
  // k >= 3: x ^= AND(a_1..a_{k-1}); t ^= a_k x; undo x; t ^= a_k x.
  const auto head = controls.first(k - 1);
  const Line last = controls[k - 1];
  const Fragment toffoli = synth_ccnot(last, borrowed, target);
  cknot_into(out, head, borrowed, target);
  out.insert(out.end(), toffoli.begin(), toffoli.end());
  cknot_into(out, head, borrowed, target);
  out.insert(out.end(), toffoli.begin(), toffoli.end());
}

}  // namespace

Fragment synth_cknot(std::span<const Line> controls, Line target,
                     std::span<const Line> helpers) {
  const std::size_t k = controls.size();
  const std::size_t needed = k == 0 ? 2 : (k == 2 ? 0 : 1);
  if (helpers.size() < needed) {
    throw SynthError(ErrorCode::InsufficientLines,
                     "C^" + std::to_string(k) + "NOT over VTOF needs " +
                         std::to_string(needed) + " helper line(s), got " +
                         std::to_string(helpers.size()));
  }
  if (k == 0) return synth_not(target, helpers[0], helpers[1]);
  if (k == 1) return synth_cnot(controls[0], target, helpers[0]);
  Fragment out;
  cknot_into(out, controls, target, k >= 3 ? helpers[0] : target);
  return out;
}

Fragment synth_t1(unsigned n) {
  if (n < 2) throw SynthError(ErrorCode::WidthOutOfRange, "t1 needs n >= 2");
  std::vector<Line> head;
  Fragment f;
  for (Line l = 0; l + 1 < n; ++l) {
    head.push_back(l);
    f.push_back(Gate::not_gate(l));
  }
  f.push_back(Gate::cknot(head, n - 1));
  for (Line l = 0; l + 1 < n; ++l) f.push_back(Gate::not_gate(l));
  return f;
}

Fragment synth_t1_primed(unsigned n) {
  if (n < 2) throw SynthError(ErrorCode::WidthOutOfRange, "t1' needs n >= 2");
  std::vector<Line> head;
  for (Line l = 0; l + 1 < n; ++l) head.push_back(l);
  return {Gate::cknot(head, n - 1)};
}

Fragment synth_t2(unsigned n) {
  if (n < 1) throw SynthError(ErrorCode::WidthOutOfRange, "t2 needs n >= 1");
  // Line i flips iff every lower line is 1; the highest target goes first so
  // each gate still sees the pre-increment low bits.
  Fragment f;
  for (Line target = 0; target < n; ++target) {
    std::vector<Line> lower;
    for (Line l = target + 1; l < n; ++l) lower.push_back(l);
    f.push_back(Gate::cknot(std::move(lower), target));
  }
  return f;
}

Fragment token_fragment(Token t, unsigned n) {
  switch (t) {
    case Token::T1: return synth_t1(n);
    case Token::T1p: return synth_t1_primed(n);
    case Token::T2:
    case Token::T2p: return synth_t2(n);
  }
  return {};
}

Circuit synth_general(const Permutation& p) {
  const unsigned n = p.width();
  if (n < 3 || n > 15) {
    throw SynthError(ErrorCode::WidthOutOfRange,
                     "general synthesis needs width in [3, 15] (the VTOF NOT "
                     "needs two helper lines), got " + std::to_string(n));
  }
  std::vector<LineRole> roles(n, LineRole::data);
  roles.push_back(LineRole::borrowed);

  // Every token expands to the same primitive block, so expand each kind
  // once and replay it.
  auto expanded = [&](Token t) {
    return expand_macros(Circuit(roles, token_fragment(t, n)), Alphabet::vtof).gates();
  };
  const Fragment t1 = expanded(Token::T1);
  const Fragment t2 = expanded(Token::T2);

  Circuit out(roles);
  for (Token t : decompose_generators(p, GeneratorVariant::standard)) {
    out.append(t == Token::T1 ? t1 : t2);
  }
  return out;
}

}  // namespace revsynth
