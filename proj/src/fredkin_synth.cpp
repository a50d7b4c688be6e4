#include "revsynth/fredkin_synth.hpp"

#include <string>

#include "revsynth/error.hpp"
#include "revsynth/expand.hpp"
#include "revsynth/simulate.hpp"

namespace revsynth {

namespace {

std::vector<Line> ones_of(State bits, unsigned width) {
  std::vector<Line> out;
  for (Line l = 0; l < width; ++l) {
    if ((bits >> bit_of(l, width)) & 1u) out.push_back(l);
  }
  return out;
}

void require_same_class(const WeightString& s1, const WeightString& s2) {
  if (s1.width != s2.width || s1.weight() != s2.weight()) {
    throw SynthError(ErrorCode::WeightMismatch,
                     "strings must share width and Hamming weight");
  }
}

void append(Fragment& out, const Fragment& f) { out.insert(out.end(), f.begin(), f.end()); }

/// Primitive C^kSWAP for k >= 1 whose k > 1 case borrows (p, q).
Fragment borrowing_swap(std::span<const Line> controls, Line t1, Line t2, Line p,
                        Line q) {
  if (controls.size() == 1) return {Gate::fred(controls[0], t1, t2)};
  return expand_ckswap_borrowed_pair(controls, t1, t2, p, q);
}

}  // namespace

std::vector<WeightString> hamming_path(const WeightString& s1,
                                       const WeightString& s2) {
  require_same_class(s1, s2);
  const unsigned w = s1.width;
  std::vector<WeightString> path{s1};
  State cur = s1.bits;
  while (cur != s2.bits) {
    const std::vector<Line> surplus = ones_of(cur & ~s2.bits, w);
    const std::vector<Line> missing = ones_of(s2.bits & ~cur, w);
    cur ^= (State{1} << bit_of(surplus.front(), w)) | (State{1} << bit_of(missing.front(), w));
    path.push_back(WeightString{w, cur});
  }
  return path;
}

Fragment synth_transposition(const WeightString& s1, const WeightString& s2) {
  require_same_class(s1, s2);
  if (s1 == s2) throw SynthError(ErrorCode::EqualStrings, "transposition needs distinct strings");
  const unsigned w = s1.width;
  const std::vector<WeightString> path = hamming_path(s1, s2);
  Fragment steps;
  for (std::size_t i = 1; i < path.size(); ++i) {
    const State u = path[i - 1].bits;
    const State v = path[i].bits;
    const std::vector<Line> targets = ones_of(u ^ v, w);
    steps.push_back(Gate::ckswap(ones_of(u & v, w), targets[0], targets[1]));
  }
  Fragment out = steps;
  for (std::size_t i = steps.size() - 1; i-- > 0;) out.push_back(steps[i]);
  return out;
}

Fragment synth_ckswap_ancilla(std::span<const Line> controls, Line t1, Line t2,
                              Line ancilla) {
  const std::size_t k = controls.size();
  if (k < 2) throw SynthError(ErrorCode::RangeError, "ancilla construction needs k >= 2");
  std::vector<Line> head(controls.begin(), controls.end() - 1);
  const Gate load = Gate::ckswap(head, controls[k - 1], ancilla);
  return {load, Gate::fred(ancilla, t1, t2), load};
}

Fragment synth_ckswap_borrowed_pair(std::span<const Line> controls, Line t1,
                                    Line t2, Line p, Line q) {
  const std::size_t k = controls.size();
  if (k < 2) throw SynthError(ErrorCode::RangeError, "borrowed-pair construction needs k >= 2");
  std::vector<Line> head(controls.begin(), controls.end() - 1);
  Fragment out;
  for (auto [x, y] : {std::pair{p, q}, std::pair{q, p}}) {
    const Gate inner = Gate::ckswap(head, controls[k - 1], x);
    out.push_back(Gate::fred(x, controls[0], y));
    out.push_back(inner);
    out.push_back(Gate::fred(controls[k - 1], t1, t2));
    out.push_back(inner);
    out.push_back(Gate::fred(x, controls[0], y));
  }
  return out;
}

Fragment expand_ckswap_borrowed_pair(std::span<const Line> controls, Line t1,
                                     Line t2, Line p, Line q) {
  const std::size_t k = controls.size();
  if (k < 2) throw SynthError(ErrorCode::RangeError, "borrowed-pair construction needs k >= 2");
  const auto head = controls.first(k - 1);
  const Line last = controls[k - 1];
  Fragment out;
  for (auto [x, y] : {std::pair{p, q}, std::pair{q, p}}) {
    const Fragment inner = borrowing_swap(head, last, x, t1, t2);
    out.push_back(Gate::fred(x, controls[0], y));
    append(out, inner);
    out.push_back(Gate::fred(last, t1, t2));
    append(out, inner);
    out.push_back(Gate::fred(x, controls[0], y));
  }
  return out;
}

Fragment expand_ckswap(std::span<const Line> controls, Line t1, Line t2,
                       Line ancilla, unsigned ancilla_value) {
  const std::size_t k = controls.size();
  if (k == 1) return {Gate::fred(controls[0], t1, t2)};
  if (ancilla_value == 0) {
    if (k == 0) {
      throw SynthError(ErrorCode::InsufficientLines,
                       "SWAP over FRED needs a control line held at 1");
    }
    const Fragment load = borrowing_swap(controls.first(k - 1), controls[k - 1],
                                         ancilla, t1, t2);
    Fragment out = load;
    out.push_back(Gate::fred(ancilla, t1, t2));
    append(out, load);
    return out;
  }
  if (k == 0) return {Gate::fred(ancilla, t1, t2)};
  // The ancilla, swapped with the last control under the others, is 1 unless
  // the head holds and the last control is 0; the unconditional second swap
  // and the head-controlled tail leave exactly the all-ones case swapped.
  const auto head = controls.first(k - 1);
  const Fragment load = borrowing_swap(head, controls[k - 1], ancilla, t1, t2);
  Fragment out = load;
  out.push_back(Gate::fred(ancilla, t1, t2));
  append(out, load);
  out.push_back(Gate::fred(ancilla, t1, t2));
  append(out, expand_ckswap(head, t1, t2, ancilla, 1));
  return out;
}

Circuit synth_ckswap(unsigned k) {
  if (k < 1) throw SynthError(ErrorCode::RangeError, "synth_ckswap needs k >= 1");
  if (k > 8) {
    throw SynthError(ErrorCode::DepthLimit,
                     "C^kSWAP recursion is capped at k = 8, got " + std::to_string(k));
  }
  std::vector<Line> controls;
  for (Line l = 0; l < k; ++l) controls.push_back(l);
  if (k == 1) return Circuit(std::vector<LineRole>(3, LineRole::data), {Gate::fred(0, 1, 2)});
  std::vector<LineRole> roles(k + 2, LineRole::data);
  roles.push_back(LineRole::ancilla0);
  return Circuit(roles, expand_ckswap(controls, k, k + 1, k + 2, 0));
}

bool needs_unit_ancilla(const Permutation& p) {
  for (State s : weight_class_members(p.width(), 1)) {
    if (p(s) != s) return true;
  }
  return false;
}

std::vector<ConservativeStage> plan_conservative(const Permutation& p) {
  const unsigned m = p.width();
  weight_decompose(p);  // throws NotConservative
  std::vector<State> image(p.size());
  for (State s = 0; s < image.size(); ++s) image[s] = s;

  std::vector<ConservativeStage> stages;
  for (unsigned k = 1; k < m; ++k) {
    const std::vector<State> members = weight_class_members(m, k);
    std::vector<State> index_of(p.size(), 0);
    for (State i = 0; i < members.size(); ++i) index_of[members[i]] = i;

    // Correction f with f(image(s)) = p(s) on the class, as class indices.
    std::vector<State> f(members.size());
    for (State s : members) f[index_of[image[s]]] = index_of[p(s)];

    ConservativeStage stage{k, {}};
    for (auto [i, j] : table_transpositions(f)) {
      append(stage.gates, synth_transposition(WeightString{m, members[i]},
                                              WeightString{m, members[j]}));
    }
    if (!stage.gates.empty()) {
      run_all(Circuit(std::vector<LineRole>(m, LineRole::data), stage.gates), image);
    }
    stages.push_back(std::move(stage));
  }
  return stages;
}

Circuit synth_conservative(const Permutation& p) {
  const unsigned m = p.width();
  if (m < 3 || m > 12) {
    throw SynthError(ErrorCode::WidthOutOfRange,
                     "conservative synthesis needs width in [3, 12], got " + std::to_string(m));
  }
  const std::vector<ConservativeStage> stages = plan_conservative(p);
  std::vector<LineRole> roles(m, LineRole::data);
  roles.push_back(needs_unit_ancilla(p) ? LineRole::ancilla1 : LineRole::ancilla0);
  Circuit macro(roles);
  for (const ConservativeStage& s : stages) macro.append(s.gates);
  return expand_macros(macro, Alphabet::fred);
}

}  // namespace revsynth
