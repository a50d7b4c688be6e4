#include "revsynth/expand.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "revsynth/error.hpp"
#include "revsynth/fredkin_synth.hpp"
#include "revsynth/toffoli_synth.hpp"

namespace revsynth {

namespace {

int role_rank(LineRole r) {
  switch (r) {
    case LineRole::data: return 0;
    case LineRole::borrowed: return 1;
    case LineRole::ancilla0:
    case LineRole::ancilla1: return 2;
  }
  return 3;
}

std::vector<Line> free_lines(const Circuit& c, const Gate& g) {
  std::vector<Line> out;
  for (Line l = 0; l < c.width(); ++l) {
    if (std::find(g.lines.begin(), g.lines.end(), l) == g.lines.end()) {
      out.push_back(l);
    }
  }
  std::stable_sort(out.begin(), out.end(), [&](Line a, Line b) {
    return role_rank(c.role(a)) < role_rank(c.role(b));
  });
  return out;
}

void expand_cknot(const Circuit& c, const Gate& g, Fragment& out) {
  const std::vector<Line> helpers = free_lines(c, g);
  const Fragment f = synth_cknot(g.controls(), g.lines.back(), helpers);
  out.insert(out.end(), f.begin(), f.end());
}

void expand_ckswap_gate(const Circuit& c, const Gate& g, Fragment& out) {
  const auto controls = g.controls();
  const Line t1 = g.lines[g.lines.size() - 2];
  const Line t2 = g.lines.back();
  if (controls.size() == 1) {
    out.push_back(Gate::fred(controls[0], t1, t2));
    return;
  }
  for (Line l : free_lines(c, g)) {
    if (!is_ancilla(c.role(l))) continue;
    const unsigned value = c.role(l) == LineRole::ancilla1 ? 1 : 0;
    if (controls.empty() && value == 0) continue;
    const Fragment f = expand_ckswap(controls, t1, t2, l, value);
    out.insert(out.end(), f.begin(), f.end());
    return;
  }
  throw SynthError(ErrorCode::InsufficientLines,
                   "C^" + std::to_string(controls.size()) +
                       "SWAP over FRED needs a free ancilla line" +
                       (controls.empty() ? " held at 1" : ""));
}

}  // namespace

Circuit expand_macros(const Circuit& c, Alphabet alphabet) {
  Fragment out;
  out.reserve(c.gates().size());
  for (const Gate& g : c.gates()) {
    switch (g.kind) {
      case GateKind::VTOF:
        if (alphabet != Alphabet::vtof) {
          throw SynthError(ErrorCode::UnexpandableMacro, "VTOF gate in a FRED netlist");
        }
        out.push_back(g);
        break;
      case GateKind::FRED:
        if (alphabet != Alphabet::fred) {
          throw SynthError(ErrorCode::UnexpandableMacro, "FRED gate in a VTOF netlist");
        }
        out.push_back(g);
        break;
      case GateKind::CKNOT:
        if (alphabet != Alphabet::vtof) {
          throw SynthError(ErrorCode::UnexpandableMacro,
                           "CKNOT does not preserve Hamming weight and cannot be "
                           "built from FRED");
        }
        expand_cknot(c, g, out);
        break;
      case GateKind::CKSWAP:
        if (alphabet != Alphabet::fred) {
          throw SynthError(ErrorCode::UnexpandableMacro,
                           "CKSWAP expands only to FRED");
        }
        expand_ckswap_gate(c, g, out);
        break;
    }
  }
  return Circuit(std::vector<LineRole>(c.roles().begin(), c.roles().end()), std::move(out));
}

}  // namespace revsynth
