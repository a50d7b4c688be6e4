#include "revsynth/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "revsynth/analysis.hpp"
#include "revsynth/error.hpp"
#include "revsynth/even_synth.hpp"
#include "revsynth/fredkin_synth.hpp"
#include "revsynth/simulate.hpp"
#include "revsynth/toffoli_synth.hpp"

namespace revsynth {

namespace {

struct SynthArgs {
  std::string spec;
  bool general = false;
  bool even = false;
  bool conservative = false;
};

struct VerifyArgs {
  std::string netlist;
  std::string spec;
};

struct AnalyzeArgs {
  std::string gate = "ckswap";
  std::string perm;
  unsigned k = 0;
  unsigned m = 0;
  unsigned n = 0;
  unsigned gate_width = 3;
  unsigned samples = 100;
};

struct SampleArgs {
  unsigned width = 3;
  std::string kind = "any";
};

std::string backend_error(ErrorCode code, const std::string& what) {
  switch (code) {
    case ErrorCode::NotConservative: return "permutation is not conservative: " + what;
    default: return what;
  }
}

int emit_report(SynthesisReport r, bool json, std::ostream& out) {
  out << (json ? format_report_json(r) : format_report(r));
  return r.pass ? kExitOk : kExitVerifyFailed;
}

int cmd_synth(const SynthArgs& a, const std::string& out_path, bool json,
              std::ostream& out) {
  const Permutation p = load_permutation(a.spec);
  Circuit c(0);
  std::string backend;
  if (a.even) {
    backend = "even";
    c = synth_even(p);
  } else if (a.conservative) {
    backend = "conservative";
    c = synth_conservative(p);
  } else {
    backend = "general";
    c = synth_general(p);
  }
  SynthesisReport r = verify_realizes(c, p);
  r.backend = backend;
  if (out_path.empty()) {
    write_netlist(out, c);
  } else {
    save_netlist(out_path, c);
  }
  return emit_report(r, json, out);
}

int cmd_verify(const VerifyArgs& a, bool json, std::ostream& out) {
  const Circuit c = load_netlist(a.netlist);
  const Permutation p = load_permutation(a.spec);
  return emit_report(verify_realizes(c, p), json, out);
}

Permutation named_gate(const AnalyzeArgs& a) {
  if (!a.perm.empty()) return load_permutation(a.perm);
  if (a.gate == "identity") return Permutation::identity(a.m);
  if (a.gate == "swap") return embedded_ckswap(0, a.m);
  if (a.gate == "cswap") return embedded_ckswap(1, a.m);
  if (a.gate == "ckswap") return embedded_ckswap(a.k, a.m);
  throw SynthError(ErrorCode::RangeError, "unknown gate '" + a.gate + "'");
}

int cmd_parity_vector(const AnalyzeArgs& a, bool json, std::ostream& out) {
  const ParityVector v = parity_vector(named_gate(a));
  if (json) {
    out << nlohmann::ordered_json{{"width", v.width}, {"parity_vector", v.entries}}.dump()
        << '\n';
  } else {
    out << v.str() << '\n';
  }
  return kExitOk;
}

int cmd_independence(const AnalyzeArgs& a, bool json, std::ostream& out) {
  const IndependenceResult r = independence_check(a.k, a.m);
  if (json) {
    nlohmann::ordered_json j;
    j["k"] = a.k;
    j["m"] = a.m;
    j["verdict"] = r.independent ? "independent" : "dependent";
    if (r.independent) {
      j["failing_coordinate"] = r.failing_coordinate;
      j["witness"] = r.witness;
    } else {
      j["coefficients"] = r.coefficients;
    }
    out << j.dump() << '\n';
    return kExitOk;
  }
  out << (r.independent ? "independent" : "dependent") << '\n';
  if (r.independent) {
    out << "failing_coordinate: " << r.failing_coordinate << '\n' << "witness:";
    for (unsigned w : r.witness) out << ' ' << w;
    out << '\n';
  } else {
    out << "coefficients:";
    for (auto c : r.coefficients) out << ' ' << static_cast<unsigned>(c);
    out << '\n';
  }
  return kExitOk;
}

int cmd_embedded_parity(const AnalyzeArgs& a, std::uint64_t seed, bool json,
                        std::ostream& out) {
  if (a.n < a.gate_width) {
    throw SynthError(ErrorCode::RangeError, "--n must be at least the gate width");
  }
  std::size_t odd = 0;
  for (unsigned i = 0; i < a.samples; ++i) {
    const Permutation g = sample_permutation(a.gate_width, PermKind::any, seed + i);
    if (embedded_parity(g, a.n) == Parity::odd) ++odd;
  }
  if (json) {
    out << nlohmann::ordered_json{{"n", a.n}, {"gate_width", a.gate_width},
                                  {"samples", a.samples}, {"odd", odd}}
               .dump()
        << '\n';
  } else if (odd == 0) {
    out << "all even\n";
  } else {
    out << odd << " of " << a.samples << " odd\n";
  }
  return kExitOk;
}

int cmd_sample(const SampleArgs& a, std::uint64_t seed, const std::string& out_path,
               std::ostream& out) {
  PermKind kind = PermKind::any;
  if (a.kind == "even") kind = PermKind::even;
  if (a.kind == "conservative") kind = PermKind::conservative;
  const Permutation p = sample_permutation(a.width, kind, seed);
  if (out_path.empty()) {
    write_permutation(out, p);
  } else {
    std::ofstream f(out_path);
    if (!f) throw SynthError(ErrorCode::ParseError, "cannot write " + out_path);
    write_permutation(f, p);
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Reversible circuit synthesis over VTOF and FRED gates", "revsynth"};
  app.require_subcommand(1);

  bool json = false;
  std::uint64_t seed = 1;
  std::string out_path;

  SynthArgs sa;
  auto* synth = app.add_subcommand("synth", "synthesize a netlist and verify it");
  synth->add_option("spec", sa.spec, "permutation file")->required()->check(CLI::ExistingFile);
  auto* backends = synth->add_option_group("backend");
  backends->add_flag("--general", sa.general, "VTOF, one borrowed line");
  backends->add_flag("--even", sa.even, "VTOF, no extra lines (even permutations)");
  backends->add_flag("--conservative", sa.conservative, "FRED, one ancilla line");
  backends->require_option(1);
  synth->add_option("--out", out_path, "netlist output path (default: standard output)");
  synth->add_flag("--json", json, "JSON report");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "check a netlist against a permutation");
  verify->add_option("netlist", va.netlist)->required()->check(CLI::ExistingFile);
  verify->add_option("spec", va.spec)->required()->check(CLI::ExistingFile);
  verify->add_flag("--json", json, "JSON report");

  AnalyzeArgs aa;
  auto* analyze = app.add_subcommand("analyze", "parity analysis");
  analyze->require_subcommand(1);
  auto* pv = analyze->add_subcommand("parity-vector", "per-weight-class parities");
  pv->add_option("--gate", aa.gate, "identity, swap, cswap or ckswap")
      ->check(CLI::IsMember({"identity", "swap", "cswap", "ckswap"}));
  pv->add_option("--perm", aa.perm, "conservative permutation file instead of --gate")
      ->check(CLI::ExistingFile);
  pv->add_option("--k", aa.k, "control count for ckswap");
  pv->add_option("--m", aa.m, "line count");
  pv->add_flag("--json", json);
  auto* ind = analyze->add_subcommand("independence", "C^kSWAP parity vs lower C^iSWAP");
  ind->add_option("--k", aa.k)->required();
  ind->add_option("--m", aa.m)->required();
  ind->add_flag("--json", json);
  auto* ep = analyze->add_subcommand("embedded-parity", "parity of sampled gates on more lines");
  ep->add_option("--n", aa.n)->required();
  ep->add_option("--gate-width", aa.gate_width)->check(CLI::Range(1u, 16u));
  ep->add_option("--samples", aa.samples);
  ep->add_option("--seed", seed);
  ep->add_flag("--json", json);

  SampleArgs sma;
  auto* sample = app.add_subcommand("sample", "seeded random permutation");
  sample->add_option("--width", sma.width)->required()->check(CLI::Range(1u, 16u));
  sample->add_option("--kind", sma.kind)->check(CLI::IsMember({"any", "even", "conservative"}));
  sample->add_option("--seed", seed);
  sample->add_option("--out", out_path);

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (synth->parsed()) return cmd_synth(sa, out_path, json, out);
    if (verify->parsed()) return cmd_verify(va, json, out);
    if (pv->parsed()) return cmd_parity_vector(aa, json, out);
    if (ind->parsed()) return cmd_independence(aa, json, out);
    if (ep->parsed()) return cmd_embedded_parity(aa, seed, json, out);
    if (sample->parsed()) return cmd_sample(sma, seed, out_path, out);
  } catch (const SynthError& e) {
    err << "error: " << backend_error(e.code(), e.what()) << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace revsynth
