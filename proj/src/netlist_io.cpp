#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "revsynth/circuit.hpp"
#include "revsynth/error.hpp"

namespace revsynth {

namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw SynthError(ErrorCode::ParseError,
                   "netlist line " + std::to_string(line_no) + ": " + what);
}

unsigned parse_uint(const std::string& tok, std::size_t line_no) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
    fail(line_no, "expected a non-negative integer, got '" + tok + "'");
  }
  return static_cast<unsigned>(std::stoul(tok));
}

}  // namespace

void write_netlist(std::ostream& out, const Circuit& c) {
  out << "lines " << c.width() << '\n';
  for (Line l = 0; l < c.width(); ++l) {
    out << "role " << l + 1 << ' ' << to_string(c.role(l)) << '\n';
  }
  for (const Gate& g : c.gates()) {
    out << to_string(g.kind);
    if (g.kind == GateKind::CKNOT || g.kind == GateKind::CKSWAP) {
      out << ' ' << g.control_count();
    }
    for (Line l : g.lines) out << ' ' << l + 1;
    out << '\n';
  }
}

Circuit read_netlist(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<unsigned> width;
  std::vector<LineRole> roles;
  std::vector<bool> role_set;
  std::vector<std::pair<Gate, std::size_t>> gates;

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    const std::string& kw = tok[0];
    if (kw == "lines") {
      if (width) fail(line_no, "duplicate 'lines' header");
      if (tok.size() != 2) fail(line_no, "'lines' takes one argument");
      width = parse_uint(tok[1], line_no);
      if (*width == 0 || *width > 32) fail(line_no, "width must be in [1, 32]");
      roles.assign(*width, LineRole::data);
      role_set.assign(*width, false);
      continue;
    }
    if (!width) fail(line_no, "missing 'lines <w>' header");

    if (kw == "role") {
      if (tok.size() != 3) fail(line_no, "'role' takes an index and a role");
      const unsigned idx = parse_uint(tok[1], line_no);
      if (idx < 1 || idx > *width) fail(line_no, "role index out of range");
      LineRole r;
      if (tok[2] == "data") {
        r = LineRole::data;
      } else if (tok[2] == "ancilla0") {
        r = LineRole::ancilla0;
      } else if (tok[2] == "ancilla1") {
        r = LineRole::ancilla1;
      } else if (tok[2] == "borrowed") {
        r = LineRole::borrowed;
      } else {
        fail(line_no, "unknown role '" + tok[2] + "'");
      }
      if (role_set[idx - 1]) fail(line_no, "duplicate role for line " + tok[1]);
      roles[idx - 1] = r;
      role_set[idx - 1] = true;
      continue;
    }

    std::vector<Line> lines;
    auto read_lines = [&](std::size_t from, std::size_t expected) {
      if (tok.size() != from + expected) {
        fail(line_no, kw + " expects " + std::to_string(expected) + " line indices");
      }
      for (std::size_t i = from; i < tok.size(); ++i) {
        const unsigned v = parse_uint(tok[i], line_no);
        if (v < 1) fail(line_no, "line indices are 1-based");
        lines.push_back(v - 1);
      }
    };

    GateKind kind;
    if (kw == "VTOF" || kw == "FRED") {
      kind = kw == "VTOF" ? GateKind::VTOF : GateKind::FRED;
      read_lines(1, 3);
    } else if (kw == "CKNOT" || kw == "CKSWAP") {
      kind = kw == "CKNOT" ? GateKind::CKNOT : GateKind::CKSWAP;
      if (tok.size() < 2) fail(line_no, kw + " needs a control count");
      const unsigned k = parse_uint(tok[1], line_no);
      read_lines(2, k + (kind == GateKind::CKNOT ? 1 : 2));
    } else {
      fail(line_no, "unknown keyword '" + kw + "'");
    }
    gates.emplace_back(Gate{kind, std::move(lines)}, line_no);
  }

  if (!width) throw SynthError(ErrorCode::ParseError, "netlist: missing 'lines <w>' header");
  for (unsigned l = 0; l < *width; ++l) {
    if (!role_set[l]) {
      throw SynthError(ErrorCode::ParseError,
                       "netlist: no role declared for line " + std::to_string(l + 1));
    }
  }
  Circuit c(std::move(roles));
  for (auto& [g, no] : gates) {
    try {
      c.append(std::move(g));
    } catch (const SynthError& e) {
      fail(no, e.what());
    }
  }
  return c;
}

Circuit load_netlist(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SynthError(ErrorCode::ParseError, "cannot open " + path);
  return read_netlist(in);
}

void save_netlist(const std::string& path, const Circuit& c) {
  std::ofstream out(path);
  if (!out) throw SynthError(ErrorCode::ParseError, "cannot write " + path);
  write_netlist(out, c);
}

}  // namespace revsynth
