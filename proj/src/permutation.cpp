#include "revsynth/permutation.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "revsynth/error.hpp"

namespace revsynth {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::InvalidGate: return "InvalidGate";
    case ErrorCode::NotConservative: return "NotConservative";
    case ErrorCode::WidthMismatch: return "WidthMismatch";
    case ErrorCode::WidthOutOfRange: return "WidthOutOfRange";
    case ErrorCode::UnexpandableMacro: return "UnexpandableMacro";
    case ErrorCode::InsufficientLines: return "InsufficientLines";
    case ErrorCode::OddPermutation: return "OddPermutation";
    case ErrorCode::OddTokenCount: return "OddTokenCount";
    case ErrorCode::WeightMismatch: return "WeightMismatch";
    case ErrorCode::EqualStrings: return "EqualStrings";
    case ErrorCode::DepthLimit: return "DepthLimit";
    case ErrorCode::RangeError: return "RangeError";
  }
  return "?";
}

const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

const char* to_string(Token t) {
  switch (t) {
    case Token::T1: return "T1";
    case Token::T2: return "T2";
    case Token::T1p: return "T1'";
    case Token::T2p: return "T2'";
  }
  return "?";
}

Permutation::Permutation(unsigned width, std::vector<State> map)
    : width_(width), map_(std::move(map)) {
  if (width < 1 || width > kMaxWidth) {
    throw SynthError(ErrorCode::WidthOutOfRange,
                     "permutation width must be in [1, 16], got " +
                         std::to_string(width));
  }
  if (map_.size() != (std::size_t{1} << width)) {
    throw SynthError(ErrorCode::InvalidPermutation,
                     "permutation of width " + std::to_string(width) +
                         " needs " + std::to_string(1u << width) +
                         " entries, got " + std::to_string(map_.size()));
  }
  std::vector<bool> seen(map_.size(), false);
  for (State v : map_) {
    if (v >= map_.size() || seen[v]) {
      throw SynthError(ErrorCode::InvalidPermutation,
                       "map is not a bijection (value " + std::to_string(v) +
                           ")");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(unsigned width) {
  std::vector<State> map(std::size_t{1} << width);
  std::iota(map.begin(), map.end(), State{0});
  return Permutation(width, std::move(map));
}

Permutation Permutation::inverse() const {
  std::vector<State> inv(map_.size());
  for (State x = 0; x < map_.size(); ++x) inv[map_[x]] = x;
  return Permutation(width_, std::move(inv));
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.width_ != width_) {
    throw SynthError(ErrorCode::WidthMismatch, "composing permutations of different widths");
  }
  std::vector<State> out(map_.size());
  for (State x = 0; x < map_.size(); ++x) out[x] = next.map_[map_[x]];
  return Permutation(width_, std::move(out));
}

bool Permutation::is_identity() const {
  for (State x = 0; x < map_.size(); ++x) {
    if (map_[x] != x) return false;
  }
  return true;
}

Parity table_parity(std::span<const State> table) {
  // n - (number of cycles) transpositions.
  std::vector<bool> visited(table.size(), false);
  std::size_t cycles = 0;
  for (std::size_t start = 0; start < table.size(); ++start) {
    if (visited[start]) continue;
    ++cycles;
    for (std::size_t x = start; !visited[x]; x = table[x]) visited[x] = true;
  }
  return (table.size() - cycles) % 2 == 0 ? Parity::even : Parity::odd;
}

Parity parity(const Permutation& p) { return table_parity(p.map()); }

std::vector<Transposition> table_transpositions(std::span<const State> table) {
  // Peel p with swaps applied after it until the identity remains:
  // s_r ... s_1 p = id, hence p = s_1 ... s_r and the left-to-right order is
  // s_r first.
  std::vector<State> image(table.begin(), table.end());
  std::vector<State> preimage(table.size());
  for (State x = 0; x < image.size(); ++x) preimage[image[x]] = x;

  std::vector<Transposition> peeled;
  for (State x = 0; x < image.size(); ++x) {
    const State y = image[x];
    if (y == x) continue;
    // Swap the values x and y in the image.
    const State z = preimage[x];
    image[x] = x;
    image[z] = y;
    preimage[x] = x;
    preimage[y] = z;
    peeled.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::reverse(peeled.begin(), peeled.end());
  return peeled;
}

std::vector<Transposition> to_transpositions(const Permutation& p) {
  return table_transpositions(p.map());
}

Permutation compose_transpositions(unsigned width,
                                   std::span<const Transposition> swaps) {
  std::vector<State> map(std::size_t{1} << width);
  std::iota(map.begin(), map.end(), State{0});
  for (const auto& [i, j] : swaps) {
    for (State& v : map) {
      if (v == i) {
        v = j;
      } else if (v == j) {
        v = i;
      }
    }
  }
  return Permutation(width, std::move(map));
}

unsigned hamming_weight(State x) { return static_cast<unsigned>(std::popcount(x)); }

std::vector<State> weight_class_members(unsigned m, unsigned k) {
  std::vector<State> members;
  for (State x = 0; x < (State{1} << m); ++x) {
    if (hamming_weight(x) == k) members.push_back(x);
  }
  return members;
}

bool is_conservative(const Permutation& p) {
  for (State x = 0; x < p.size(); ++x) {
    if (hamming_weight(p(x)) != hamming_weight(x)) return false;
  }
  return true;
}

WeightClassDecomposition weight_decompose(const Permutation& p) {
  const unsigned m = p.width();
  for (State x = 0; x < p.size(); ++x) {
    if (hamming_weight(p(x)) != hamming_weight(x)) {
      throw SynthError(ErrorCode::NotConservative,
                       "permutation is not conservative: it maps " +
                           std::to_string(x) + " (weight " +
                           std::to_string(hamming_weight(x)) + ") to " +
                           std::to_string(p(x)) + " (weight " +
                           std::to_string(hamming_weight(p(x))) + ")");
    }
  }
  // Index of every string inside its class.
  std::vector<State> index(p.size());
  std::vector<State> next(m + 1, 0);
  for (State x = 0; x < p.size(); ++x) index[x] = next[hamming_weight(x)]++;

  WeightClassDecomposition d;
  d.width = m;
  d.classes.resize(m + 1);
  for (unsigned k = 0; k <= m; ++k) d.classes[k].resize(next[k]);
  for (State x = 0; x < p.size(); ++x) {
    d.classes[hamming_weight(x)][index[x]] = index[p(x)];
  }
  return d;
}

Permutation recompose(const WeightClassDecomposition& d) {
  const unsigned m = d.width;
  std::vector<std::vector<State>> members(m + 1);
  for (unsigned k = 0; k <= m; ++k) members[k] = weight_class_members(m, k);
  std::vector<State> map(std::size_t{1} << m);
  for (unsigned k = 0; k <= m; ++k) {
    if (d.classes[k].size() != members[k].size()) {
      throw SynthError(ErrorCode::InvalidPermutation,
                       "weight class " + std::to_string(k) + " has wrong size");
    }
    for (std::size_t i = 0; i < members[k].size(); ++i) {
      map[members[k][i]] = members[k][d.classes[k][i]];
    }
  }
  return Permutation(m, std::move(map));
}

Permutation token_permutation(Token t, unsigned width) {
  const State n = State{1} << width;
  std::vector<State> map(n);
  for (State x = 0; x < n; ++x) {
    switch (t) {
      case Token::T1: map[x] = x < 2 ? 1 - x : x; break;
      case Token::T1p: map[x] = x >= n - 2 ? (2 * n - 3) - x : x; break;
      case Token::T2:
      case Token::T2p: map[x] = (x + 1) % n; break;
    }
  }
  return Permutation(width, std::move(map));
}

std::vector<Token> decompose_generators(const Permutation& p,
                                        GeneratorVariant variant) {
  const State n = static_cast<State>(p.size());
  const bool primed = variant == GeneratorVariant::primed;
  const Token swap_tok = primed ? Token::T1p : Token::T1;
  const Token shift_tok = primed ? Token::T2p : Token::T2;

  std::vector<Token> out;
  auto adjacent_swap = [&](State a) {
    // Shift a onto the generator's swap position, swap, shift back; the two
    // shifts always sum to 2^n.
    const State lead = primed ? (n - 2 - a) % n : n - a;
    out.insert(out.end(), lead, shift_tok);
    out.push_back(swap_tok);
    out.insert(out.end(), n - lead, shift_tok);
  };

  for (const auto& [i, j] : to_transpositions(p)) {
    // (i j) = (i,i+1)(i+1,i+2)...(j-1,j)(j-2,j-1)...(i,i+1)
    for (State a = i; a < j; ++a) adjacent_swap(a);
    for (State a = j - 1; a-- > i;) adjacent_swap(a);
  }
  return out;
}

Permutation compose_tokens(unsigned width, std::span<const Token> tokens) {
  const State n = State{1} << width;
  // Track where every element currently sits; tokens act on positions.
  std::vector<State> map(n);
  std::iota(map.begin(), map.end(), State{0});
  for (Token t : tokens) {
    for (State& v : map) {
      switch (t) {
        case Token::T1: if (v < 2) v = 1 - v; break;
        case Token::T1p: if (v >= n - 2) v = (2 * n - 3) - v; break;
        case Token::T2:
        case Token::T2p: v = (v + 1) % n; break;
      }
    }
  }
  return Permutation(width, std::move(map));
}

Permutation sample_permutation(unsigned width, PermKind kind,
                               std::uint64_t seed) {
  if (width < 1 || width > kMaxWidth) {
    throw SynthError(ErrorCode::WidthOutOfRange, "sample width must be in [1, 16]");
  }
  std::mt19937_64 rng(seed);
  const State n = State{1} << width;
  std::vector<State> map(n);
  std::iota(map.begin(), map.end(), State{0});

  if (kind == PermKind::conservative) {
    for (unsigned k = 0; k <= width; ++k) {
      const auto members = weight_class_members(width, k);
      auto images = members;
      std::shuffle(images.begin(), images.end(), rng);
      for (std::size_t i = 0; i < members.size(); ++i) map[members[i]] = images[i];
    }
    return Permutation(width, std::move(map));
  }

  std::shuffle(map.begin(), map.end(), rng);
  if (kind == PermKind::even && table_parity(map) == Parity::odd) {
    std::swap(map[0], map[1]);
  }
  return Permutation(width, std::move(map));
}

// ---------------------------------------------------------------------------
// Text formats

namespace {

std::string bits_string(State x, unsigned width) {
  std::string s(width, '0');
  for (unsigned i = 0; i < width; ++i) {
    if ((x >> (width - 1 - i)) & 1u) s[i] = '1';
  }
  return s;
}

[[noreturn]] void parse_fail(const std::string& what) {
  throw SynthError(ErrorCode::ParseError, "permutation: " + what);
}

State parse_bits(const std::string& tok) {
  State v = 0;
  for (char c : tok) {
    if (c != '0' && c != '1') parse_fail("bad bit string '" + tok + "'");
    v = (v << 1) | static_cast<State>(c - '0');
  }
  return v;
}

}  // namespace

void write_permutation(std::ostream& out, const Permutation& p) {
  out << "perm " << p.width() << '\n';
  for (State x = 0; x < p.size(); ++x) {
    out << p(x) << (x + 1 == p.size() || (x + 1) % 16 == 0 ? '\n' : ' ');
  }
}

void write_truth_table(std::ostream& out, const Permutation& p) {
  for (State x = 0; x < p.size(); ++x) {
    out << bits_string(x, p.width()) << ' ' << bits_string(p(x), p.width()) << '\n';
  }
}

Permutation read_permutation(std::istream& in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
  }
  if (tokens.empty()) parse_fail("empty input");

  if (tokens[0] == "perm") {
    if (tokens.size() < 2) parse_fail("missing width after 'perm'");
    unsigned width = 0;
    try {
      width = static_cast<unsigned>(std::stoul(tokens[1]));
    } catch (const std::exception&) {
      parse_fail("bad width '" + tokens[1] + "'");
    }
    if (width < 1 || width > kMaxWidth) parse_fail("width out of range");
    const std::size_t n = std::size_t{1} << width;
    if (tokens.size() != n + 2) {
      parse_fail("expected " + std::to_string(n) + " entries, got " +
                 std::to_string(tokens.size() - 2));
    }
    std::vector<State> map(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::string& t = tokens[i + 2];
      if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos) {
        parse_fail("bad entry '" + t + "'");
      }
      map[i] = static_cast<State>(std::stoul(t));
    }
    return Permutation(width, std::move(map));
  }

  // Truth table: pairs of equal-length bit strings.
  const unsigned width = static_cast<unsigned>(tokens[0].size());
  if (width < 1 || width > kMaxWidth) parse_fail("truth-table width out of range");
  const std::size_t n = std::size_t{1} << width;
  if (tokens.size() != 2 * n) {
    parse_fail("truth table needs " + std::to_string(n) + " rows");
  }
  std::vector<State> map(n);
  std::vector<bool> seen(n, false);
  for (std::size_t r = 0; r < n; ++r) {
    const std::string& a = tokens[2 * r];
    const std::string& b = tokens[2 * r + 1];
    if (a.size() != width || b.size() != width) parse_fail("ragged truth table");
    const State in_v = parse_bits(a);
    if (seen[in_v]) parse_fail("duplicate input row " + a);
    seen[in_v] = true;
    map[in_v] = parse_bits(b);
  }
  return Permutation(width, std::move(map));
}

Permutation load_permutation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SynthError(ErrorCode::ParseError, "cannot open " + path);
  return read_permutation(in);
}

}  // namespace revsynth
