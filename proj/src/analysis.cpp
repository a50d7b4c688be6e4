#include "revsynth/analysis.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "revsynth/error.hpp"

namespace revsynth {

ParityVector ParityVector::operator^(const ParityVector& o) const {
  if (width != o.width) throw SynthError(ErrorCode::WidthMismatch, "parity vectors differ in width");
  ParityVector r{width, entries};
  for (std::size_t i = 0; i < r.entries.size(); ++i) r.entries[i] ^= o.entries[i];
  return r;
}

std::string ParityVector::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out << ' ';
    out << static_cast<unsigned>(entries[i]);
  }
  return out.str();
}

ParityVector parity_vector(const Permutation& p) {
  const WeightClassDecomposition d = weight_decompose(p);
  ParityVector v{p.width(), {}};
  for (const auto& cls : d.classes) {
    v.entries.push_back(table_parity(cls) == Parity::odd ? 1 : 0);
  }
  return v;
}

ParityVector ckswap_parity_formula(unsigned k, unsigned m) {
  if (m < 2 || k > m - 2) {
    throw SynthError(ErrorCode::RangeError,
                     "C^kSWAP on m lines needs k <= m-2 (k=" + std::to_string(k) +
                         ", m=" + std::to_string(m) + ")");
  }
  ParityVector v{m, std::vector<std::uint8_t>(m + 1, 0)};
  // Class i moves C(m-2-k, i-k-1) pairs.
  for (unsigned i = k + 1; i <= m - 1; ++i) {
    v.entries[i] = static_cast<std::uint8_t>(binomial_mod2(m - 2 - k, i - k - 1));
  }
  return v;
}

Permutation embedded_ckswap(unsigned k, unsigned m) {
  if (m < 2 || k > m - 2) {
    throw SynthError(ErrorCode::RangeError, "C^kSWAP does not fit on m lines");
  }
  const State size = State{1} << m;
  std::vector<State> map(size);
  const auto bit = [m](unsigned line) { return State{1} << (m - 1 - line); };
  State controls = 0;
  for (unsigned l = 0; l < k; ++l) controls |= bit(l);
  const State a = bit(k), b = bit(k + 1);
  for (State s = 0; s < size; ++s) {
    const bool fire = (s & controls) == controls && ((s & a) != 0) != ((s & b) != 0);
    map[s] = fire ? s ^ a ^ b : s;
  }
  return Permutation(m, std::move(map));
}

Permutation embed_gate(const Permutation& g, unsigned n) {
  const unsigned k = g.width();
  if (n < k) throw SynthError(ErrorCode::RangeError, "cannot embed a gate into fewer lines");
  const unsigned rest = n - k;
  const State low = (State{1} << rest) - 1;
  std::vector<State> map(std::size_t{1} << n);
  for (State s = 0; s < map.size(); ++s) map[s] = (g(s >> rest) << rest) | (s & low);
  return Permutation(n, std::move(map));
}

IndependenceResult independence_check(unsigned k, unsigned m) {
  if (k < 1 || m < 3 || k > m - 2) {
    throw SynthError(ErrorCode::RangeError,
                     "independence check needs 1 <= k <= m-2 (k=" + std::to_string(k) +
                         ", m=" + std::to_string(m) + ")");
  }
  // Coordinates as rows: row j is [p_{s_0}[j] .. p_{s_{k-1}}[j] | p_{s_k}[j]].
  // Rows are added one at a time and reduced against the pivots seen so far;
  // a row reducing to 0 | 1 is the certificate.
  std::vector<ParityVector> basis;
  for (unsigned i = 0; i < k; ++i) basis.push_back(ckswap_parity_formula(i, m));
  const ParityVector target = ckswap_parity_formula(k, m);

  struct Row {
    std::vector<std::uint8_t> coeff;
    std::uint8_t rhs;
    std::vector<unsigned> coords;  // original coordinates summed into this row
  };
  std::vector<Row> pivots;   // pivots[c] has its leading 1 in column c, if present
  std::vector<bool> has_pivot(k, false);
  pivots.resize(k);

  for (unsigned j = 0; j <= m; ++j) {
    Row r{std::vector<std::uint8_t>(k), target.entries[j], {j}};
    for (unsigned i = 0; i < k; ++i) r.coeff[i] = basis[i].entries[j];
    for (unsigned c = 0; c < k; ++c) {
      if (!r.coeff[c] || !has_pivot[c]) continue;
      const Row& pv = pivots[c];
      for (unsigned i = 0; i < k; ++i) r.coeff[i] ^= pv.coeff[i];
      r.rhs ^= pv.rhs;
      for (unsigned x : pv.coords) {
        auto it = std::find(r.coords.begin(), r.coords.end(), x);
        if (it == r.coords.end()) {
          r.coords.push_back(x);
        } else {
          r.coords.erase(it);
        }
      }
    }
    unsigned lead = k;
    for (unsigned c = 0; c < k; ++c) {
      if (r.coeff[c]) {
        lead = c;
        break;
      }
    }
    if (lead == k) {
      if (r.rhs) {
        IndependenceResult res;
        res.independent = true;
        res.failing_coordinate = j;
        std::sort(r.coords.begin(), r.coords.end());
        res.witness = r.coords;
        return res;
      }
      continue;
    }
    // Clear the new pivot column from the other pivot rows.
    for (unsigned c = 0; c < k; ++c) {
      if (!has_pivot[c] || !pivots[c].coeff[lead]) continue;
      Row& pv = pivots[c];
      for (unsigned i = 0; i < k; ++i) pv.coeff[i] ^= r.coeff[i];
      pv.rhs ^= r.rhs;
      for (unsigned x : r.coords) {
        auto it = std::find(pv.coords.begin(), pv.coords.end(), x);
        if (it == pv.coords.end()) {
          pv.coords.push_back(x);
        } else {
          pv.coords.erase(it);
        }
      }
    }
    pivots[lead] = std::move(r);
    has_pivot[lead] = true;
  }

  // Consistent system: read off a solution from the reduced pivots.
  IndependenceResult res;
  res.independent = false;
  res.coefficients.assign(k, 0);
  for (unsigned c = 0; c < k; ++c) {
    if (has_pivot[c]) res.coefficients[c] = pivots[c].rhs;
  }
  return res;
}

Parity embedded_parity(const Permutation& g, unsigned n) {
  return parity(embed_gate(g, n));
}

}  // namespace revsynth
