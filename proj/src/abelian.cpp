#include "logkit/abelian.hpp"

#include <algorithm>

namespace logkit {

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

SmithForm smith_normal_form(IntMatrix m) {
  SmithForm out;
  if (m.empty() || m[0].empty()) return out;
  const size_t rows = m.size(), cols = m[0].size();

  size_t t = 0;
  while (t < rows && t < cols) {
    // Pivot: nonzero entry of minimal absolute value in the remaining block.
    size_t pr = t, pc = t;
    Int best = 0;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 && (best == 0 || abs_int(m[i][j]) < best)) {
          best = abs_int(m[i][j]);
          pr = i;
          pc = j;
        }
    if (best == 0) break;
    std::swap(m[t], m[pr]);
    for (size_t i = t; i < rows; ++i) std::swap(m[i][t], m[i][pc]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        Int q = m[i][t] / m[t][t];
        for (size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) {  // remainder is smaller; make it the pivot
          std::swap(m[t], m[i]);
          clean = false;
        }
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        Int q = m[t][j] / m[t][t];
        for (size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          for (size_t i = t; i < rows; ++i) std::swap(m[i][t], m[i][j]);
          clean = false;
        }
      }
      if (!clean) continue;
      // Pivot must divide every entry of the remaining block.
      for (size_t i = t + 1; i < rows && clean; ++i)
        for (size_t j = t + 1; j < cols && clean; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (size_t jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
            clean = false;
          }
    }
    if (m[t][t] < 0) m[t][t] = -m[t][t];
    ++t;
  }
  for (size_t i = 0; i < t; ++i) out.diagonal.push_back(m[i][i]);
  out.rank = static_cast<int>(t);
  return out;
}

AbelianInvariants abelianization(const Presentation& p) {
  const size_t gens = p.generators().size();
  IntMatrix m;
  for (const Word& r : p.relators()) {
    std::vector<Int> row(gens, 0);
    for (const Letter& l : r) row[static_cast<size_t>(p.generator_index(l.gen))] += l.sign;
    m.push_back(std::move(row));
  }
  AbelianInvariants out;
  if (gens == 0) return out;
  SmithForm s = m.empty() ? SmithForm{} : smith_normal_form(std::move(m));
  for (const Int& d : s.diagonal)
    if (d > 1) out.torsion.push_back(d);
  out.free_rank = static_cast<int>(gens) - s.rank;
  return out;
}

std::string to_string(const AbelianInvariants& a) {
  std::vector<std::string> parts;
  for (int i = 0; i < a.free_rank; ++i) parts.push_back("Z");
  for (const Int& d : a.torsion) parts.push_back("Z_" + d.str());
  if (parts.empty()) return "1";
  std::string out = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) out += " x " + parts[i];
  return out;
}

}  // namespace logkit
