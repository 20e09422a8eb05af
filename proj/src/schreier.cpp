#include <algorithm>
#include <optional>
#include <set>
#include <unordered_set>

#include "logkit/presentation.hpp"

namespace logkit {

namespace {

// Eliminate a generator using relator `rel` of length 1 or 2, rewriting all
// other relators.  Returns the substituted relator list without `rel`.
struct Elimination {
  std::string gen;
  Word value;  // the word the generator equals
};

// Pick which generator a short relator eliminates, preferring to keep
// earlier-ordered generators.
std::optional<Elimination> elimination_of(const Word& r,
                                          const std::vector<std::string>& order) {
  auto rank = [&](const std::string& g) {
    return std::find(order.begin(), order.end(), g) - order.begin();
  };
  if (r.size() == 1) return Elimination{r[0].gen, {}};
  if (r.size() == 2) {
    if (r[0].gen == r[1].gen) return std::nullopt;  // g^2 or freely trivial
    // r = x y = 1, so x = y^-1 and y = x^-1; drop the later generator.
    const Letter &x = r[0], &y = r[1];
    if (rank(x.gen) > rank(y.gen)) {
      Word v{Letter{y.gen, -y.sign}};
      if (x.sign < 0) v = inverse(v);
      return Elimination{x.gen, v};
    }
    Word v{Letter{x.gen, -x.sign}};
    if (y.sign < 0) v = inverse(v);
    return Elimination{y.gen, v};
  }
  return std::nullopt;
}

Word substitute(const Word& w, const Elimination& e) {
  Word out;
  for (const Letter& l : w) {
    if (l.gen != e.gen) {
      out.push_back(l);
      continue;
    }
    const Word& v = l.sign > 0 ? e.value : inverse(e.value);
    out.insert(out.end(), v.begin(), v.end());
  }
  return free_reduce(std::move(out));
}

}  // namespace

Presentation reidemeister_schreier_kernel(const Presentation& p, int n) {
  if (n < 2) fail(Errc::invalid_parameter, "kernel index must be >= 2");
  if (p.generators().empty())
    fail(Errc::not_in_kernel_map, "presentation has no generators to map onto Z_n");
  for (const Word& r : p.relators()) {
    long long sum = 0;
    for (const Letter& l : r) sum += l.sign;
    if (((sum % n) + n) % n != 0)
      fail(Errc::not_in_kernel_map,
           "relator " + to_string(r) + " has exponent sum not divisible by " + std::to_string(n));
  }

  const std::string& x0 = p.generators()[0];
  const int k = static_cast<int>(p.generators().size());

  // Schreier generator for (coset i, generator g); the generators x0^i x0
  // x0^{-(i+1)} for i < n-1 are freely trivial and are skipped.
  std::vector<std::string> sub_gens;
  std::unordered_set<std::string> used;
  std::vector<std::vector<int>> gen_of(static_cast<size_t>(n), std::vector<int>(k, -1));
  for (int i = 0; i < n; ++i) {
    for (int gi = 0; gi < k; ++gi) {
      const std::string& g = p.generators()[static_cast<size_t>(gi)];
      if (g == x0 && i < n - 1) continue;
      std::string name = g + "_" + std::to_string(i);
      while (used.count(name)) name += "'";
      used.insert(name);
      gen_of[static_cast<size_t>(i)][static_cast<size_t>(gi)] =
          static_cast<int>(sub_gens.size());
      sub_gens.push_back(name);
    }
  }

  // Rewrite x0^i r x0^{-i} over the Schreier generators.
  std::vector<Word> sub_rels;
  for (int i = 0; i < n; ++i) {
    for (const Word& r : p.relators()) {
      Word out;
      int coset = i;
      for (const Letter& l : r) {
        int gi = p.generator_index(l.gen);
        if (l.sign > 0) {
          int s = gen_of[static_cast<size_t>(coset)][static_cast<size_t>(gi)];
          if (s >= 0) out.push_back(pos(sub_gens[static_cast<size_t>(s)]));
          coset = (coset + 1) % n;
        } else {
          coset = (coset + n - 1) % n;
          int s = gen_of[static_cast<size_t>(coset)][static_cast<size_t>(gi)];
          if (s >= 0) out.push_back(neg(sub_gens[static_cast<size_t>(s)]));
        }
      }
      sub_rels.push_back(free_reduce(std::move(out)));
    }
  }

  // Bounded Tietze simplification.
  std::vector<std::string> gens = sub_gens;
  std::vector<Word> rels = std::move(sub_rels);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Word& r : rels) r = cyclic_reduce(std::move(r));
    std::erase_if(rels, [](const Word& r) { return r.empty(); });
    std::set<std::vector<std::pair<std::string, int>>> seen;
    std::erase_if(rels, [&](const Word& r) {
      std::vector<std::pair<std::string, int>> key;
      for (const Letter& l : r) key.emplace_back(l.gen, l.sign);
      return !seen.insert(key).second;
    });
    for (size_t i = 0; i < rels.size(); ++i) {
      if (auto e = elimination_of(rels[i], gens)) {
        rels.erase(rels.begin() + static_cast<long>(i));
        for (Word& r : rels) r = substitute(r, *e);
        std::erase(gens, e->gen);
        changed = true;
        break;
      }
    }
  }
  return Presentation(std::move(gens), std::move(rels));
}

}  // namespace logkit
