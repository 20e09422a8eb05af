#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "logkit/error.hpp"
#include "logkit/log_graph.hpp"
#include "logkit/word.hpp"

namespace logkit {

// Generators and relator words.  Relators are stored exactly as given;
// free/cyclic reduction happens where an algorithm needs it.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::vector<std::string> generators, std::vector<Word> relators);

  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }
  int generator_index(const std::string& name) const;

 private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
  std::unordered_map<std::string, int> index_;
};

// One generator per vertex, one relator a b c^-1 b^-1 per edge (a|b|c).
Presentation log_presentation(const LabeledOrientedGraph& g);

// p with the extra relator x^n appended.
Presentation with_power(const Presentation& p, const std::string& x, int n);

// Artin presentation of the braid group on m strands with the extra relator
// s1^n.  Generators are named s1..s{m-1}.
Presentation braid_quotient(int m, int n);

// `gen: ...` / `rel: ...` lines.
std::string to_plain(const Presentation& p);

// GAP-compatible script; generators are referred to positionally (F.1, F.2,
// ...) so arbitrary names survive as strings.
std::string to_algebra(const Presentation& p);

// Presentation of the kernel of the homomorphism onto Z_n sending every
// generator to 1, computed by Reidemeister-Schreier rewriting over the
// transversal {g0^0, ..., g0^{n-1}} on the first generator, followed by
// bounded Tietze simplification (free/cyclic reduction, removal of empty and
// duplicate relators, elimination via relators of length <= 2).
Presentation reidemeister_schreier_kernel(const Presentation& p, int n);

}  // namespace logkit
