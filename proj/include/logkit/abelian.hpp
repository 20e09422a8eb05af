#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "logkit/presentation.hpp"

namespace logkit {

using Int = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<Int>>;  // rows of equal length

// Nonzero diagonal of the Smith normal form: d1 | d2 | ... | dk, all
// positive; rank is k.  Exact arithmetic, no overflow.
struct SmithForm {
  std::vector<Int> diagonal;
  int rank = 0;
};

SmithForm smith_normal_form(IntMatrix m);

// Invariant-factor decomposition of the abelianized group:
// Z^free_rank x Z_{d1} x ... with d1 | d2 | ..., each di > 1.
struct AbelianInvariants {
  std::vector<Int> torsion;
  int free_rank = 0;

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

// Rows of the relation matrix are the exponent-sum vectors of the relators.
AbelianInvariants abelianization(const Presentation& p);

std::string to_string(const AbelianInvariants& a);  // "Z", "Z_5", "Z x Z_2 x Z_6", "1"

}  // namespace logkit
