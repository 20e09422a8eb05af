#pragma once

#include <string>
#include <vector>

namespace logkit {

struct Letter {
  std::string gen;
  int sign = 1;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

inline Letter pos(std::string g) { return Letter{std::move(g), 1}; }
inline Letter neg(std::string g) { return Letter{std::move(g), -1}; }

Word inverse(const Word& w);
Word free_reduce(Word w);
Word cyclic_reduce(Word w);  // free reduction plus cancellation across the wrap
bool is_cyclically_reduced(const Word& w);
Word power_word(const std::string& gen, int n);  // g^n, n may be negative

// "a b c^-1 b^-1"; the empty word prints as "1".
std::string to_string(const Word& w);

}  // namespace logkit
