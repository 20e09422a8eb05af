#include "logkit/word.hpp"

#include <algorithm>

namespace logkit {

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(Letter{it->gen, -it->sign});
  return out;
}

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (Letter& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(std::move(l));
  }
  return out;
}

Word cyclic_reduce(Word w) {
  w = free_reduce(std::move(w));
  size_t a = 0, b = w.size();
  while (b - a >= 2 && w[a].gen == w[b - 1].gen && w[a].sign == -w[b - 1].sign) {
    ++a;
    --b;
  }
  return Word(w.begin() + static_cast<long>(a), w.begin() + static_cast<long>(b));
}

bool is_cyclically_reduced(const Word& w) { return cyclic_reduce(w) == w; }

Word power_word(const std::string& gen, int n) {
  Word w;
  int sign = n >= 0 ? 1 : -1;
  for (int i = 0; i < std::abs(n); ++i) w.push_back(Letter{gen, sign});
  return w;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += w[i].gen;
    if (w[i].sign < 0) out += "^-1";
  }
  return out;
}

}  // namespace logkit
