#include "logkit/presentation.hpp"

#include <sstream>

namespace logkit {

Presentation::Presentation(std::vector<std::string> generators, std::vector<Word> relators)
    : generators_(std::move(generators)), relators_(std::move(relators)) {
  for (size_t i = 0; i < generators_.size(); ++i) {
    if (!index_.emplace(generators_[i], static_cast<int>(i)).second)
      fail(Errc::duplicate_vertex, "duplicate generator name: " + generators_[i]);
  }
  for (const Word& r : relators_)
    for (const Letter& l : r)
      if (!index_.count(l.gen))
        fail(Errc::unknown_generator, "relator uses unknown generator " + l.gen);
}

int Presentation::generator_index(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

Presentation log_presentation(const LabeledOrientedGraph& g) {
  std::vector<Word> relators;
  for (const Edge& e : g.edges())
    relators.push_back(Word{pos(e.source), pos(e.label), neg(e.target), neg(e.label)});
  return Presentation(g.vertices(), std::move(relators));
}

Presentation with_power(const Presentation& p, const std::string& x, int n) {
  if (p.generator_index(x) < 0) fail(Errc::unknown_generator, "unknown generator " + x);
  if (n < 1) fail(Errc::invalid_exponent, "power exponent must be >= 1");
  std::vector<Word> relators = p.relators();
  relators.push_back(power_word(x, n));
  return Presentation(p.generators(), std::move(relators));
}

Presentation braid_quotient(int m, int n) {
  if (m < 2) fail(Errc::invalid_parameter, "braid group needs m >= 2 strands");
  if (n < 1) fail(Errc::invalid_exponent, "power exponent must be >= 1");
  std::vector<std::string> gens;
  for (int i = 1; i < m; ++i) gens.push_back("s" + std::to_string(i));
  std::vector<Word> relators;
  for (int i = 0; i + 1 < m - 1; ++i) {
    // s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}
    relators.push_back(Word{pos(gens[i]), pos(gens[i + 1]), pos(gens[i]), neg(gens[i + 1]),
                            neg(gens[i]), neg(gens[i + 1])});
  }
  for (int i = 0; i < m - 1; ++i)
    for (int j = i + 2; j < m - 1; ++j)
      relators.push_back(Word{pos(gens[i]), pos(gens[j]), neg(gens[i]), neg(gens[j])});
  relators.push_back(power_word(gens[0], n));
  return Presentation(std::move(gens), std::move(relators));
}

std::string to_plain(const Presentation& p) {
  std::string out = "gen:";
  for (const std::string& g : p.generators()) out += " " + g;
  out += "\n";
  for (const Word& r : p.relators()) out += "rel: " + to_string(r) + "\n";
  return out;
}

namespace {

std::string algebra_word(const Presentation& p, const Word& w) {
  if (w.empty()) return "One(F)";
  std::string out;
  size_t i = 0;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j].gen == w[i].gen && w[j].sign == w[i].sign) ++j;
    int e = static_cast<int>(j - i) * w[i].sign;
    if (!out.empty()) out += "*";
    out += "F." + std::to_string(p.generator_index(w[i].gen) + 1);
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

}  // namespace

std::string to_algebra(const Presentation& p) {
  std::ostringstream out;
  out << "F := FreeGroup( ";
  for (size_t i = 0; i < p.generators().size(); ++i) {
    if (i) out << ", ";
    out << '"' << p.generators()[i] << '"';
  }
  out << " );;\n";
  out << "G := F / [ ";
  for (size_t i = 0; i < p.relators().size(); ++i) {
    if (i) out << ", ";
    out << algebra_word(p, p.relators()[i]);
  }
  out << " ];;\n";
  return out.str();
}

}  // namespace logkit
