#include "logkit/coset_enum.hpp"

#include <algorithm>
#include <deque>

#include <nlohmann/json.hpp>

namespace logkit {

CosetTable::CosetTable(std::vector<std::string> generators, long cosets, TableStatus status)
    : generators_(std::move(generators)), cosets_(cosets), status_(status) {
  data_.assign(static_cast<size_t>(cosets) * static_cast<size_t>(column_count()), -1);
}

namespace {

constexpr long kUndefined = -1;

struct Blocked {};  // coset limit hit while defining

}  // namespace

struct ToddCoxeter::Impl {
  std::vector<std::string> gens;
  int ncols = 0;
  std::vector<std::vector<int>> relators;  // as column sequences
  // Felsch: cyclic rotations of each relator grouped by leading column.
  std::vector<std::vector<std::vector<int>>> anchored;

  EnumerationLimits limits;
  Strategy strategy = Strategy::Hlt;

  std::vector<long> table;   // nrows * ncols; entries may point at dead cosets
  std::vector<long> parent;  // union-find, min representative wins
  long nrows = 0;
  long nlive = 0;
  EnumerationStats st;

  // state machine
  enum class Phase { Scan, Lookahead, Done };
  Phase phase = Phase::Scan;
  Status status = Status::Running;
  long alpha = 0;       // HLT scan pointer / Felsch define cursor
  size_t rel_idx = 0;   // next relator to scan at alpha (HLT)
  bool filling = false; // HLT: alpha's relators done, filling its row
  long la_alpha = 0;    // lookahead pointer
  size_t la_rel = 0;
  std::vector<std::pair<long, int>> deductions;

  explicit Impl(const Presentation& p, EnumerationLimits lim, Strategy strat)
      : gens(p.generators()), limits(lim), strategy(strat) {
    if (limits.max_cosets < 1 || limits.max_steps < 1)
      fail(Errc::invalid_parameter, "enumeration limits must be positive");
    ncols = static_cast<int>(2 * gens.size());
    for (const Word& r : p.relators()) {
      Word w = cyclic_reduce(r);
      if (w.empty()) continue;  // trivial relator, ignored
      std::vector<int> cols;
      for (const Letter& l : w)
        cols.push_back(CosetTable::column(p.generator_index(l.gen), l.sign));
      relators.push_back(std::move(cols));
    }
    if (strategy == Strategy::Felsch) {
      anchored.resize(static_cast<size_t>(ncols));
      for (const auto& r : relators)
        for (size_t s = 0; s < r.size(); ++s) {
          std::vector<int> rot;
          for (size_t i = 0; i < r.size(); ++i) rot.push_back(r[(s + i) % r.size()]);
          anchored[static_cast<size_t>(rot[0])].push_back(std::move(rot));
        }
    }
    new_coset();  // the subgroup coset
  }

  static int inv(int col) { return col ^ 1; }

  long find(long a) {
    while (parent[static_cast<size_t>(a)] != a) {
      parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
      a = parent[static_cast<size_t>(a)];
    }
    return a;
  }
  bool live(long a) { return parent[static_cast<size_t>(a)] == a; }

  long raw(long c, int x) const { return table[static_cast<size_t>(c) * ncols + x]; }
  void put(long c, int x, long v) { table[static_cast<size_t>(c) * ncols + x] = v; }

  // c must be live; returns live coset or kUndefined
  long get(long c, int x) {
    long v = raw(c, x);
    return v < 0 ? kUndefined : find(v);
  }

  long new_coset() {
    if (nlive >= limits.max_cosets) throw Blocked{};
    long id = nrows++;
    table.resize(static_cast<size_t>(nrows) * ncols, kUndefined);
    parent.push_back(id);
    ++nlive;
    ++st.cosets_defined;
    return id;
  }

  void push_deduction(long c, int x) {
    if (strategy == Strategy::Felsch) deductions.emplace_back(c, x);
  }

  // Record the fact u * x = v (u, v live); queue a coincidence if a
  // different image is already present.
  void install(long u, int x, long v, std::deque<std::pair<long, long>>& pend) {
    long eu = get(u, x);
    if (eu == kUndefined) {
      put(u, x, v);
      push_deduction(u, x);
    } else if (eu != v) {
      pend.emplace_back(eu, v);
    }
    long ev = get(v, inv(x));
    if (ev == kUndefined) {
      put(v, inv(x), u);
      push_deduction(v, inv(x));
    } else if (ev != u) {
      pend.emplace_back(ev, u);
    }
  }

  void coincidence(long a, long b) {
    std::deque<std::pair<long, long>> pend{{a, b}};
    coincidence_run(pend);
  }

  void deduce(long u, int x, long v) {
    std::deque<std::pair<long, long>> pend;
    install(u, x, v, pend);
    coincidence_run(pend);
  }

  void coincidence_run(std::deque<std::pair<long, long>>& pend) {
    while (!pend.empty()) {
      auto [x, y] = pend.front();
      pend.pop_front();
      x = find(x);
      y = find(y);
      if (x == y) continue;
      if (x > y) std::swap(x, y);
      parent[static_cast<size_t>(y)] = x;
      --nlive;
      ++st.collapses;
      for (int c = 0; c < ncols; ++c) {
        long d = raw(y, c);
        if (d < 0) continue;
        install(x, c, find(d), pend);
      }
    }
  }

  // Scans relator w from coset c.  In fill mode undefined interior entries
  // spawn new cosets (HLT); otherwise a gap of length one becomes a
  // deduction and longer gaps are left alone.
  void scan(long c, const std::vector<int>& w, bool fill) {
    long f = c, b = c;
    long i = 0, j = static_cast<long>(w.size()) - 1;
    while (true) {
      while (i <= j) {
        long next = get(f, w[static_cast<size_t>(i)]);
        if (next == kUndefined) break;
        f = next;
        ++i;
        ++st.steps;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i) {
        long prev = get(b, inv(w[static_cast<size_t>(j)]));
        if (prev == kUndefined) break;
        b = prev;
        --j;
        ++st.steps;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (j == i) {
        deduce(f, w[static_cast<size_t>(i)], b);
        ++st.steps;
        return;
      }
      if (!fill) return;
      define_at(f, w[static_cast<size_t>(i)]);
    }
  }

  void define_at(long c, int x) {
    long n = new_coset();
    ++st.steps;
    std::deque<std::pair<long, long>> pend;
    install(c, x, n, pend);
    coincidence_run(pend);  // fresh cosets cannot conflict; run is a no-op
  }

  void process_deductions() {
    while (!deductions.empty()) {
      auto [c, x] = deductions.back();
      deductions.pop_back();
      c = find(c);
      if (get(c, x) == kUndefined) continue;
      for (const auto& rot : anchored[static_cast<size_t>(x)]) scan(c, rot, false);
    }
  }

  bool over_steps() const { return st.steps >= limits.max_steps; }

  Status run_hlt(std::uint64_t budget) {
    const std::uint64_t start = st.steps;
    while (true) {
      if (st.steps - start >= budget) return Status::Running;
      if (over_steps()) return finish_exceeded();
      if (phase == Phase::Lookahead) {
        if (la_alpha >= nrows) {
          // pass complete: keep going only if it freed real room
          if (nlive <= limits.max_cosets - limits.max_cosets / 10) {
            phase = Phase::Scan;
          } else {
            return finish_exceeded();
          }
          continue;
        }
        if (!live(la_alpha)) {
          ++la_alpha;
          la_rel = 0;
          continue;
        }
        if (la_rel >= relators.size()) {
          ++la_alpha;
          la_rel = 0;
          continue;
        }
        scan(la_alpha, relators[la_rel], false);
        ++la_rel;
        continue;
      }
      // Scan phase
      if (alpha >= nrows) return finish_closed();
      if (!live(alpha)) {
        ++alpha;
        rel_idx = 0;
        filling = false;
        continue;
      }
      try {
        if (!filling) {
          if (rel_idx < relators.size()) {
            scan(alpha, relators[rel_idx], true);
            ++rel_idx;
          } else {
            filling = true;
          }
          continue;
        }
        // complete the row so every coset eventually appears in a column
        int gap = first_gap(alpha);
        if (gap < 0) {
          ++alpha;
          rel_idx = 0;
          filling = false;
        } else {
          define_at(alpha, gap);  // one definition per unit keeps budgets honest
        }
      } catch (const Blocked&) {
        phase = Phase::Lookahead;
        la_alpha = 0;
        la_rel = 0;
      }
    }
  }

  Status run_felsch(std::uint64_t budget) {
    const std::uint64_t start = st.steps;
    while (true) {
      if (st.steps - start >= budget) return Status::Running;
      if (over_steps()) return finish_exceeded();
      // entries are never cleared, so the cursor only moves forward
      while (alpha < nrows && (!live(alpha) || first_gap(alpha) < 0)) {
        ++alpha;
      }
      if (alpha >= nrows) return finish_closed();
      int x = first_gap(alpha);
      try {
        define_at(alpha, x);
        process_deductions();
      } catch (const Blocked&) {
        return finish_exceeded();
      }
    }
  }

  int first_gap(long c) {
    for (int x = 0; x < ncols; ++x)
      if (get(c, x) == kUndefined) return x;
    return -1;
  }

  Status finish_closed() {
    phase = Phase::Done;
    status = Status::Closed;
    return status;
  }
  Status finish_exceeded() {
    phase = Phase::Done;
    status = Status::Exceeded;
    return status;
  }

  CosetTable compact() {
    std::vector<long> remap(static_cast<size_t>(nrows), -1);
    long next = 0;
    for (long c = 0; c < nrows; ++c)
      if (live(c)) remap[static_cast<size_t>(c)] = next++;
    CosetTable t(gens, next, TableStatus::Closed);
    for (long c = 0; c < nrows; ++c) {
      if (!live(c)) continue;
      for (int x = 0; x < ncols; ++x) {
        long v = get(c, x);
        t.set_entry(remap[static_cast<size_t>(c)], x,
                    v < 0 ? -1 : remap[static_cast<size_t>(v)]);
      }
    }
    return t;
  }
};

ToddCoxeter::ToddCoxeter(const Presentation& p, EnumerationLimits limits, Strategy strategy)
    : impl_(std::make_unique<Impl>(p, limits, strategy)) {}
ToddCoxeter::~ToddCoxeter() = default;
ToddCoxeter::ToddCoxeter(ToddCoxeter&&) noexcept = default;
ToddCoxeter& ToddCoxeter::operator=(ToddCoxeter&&) noexcept = default;

ToddCoxeter::Status ToddCoxeter::advance(std::uint64_t step_budget) {
  if (impl_->status != Status::Running) return impl_->status;
  if (impl_->ncols == 0) return impl_->finish_closed();  // no generators: trivial group
  return impl_->strategy == Strategy::Hlt ? impl_->run_hlt(step_budget)
                                          : impl_->run_felsch(step_budget);
}

ToddCoxeter::Status ToddCoxeter::status() const { return impl_->status; }
const EnumerationStats& ToddCoxeter::stats() const { return impl_->st; }

EnumerationResult ToddCoxeter::result() const {
  EnumerationResult r;
  r.stats = impl_->st;
  if (impl_->status == Status::Closed) {
    r.outcome = EnumerationResult::Outcome::Finite;
    r.order = impl_->nlive;
    r.table = impl_->compact();
  } else {
    r.outcome = EnumerationResult::Outcome::Exceeded;
  }
  return r;
}

EnumerationResult todd_coxeter(const Presentation& p, EnumerationLimits limits,
                               Strategy strategy) {
  ToddCoxeter tc(p, limits, strategy);
  while (tc.advance(1u << 22) == ToddCoxeter::Status::Running) {
  }
  return tc.result();
}

TableCheck verify_table(const CosetTable& t, const Presentation& p) {
  if (t.status() != TableStatus::Closed)
    fail(Errc::table_not_closed, "verification requires a closed table");
  TableCheck out;
  const long n = t.coset_count();
  for (int x = 0; x < t.column_count(); ++x) {
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (long c = 0; c < n; ++c) {
      long v = t.entry(c, x);
      if (v < 0 || v >= n) {
        out.ok = false;
        out.witness = "column " + std::to_string(x) + " undefined at coset " + std::to_string(c);
        return out;
      }
      if (seen[static_cast<size_t>(v)]) {
        out.ok = false;
        out.witness = "column " + std::to_string(x) + " is not injective at coset " +
                      std::to_string(c);
        return out;
      }
      seen[static_cast<size_t>(v)] = 1;
    }
  }
  // columns must be mutually inverse
  for (int g = 0; g < static_cast<int>(t.generators().size()); ++g)
    for (long c = 0; c < n; ++c)
      if (t.entry(t.entry(c, 2 * g), 2 * g + 1) != c) {
        out.ok = false;
        out.witness = "columns for generator " + t.generators()[static_cast<size_t>(g)] +
                      " are not mutually inverse at coset " + std::to_string(c);
        return out;
      }
  for (size_t ri = 0; ri < p.relators().size(); ++ri) {
    Word w = cyclic_reduce(p.relators()[ri]);
    std::vector<int> cols;
    for (const Letter& l : w) cols.push_back(CosetTable::column(p.generator_index(l.gen), l.sign));
    for (long c = 0; c < n; ++c) {
      long cur = c;
      for (int x : cols) cur = t.entry(cur, x);
      if (cur != c) {
        out.ok = false;
        out.witness = "relator " + std::to_string(ri) + " does not fix coset " + std::to_string(c);
        return out;
      }
    }
  }
  return out;
}

std::string dump_plain(const CosetTable& t) {
  std::string out = "coset";
  for (const std::string& g : t.generators()) out += "\t" + g + "\t" + g + "^-1";
  out += "\n";
  for (long c = 0; c < t.coset_count(); ++c) {
    out += std::to_string(c);
    for (int x = 0; x < t.column_count(); ++x) out += "\t" + std::to_string(t.entry(c, x));
    out += "\n";
  }
  return out;
}

nlohmann::json to_json(const CosetTable& t) {
  nlohmann::json cols = nlohmann::json::array();
  for (const std::string& g : t.generators()) {
    cols.push_back(g);
    cols.push_back(g + "^-1");
  }
  nlohmann::json rows = nlohmann::json::array();
  for (long c = 0; c < t.coset_count(); ++c) {
    nlohmann::json row = nlohmann::json::array();
    for (int x = 0; x < t.column_count(); ++x) row.push_back(t.entry(c, x));
    rows.push_back(row);
  }
  return {{"cosets", t.coset_count()}, {"columns", cols}, {"rows", rows}};
}

}  // namespace logkit
