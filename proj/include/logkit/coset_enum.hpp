#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "logkit/presentation.hpp"

namespace logkit {

enum class Strategy { Hlt, Felsch };

struct EnumerationLimits {
  long max_cosets = 100000;
  std::uint64_t max_steps = 2'000'000'000;  // table accesses during scans
};

struct EnumerationStats {
  long cosets_defined = 0;
  long collapses = 0;
  std::uint64_t steps = 0;
};

enum class TableStatus { Closed, Exceeded };

// Permutation action of the generators on cosets.  Columns come in pairs:
// column 2g is generator g, column 2g+1 its inverse.  Coset 0 is the
// subgroup coset.  Entries of -1 are undefined (only in non-closed tables).
class CosetTable {
 public:
  CosetTable() = default;
  CosetTable(std::vector<std::string> generators, long cosets, TableStatus status);

  long coset_count() const { return cosets_; }
  int column_count() const { return static_cast<int>(2 * generators_.size()); }
  const std::vector<std::string>& generators() const { return generators_; }
  TableStatus status() const { return status_; }

  long entry(long coset, int column) const {
    return data_[static_cast<size_t>(coset) * static_cast<size_t>(column_count()) +
                 static_cast<size_t>(column)];
  }
  void set_entry(long coset, int column, long value) {  // exposed for audits
    data_[static_cast<size_t>(coset) * static_cast<size_t>(column_count()) +
          static_cast<size_t>(column)] = value;
  }

  static int column(int gen, int sign) { return 2 * gen + (sign > 0 ? 0 : 1); }

 private:
  std::vector<std::string> generators_;
  long cosets_ = 0;
  TableStatus status_ = TableStatus::Exceeded;
  std::vector<long> data_;
};

struct EnumerationResult {
  enum class Outcome { Finite, Exceeded };
  Outcome outcome = Outcome::Exceeded;
  long order = 0;     // meaningful when Finite
  CosetTable table;   // closed and compacted when Finite
  EnumerationStats stats;

  bool finite() const { return outcome == Outcome::Finite; }
};

// One enumeration instance; single-threaded, resumable by step budget.
class ToddCoxeter {
 public:
  ToddCoxeter(const Presentation& p, EnumerationLimits limits = {},
              Strategy strategy = Strategy::Hlt);
  ~ToddCoxeter();
  ToddCoxeter(ToddCoxeter&&) noexcept;
  ToddCoxeter& operator=(ToddCoxeter&&) noexcept;

  enum class Status { Running, Closed, Exceeded };

  // Runs until the table closes, a limit trips, or `step_budget` more table
  // accesses have been consumed.  Splitting a budget across calls reaches
  // the same state as one large call.
  Status advance(std::uint64_t step_budget);
  Status status() const;
  const EnumerationStats& stats() const;

  // Valid once status() is Closed or Exceeded.
  EnumerationResult result() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

EnumerationResult todd_coxeter(const Presentation& p, EnumerationLimits limits = {},
                               Strategy strategy = Strategy::Hlt);

struct TableCheck {
  bool ok = true;
  std::string witness;  // first failure, empty when ok
};

// Independent certification: every column a bijection on cosets and every
// relator tracing to the identity from every coset.
TableCheck verify_table(const CosetTable& t, const Presentation& p);

std::string dump_plain(const CosetTable& t);
nlohmann::json to_json(const CosetTable& t);

}  // namespace logkit
