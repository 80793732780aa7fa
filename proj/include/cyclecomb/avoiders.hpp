#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "cyclecomb/perm.hpp"

namespace cyclecomb {

/// Resource limits threaded through every enumeration call. `threads` > 1
/// partitions the search by first-element value and merges results in
/// partition order, so output order and counts are independent of the thread
/// count. `node_budget` caps visited search-tree nodes per call; exceeding it
/// raises LimitExceeded instead of running unbounded.
struct EnumLimits {
  int threads = 1;
  std::uint64_t node_budget = 2'000'000'000;
};

using PermVisitor = std::function<void(const Permutation&)>;
using PermPredicate = std::function<bool(const Permutation&)>;

/// Visits S_n(sigma) in lexicographic one-line order (serial).
void for_each_avoider(int n, Pattern sigma, const PermVisitor& fn,
                      const EnumLimits& limits = {});

/// Visits C_n(sigma) = S_n(sigma) ∩ C_n in lexicographic order (serial).
void for_each_cyclic_avoider(int n, Pattern sigma, const PermVisitor& fn,
                             const EnumLimits& limits = {});

/// Generation over an explicit value pool with an optional per-position
/// constraint: position i (0-based) may only hold values whose bit is set in
/// allowed[i] (bit v-1 = value v). Visits words in lexicographic order.
/// Used for shape-constrained seed pools.
void for_each_avoider_masked(std::span<const std::uint64_t> allowed,
                             Pattern sigma, const PermVisitor& fn,
                             const EnumLimits& limits = {});

std::vector<Permutation> collect_avoiders(int n, Pattern sigma,
                                          const EnumLimits& limits = {});
std::vector<Permutation> collect_cyclic_avoiders(int n, Pattern sigma,
                                                 const EnumLimits& limits = {});
std::vector<Permutation> collect_cyclic_avoiders_masked(
    std::span<const std::uint64_t> allowed, Pattern sigma,
    const EnumLimits& limits = {});

std::int64_t count_avoiders(int n, Pattern sigma,
                            const EnumLimits& limits = {});
std::int64_t count_cyclic_avoiders(int n, Pattern sigma,
                                   const EnumLimits& limits = {});

/// |{pi in C_n(sigma) : pred(pi)}|. pred must be pure and deterministic.
std::int64_t count_filtered(int n, Pattern sigma, const PermPredicate& pred,
                            const EnumLimits& limits = {});

/// Independent oracle: iterates all n! permutations with std::next_permutation
/// and the cubic containment checker. n <= 10.
std::int64_t brute_force_count(int n, Pattern sigma);

enum class Provenance : std::uint8_t { generated, brute_force, fixture };
std::string_view to_string(Provenance p);

/// Memoized map (pattern, n) -> c_n(sigma). Inserting a conflicting count for
/// an existing key is a hard error (CountMismatch); fixture rows never
/// overwrite generated ones. Not internally synchronized: callers serialize
/// mutation (library internals never touch a table from worker threads).
class CountTable {
 public:
  struct Entry {
    std::int64_t count = 0;
    Provenance provenance = Provenance::generated;
  };
  using Key = std::pair<Pattern, int>;

  std::optional<std::int64_t> lookup(Pattern sigma, int n) const;
  /// Throws MissingCount if absent.
  std::int64_t require(Pattern sigma, int n) const;
  void insert(Pattern sigma, int n, std::int64_t count, Provenance prov);
  const std::map<Key, Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

 private:
  std::map<Key, Entry> entries_;
};

/// c_n(sigma), memoized into `table` with provenance=generated on a miss.
std::int64_t count_cyclic(int n, Pattern sigma, CountTable& table,
                          const EnumLimits& limits = {});

// --- persistence -----------------------------------------------------------

/// CSV round trip, header "pattern,n,count,provenance".
void write_counts_csv(std::ostream& os, const CountTable& table);
CountTable parse_counts_csv(std::istream& is);

/// Loads one OEIS b-file ("index value" per line, # comments allowed) as
/// counts for `sigma` with provenance=fixture. Indices outside [1, kMaxN]
/// are skipped.
void load_bfile(CountTable& table, const std::filesystem::path& file,
                Pattern sigma);

/// Loads a fixture directory: `manifest.json` maps pattern tags to b-file
/// names, e.g. {"123": "b309504.txt", ...}.
void load_fixture_dir(CountTable& table, const std::filesystem::path& dir);

}  // namespace cyclecomb
