#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cyclecomb/avoiders.hpp"
#include "cyclecomb/perm.hpp"
#include "cyclecomb/report.hpp"

namespace cyclecomb {

/// One row of the seed-count table: |A_k'| (absent for 312/321), the number
/// of pool candidates removed because they are buildable from smaller seeds,
/// and |A_k|.
struct AkRow {
  int k = 0;
  std::optional<std::int64_t> a_prime;
  std::int64_t overlap = 0;
  std::int64_t a_k = 0;
};

/// Seed sets A_k and the derived families X_{k,n} for one pattern, with all
/// intermediate C_n(sigma) sets cached. Sets are kept as lexicographically
/// sorted vectors, so rebuilding with any thread count yields identical
/// results.
///
/// Per pattern:
///   312: pool(k) = {alpha in C_{k+2}(312) : alpha ends in "2 1"}, base
///        A_1 = {21}; X_{1,n} prepends a 2 to each member of C_{n-1}(312),
///        X_{k,n} = A_k * C_{n-k}(312).
///   321: pool(k) = C_{k+3}(321), base A_1 = {2341, 3142};
///        X_{1,n} = {pi : pi_1 = 2 or pi_2 = 1}, and for k >= 2
///        X_{k,n} = {alpha ⊙ beta and its inverse : beta_2 != 1}.
///   123/132: pool(k) = A_k' = {alpha in C_{2k+2} : top block in front};
///        X_{k,n} = A_k (★ or ⊛) C_{n-2k}.
/// A_k = pool(k) minus the union of X_{j, seed_length(k)} over j < k.
class SeedTables {
 public:
  explicit SeedTables(Pattern sigma, EnumLimits limits = {});

  Pattern pattern() const { return sigma_; }
  const EnumLimits& limits() const { return limits_; }

  /// Length of A_k members: k+2 (312), k+3 (321), 2k+2 (123/132).
  int seed_length(int k) const;
  /// Smallest n for which X_{k,n} is buildable.
  int min_family_n(int k) const;

  const std::vector<Permutation>& cyclic_avoiders(int n);
  const std::vector<Permutation>& pool(int k);
  const std::vector<Permutation>& seed(int k);  // A_k

  /// X_{k,n}, sorted; throws PreconditionFailed when n < min_family_n(k).
  std::vector<Permutation> family(int k, int n);

  AkRow ak_row(int k);

 private:
  std::vector<Permutation> build_pool(int k);
  std::vector<Permutation> build_seed(int k);

  Pattern sigma_;
  EnumLimits limits_;
  std::map<int, std::vector<Permutation>> cyc_;
  std::map<int, std::vector<Permutation>> pools_;
  std::map<int, std::vector<Permutation>> seeds_;
};

std::vector<AkRow> ak_table(Pattern sigma, int max_k,
                            const EnumLimits& limits = {});

/// CSV round trip for ak rows, header "pattern,k,a_prime,overlap,a_k"
/// (a_prime empty for 312/321).
void write_ak_csv(std::ostream& os, Pattern sigma,
                  const std::vector<AkRow>& rows);
std::vector<std::pair<Pattern, AkRow>> parse_ak_csv(std::istream& is);

/// Pairwise emptiness of X_{i,n} ∩ X_{j,n} for i < j <= max_k, and
/// containment of the union in C_n(sigma). The SeedTables overloads reuse
/// the caller's caches across calls.
Report verify_disjoint(SeedTables& tables, int n, int max_k);
Report verify_disjoint(Pattern sigma, int n, int max_k,
                       const EnumLimits& limits = {});

/// Checks every family-size formula by comparing explicit set sizes against
/// the closed forms: |X_{k,n}| = |A_k| c_{n-k} (312),
/// |A_k| (2c_{n-k} - 3c_{n-k-1}) with |Y ∩ Z| = |A_k| c_{n-k-1} (321),
/// |A_k| c_{n-2k} (123/132), plus the convolution
/// |A_k| = |A_k'| - sum |A_i||A_{k-i}'| for the wrap patterns. Depth is
/// additionally capped at the families buildable at this n.
Report verify_cardinalities(SeedTables& tables, int n, int max_k,
                            CountTable& table);
Report verify_cardinalities(Pattern sigma, int n, int max_k, CountTable& table,
                            const EnumLimits& limits = {});

}  // namespace cyclecomb
