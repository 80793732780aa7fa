#include "cyclecomb/seeds.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "cyclecomb/compose.hpp"

namespace cyclecomb {

namespace {

void sort_unique(std::vector<Permutation>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool member(const std::vector<Permutation>& sorted, const Permutation& p) {
  return std::binary_search(sorted.begin(), sorted.end(), p);
}

// 2beta: the unique element of C_n(312) starting with 2 whose tail reduces
// to beta; values above 1 shift up by one.
Permutation prepend_two(const Permutation& beta) {
  std::vector<std::uint8_t> out;
  out.reserve(static_cast<std::size_t>(beta.size()) + 1);
  out.push_back(2);
  for (std::uint8_t v : beta.values())
    out.push_back(v == 1 ? std::uint8_t(1) : std::uint8_t(v + 1));
  return PermBuilder::adopt(std::move(out));
}

std::uint64_t range_mask(int lo, int hi) {  // values lo..hi inclusive
  std::uint64_t m = 0;
  for (int v = lo; v <= hi; ++v) m |= 1ull << (v - 1);
  return m;
}

}  // namespace

SeedTables::SeedTables(Pattern sigma, EnumLimits limits)
    : sigma_(sigma), limits_(limits) {}

int SeedTables::seed_length(int k) const {
  switch (sigma_) {
    case Pattern::p312: return k + 2;
    case Pattern::p321: return k + 3;
    default: return 2 * k + 2;
  }
}

int SeedTables::min_family_n(int k) const {
  switch (sigma_) {
    case Pattern::p312: return k == 1 ? 2 : k + 2;
    case Pattern::p321: return k == 1 ? 2 : k + 3;
    default: return 2 * k + 2;
  }
}

const std::vector<Permutation>& SeedTables::cyclic_avoiders(int n) {
  auto it = cyc_.find(n);
  if (it == cyc_.end())
    it = cyc_.emplace(n, collect_cyclic_avoiders(n, sigma_, limits_)).first;
  return it->second;
}

const std::vector<Permutation>& SeedTables::pool(int k) {
  auto it = pools_.find(k);
  if (it == pools_.end()) it = pools_.emplace(k, build_pool(k)).first;
  return it->second;
}

const std::vector<Permutation>& SeedTables::seed(int k) {
  auto it = seeds_.find(k);
  if (it == seeds_.end()) it = seeds_.emplace(k, build_seed(k)).first;
  return it->second;
}

std::vector<Permutation> SeedTables::build_pool(int k) {
  if (k < 1) throw Error("k must be positive");
  const int len = seed_length(k);
  if (len > kMaxN) throw LimitExceeded("seed length exceeds 64");
  switch (sigma_) {
    case Pattern::p312: {
      if (k == 1) return {Permutation::parse("2 1")};
      // alpha = w 2 1 with w a 312-avoiding arrangement of [3, k+2]
      std::vector<std::uint64_t> masks(static_cast<std::size_t>(len),
                                       range_mask(3, k + 2));
      masks[static_cast<std::size_t>(len) - 2] = range_mask(2, 2);
      masks[static_cast<std::size_t>(len) - 1] = range_mask(1, 1);
      return collect_cyclic_avoiders_masked(masks, sigma_, limits_);
    }
    case Pattern::p321: {
      if (k == 1)
        return {Permutation::parse("2 3 4 1"), Permutation::parse("3 1 4 2")};
      return cyclic_avoiders(len);
    }
    default: {
      // A_k': top block [k+2, 2k+2] occupies the first k+1 positions
      std::vector<std::uint64_t> masks(static_cast<std::size_t>(len));
      for (int i = 0; i < len; ++i)
        masks[static_cast<std::size_t>(i)] =
            i <= k ? range_mask(k + 2, 2 * k + 2) : range_mask(1, k + 1);
      return collect_cyclic_avoiders_masked(masks, sigma_, limits_);
    }
  }
}

std::vector<Permutation> SeedTables::build_seed(int k) {
  const auto& candidates = pool(k);
  if (k == 1) return candidates;
  const int len = seed_length(k);
  std::vector<Permutation> excluded;
  for (int j = 1; j < k; ++j) {
    auto fam = family(j, len);
    excluded.insert(excluded.end(), std::make_move_iterator(fam.begin()),
                    std::make_move_iterator(fam.end()));
  }
  sort_unique(excluded);
  std::vector<Permutation> out;
  out.reserve(candidates.size());
  for (const auto& alpha : candidates)
    if (!member(excluded, alpha)) out.push_back(alpha);

  // structural facts the constructions rely on
  for (const auto& alpha : out) {
    switch (sigma_) {
      case Pattern::p312:
        if (alpha.at(len - 1) != 2 || alpha.at(len) != 1)
          throw Error("A_k(312) member does not end in \"2 1\"");
        break;
      case Pattern::p321:
        if (alpha.at(len) == len - 1)
          throw Error("A_k(321) member ends in m-1; it would be 2341-buildable");
        break;
      default:
        break;
    }
  }
  return out;
}

std::vector<Permutation> SeedTables::family(int k, int n) {
  if (n < min_family_n(k) || n > kMaxN)
    throw PreconditionFailed(Violation::length,
                             "X_{" + std::to_string(k) + "," + std::to_string(n) +
                                 "} is not buildable");
  std::vector<Permutation> out;
  switch (sigma_) {
    case Pattern::p312: {
      if (k == 1) {
        for (const auto& beta : cyclic_avoiders(n - 1))
          out.push_back(prepend_two(beta));
      } else {
        const auto& alphas = seed(k);
        const auto& betas = cyclic_avoiders(n - k);
        out.reserve(alphas.size() * betas.size());
        for (const auto& a : alphas)
          for (const auto& b : betas) out.push_back(unchecked::star312(a, b));
      }
      break;
    }
    case Pattern::p321: {
      if (k == 1) {
        for (const auto& pi : cyclic_avoiders(n))
          if (pi.at(1) == 2 || pi.at(2) == 1) out.push_back(pi);
      } else {
        const auto& alphas = seed(k);
        const auto& betas = cyclic_avoiders(n - k);
        for (const auto& a : alphas)
          for (const auto& b : betas) {
            if (b.at(2) == 1) continue;
            Permutation p = unchecked::odot321(a, b);
            out.push_back(symmetry(p, SymmetryKind::inverse));
            out.push_back(std::move(p));
          }
      }
      break;
    }
    default: {
      const auto& alphas = seed(k);
      const auto& betas = cyclic_avoiders(n - 2 * k);
      out.reserve(alphas.size() * betas.size());
      const bool is123 = sigma_ == Pattern::p123;
      for (const auto& a : alphas)
        for (const auto& b : betas)
          out.push_back(is123 ? unchecked::star123(a, b)
                              : unchecked::cstar132(a, b));
      break;
    }
  }
  sort_unique(out);
  return out;
}

AkRow SeedTables::ak_row(int k) {
  AkRow row;
  row.k = k;
  const auto& p = pool(k);
  const auto& s = seed(k);
  if (sigma_ == Pattern::p123 || sigma_ == Pattern::p132)
    row.a_prime = static_cast<std::int64_t>(p.size());
  row.overlap = static_cast<std::int64_t>(p.size() - s.size());
  row.a_k = static_cast<std::int64_t>(s.size());
  return row;
}

std::vector<AkRow> ak_table(Pattern sigma, int max_k, const EnumLimits& limits) {
  SeedTables tables(sigma, limits);
  std::vector<AkRow> rows;
  rows.reserve(static_cast<std::size_t>(max_k));
  for (int k = 1; k <= max_k; ++k) rows.push_back(tables.ak_row(k));
  return rows;
}

void write_ak_csv(std::ostream& os, Pattern sigma,
                  const std::vector<AkRow>& rows) {
  os << "pattern,k,a_prime,overlap,a_k\n";
  for (const auto& r : rows) {
    os << to_string(sigma) << ',' << r.k << ',';
    if (r.a_prime) os << *r.a_prime;
    os << ',' << r.overlap << ',' << r.a_k << '\n';
  }
}

std::vector<std::pair<Pattern, AkRow>> parse_ak_csv(std::istream& is) {
  std::vector<std::pair<Pattern, AkRow>> out;
  std::string line;
  bool header = true;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (header) {
      if (line != "pattern,k,a_prime,overlap,a_k")
        throw ParseError("bad ak CSV header: " + line);
      header = false;
      continue;
    }
    std::istringstream row(line);
    std::string pat, ks, aps, ovs, aks;
    if (!std::getline(row, pat, ',') || !std::getline(row, ks, ',') ||
        !std::getline(row, aps, ',') || !std::getline(row, ovs, ',') ||
        !std::getline(row, aks))
      throw ParseError("bad ak CSV row: " + line);
    AkRow r;
    r.k = std::stoi(ks);
    if (!aps.empty()) r.a_prime = std::stoll(aps);
    r.overlap = std::stoll(ovs);
    r.a_k = std::stoll(aks);
    out.emplace_back(pattern_from_string(pat), r);
  }
  return out;
}

Report verify_disjoint(SeedTables& tables, int n, int max_k) {
  const Pattern sigma = tables.pattern();
  Report report{"disjoint(" + std::string(to_string(sigma)) +
                    ", n=" + std::to_string(n) + ")",
                {}};
  std::vector<std::pair<int, std::vector<Permutation>>> families;
  for (int k = 1; k <= max_k && n >= tables.min_family_n(k); ++k)
    families.emplace_back(k, tables.family(k, n));
  for (std::size_t i = 0; i < families.size(); ++i)
    for (std::size_t j = i + 1; j < families.size(); ++j) {
      std::vector<Permutation> common;
      std::set_intersection(families[i].second.begin(),
                            families[i].second.end(),
                            families[j].second.begin(),
                            families[j].second.end(),
                            std::back_inserter(common));
      report.add("X_{" + std::to_string(families[i].first) + "," +
                     std::to_string(n) + "} ∩ X_{" +
                     std::to_string(families[j].first) + "," +
                     std::to_string(n) + "} empty",
                 common.empty(),
                 common.empty() ? "" : std::to_string(common.size()) +
                                           " shared members");
    }
  const auto& universe = tables.cyclic_avoiders(n);
  std::size_t covered = 0;
  bool contained = true;
  std::vector<Permutation> all;
  for (const auto& [k, fam] : families)
    all.insert(all.end(), fam.begin(), fam.end());
  sort_unique(all);
  covered = all.size();
  for (const auto& p : all)
    if (!member(universe, p)) {
      contained = false;
      break;
    }
  report.add("union inside C_n", contained,
             "covers " + std::to_string(covered) + " of " +
                 std::to_string(universe.size()));
  return report;
}

Report verify_cardinalities(SeedTables& tables, int n, int max_k,
                            CountTable& table) {
  const Pattern sigma = tables.pattern();
  const EnumLimits limits = tables.limits();
  Report report{"cardinalities(" + std::string(to_string(sigma)) +
                    ", n=" + std::to_string(n) + ")",
                {}};
  auto c = [&](int m) { return count_cyclic(m, sigma, table, limits); };
  int deepest = 0;
  for (int k = 1; k <= max_k; ++k) {
    if (n < tables.min_family_n(k)) break;
    deepest = k;
    const auto fam = tables.family(k, n);
    std::int64_t expected = 0;
    switch (sigma) {
      case Pattern::p312:
        expected = (k == 1 ? 1 : std::int64_t(tables.seed(k).size())) * c(n - k);
        break;
      case Pattern::p321:
        expected = k == 1 ? 2 * c(n - 1)
                          : std::int64_t(tables.seed(k).size()) *
                                (2 * c(n - k) - 3 * c(n - k - 1));
        break;
      default:
        expected = std::int64_t(tables.seed(k).size()) * c(n - 2 * k);
        break;
    }
    report.add("|X_{" + std::to_string(k) + "," + std::to_string(n) + "}|",
               std::int64_t(fam.size()) == expected,
               std::to_string(fam.size()) + " vs " + std::to_string(expected));

    if (sigma == Pattern::p321 && k >= 2) {
      // overlap of the direct images with the inverted images
      std::vector<Permutation> direct, inverted;
      for (const auto& a : tables.seed(k))
        for (const auto& b : tables.cyclic_avoiders(n - k)) {
          if (b.at(2) == 1) continue;
          Permutation p = unchecked::odot321(a, b);
          inverted.push_back(symmetry(p, SymmetryKind::inverse));
          direct.push_back(std::move(p));
        }
      sort_unique(direct);
      sort_unique(inverted);
      std::vector<Permutation> common;
      std::set_intersection(direct.begin(), direct.end(), inverted.begin(),
                            inverted.end(), std::back_inserter(common));
      const std::int64_t expect_common =
          std::int64_t(tables.seed(k).size()) * c(n - k - 1);
      report.add("|Y ∩ Z| at k=" + std::to_string(k),
                 std::int64_t(common.size()) == expect_common,
                 std::to_string(common.size()) + " vs " +
                     std::to_string(expect_common));
    }
  }
  if (sigma == Pattern::p123 || sigma == Pattern::p132) {
    for (int k = 2; k <= deepest; ++k) {
      std::int64_t conv = std::int64_t(tables.pool(k).size());
      for (int i = 1; i < k; ++i)
        conv -= std::int64_t(tables.seed(i).size()) *
                std::int64_t(tables.pool(k - i).size());
      report.add("convolution at k=" + std::to_string(k),
                 conv == std::int64_t(tables.seed(k).size()),
                 std::to_string(conv) + " vs " +
                     std::to_string(tables.seed(k).size()));
    }
  }
  return report;
}

Report verify_disjoint(Pattern sigma, int n, int max_k,
                       const EnumLimits& limits) {
  SeedTables tables(sigma, limits);
  return verify_disjoint(tables, n, max_k);
}

Report verify_cardinalities(Pattern sigma, int n, int max_k, CountTable& table,
                            const EnumLimits& limits) {
  SeedTables tables(sigma, limits);
  return verify_cardinalities(tables, n, max_k, table);
}

}  // namespace cyclecomb
