#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "cyclecomb/seeds.hpp"

using namespace cyclecomb;

namespace {

std::vector<Permutation> perms(std::initializer_list<const char*> texts) {
  std::vector<Permutation> out;
  for (const char* t : texts) out.push_back(Permutation::parse(t));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::int64_t> ak_sizes(Pattern sigma, int max_k) {
  std::vector<std::int64_t> out;
  for (const auto& row : ak_table(sigma, max_k)) out.push_back(row.a_k);
  return out;
}

}  // namespace

TEST_CASE("312 seed sets match the published small cases") {
  SeedTables t(Pattern::p312);
  CHECK(t.seed(1) == perms({"2 1"}));
  CHECK(t.seed(2) == perms({"3 4 2 1"}));
  CHECK(t.seed(3) == perms({"4 3 5 2 1", "3 5 4 2 1"}));
  CHECK(t.seed(4) == perms({"4 3 6 5 2 1", "5 4 6 3 2 1", "4 6 5 3 2 1"}));
  // 345621 = 3421 * 3421 is buildable, hence excluded
  const auto excluded = Permutation::parse("3 4 5 6 2 1");
  CHECK(std::binary_search(t.pool(4).begin(), t.pool(4).end(), excluded));
  CHECK_FALSE(std::binary_search(t.seed(4).begin(), t.seed(4).end(), excluded));
}

TEST_CASE("312 seed counts k <= 9") {
  CHECK(ak_sizes(Pattern::p312, 9) ==
        std::vector<std::int64_t>{1, 1, 2, 3, 6, 22, 64, 175, 526});
}

TEST_CASE("312 family basics") {
  SeedTables t(Pattern::p312);
  CHECK(t.family(1, 2) == perms({"2 1"}));
  // X_{1,n} is exactly the members of C_n(312) beginning with 2
  for (int n = 3; n <= 8; ++n) {
    std::vector<Permutation> starts_with_2;
    for (const auto& p : t.cyclic_avoiders(n))
      if (p.at(1) == 2) starts_with_2.push_back(p);
    CHECK(t.family(1, n) == starts_with_2);
  }
  CHECK(t.family(1, 4) == perms({"2 3 4 1"}));
  CHECK(t.family(2, 4) == perms({"3 4 2 1"}));
}

TEST_CASE("321 seed sets match the published small cases") {
  SeedTables t(Pattern::p321);
  CHECK(t.seed(1) == perms({"3 1 4 2", "2 3 4 1"}));
  CHECK(t.seed(2) == perms({"3 4 5 1 2", "4 5 1 2 3"}));
  CHECK(t.seed(3).empty());
  CHECK(t.seed(4) == perms({"5 6 7 1 2 3 4", "4 5 6 7 1 2 3"}));
}

TEST_CASE("321 seed counts and overlap column k <= 8") {
  const auto rows = ak_table(Pattern::p321, 8);
  const std::int64_t expect_a[] = {2, 2, 0, 2, 6, 8, 46, 110};
  const std::int64_t expect_overlap[] = {0, 8, 24, 64, 172, 504, 1440, 4336};
  for (int k = 1; k <= 8; ++k) {
    CHECK(rows[k - 1].a_k == expect_a[k - 1]);
    if (k >= 2) CHECK(rows[k - 1].overlap == expect_overlap[k - 1]);
    CHECK_FALSE(rows[k - 1].a_prime.has_value());
  }
}

TEST_CASE("321 membership converse at small n") {
  // agreeing with a seed everywhere outside the replaced pair positions is
  // exactly membership in the seed's family (directly or via the inverse)
  SeedTables t(Pattern::p321);
  for (int k = 2; k <= 4; ++k) {
    if (t.seed(k).empty()) continue;
    for (int n = k + 3; n <= 9; ++n) {
      const auto fam = t.family(k, n);
      std::vector<Permutation> matched;
      for (const auto& gamma : t.cyclic_avoiders(n)) {
        bool matches = false;
        for (const auto& alpha : t.seed(k)) {
          int r = 0, s = 0;
          const int m = alpha.size();
          for (int i = 1; i <= m; ++i) {
            if (alpha.at(i) == m - 1) r = i;
            if (alpha.at(i) == m) s = i;
          }
          auto agrees = [&](const Permutation& g) {
            for (int i = 1; i <= m - 1; ++i) {
              if (i == r || i == s) continue;
              if (g.at(i) != alpha.at(i)) return false;
            }
            return true;
          };
          if (agrees(gamma) || agrees(symmetry(gamma, SymmetryKind::inverse)))
            matches = true;
        }
        if (matches) matched.push_back(gamma);
      }
      CHECK(matched == fam);
    }
  }
}

TEST_CASE("321 families are closed under inverse") {
  SeedTables t(Pattern::p321);
  for (int k = 1; k <= 4; ++k) {
    if (k >= 2 && t.seed(k).empty()) continue;
    for (int n = t.min_family_n(k); n <= 9; ++n) {
      const auto fam = t.family(k, n);
      for (const auto& p : fam)
        CHECK(std::binary_search(fam.begin(), fam.end(),
                                 symmetry(p, SymmetryKind::inverse)));
    }
  }
}

TEST_CASE("123 seed sets match the published small cases") {
  SeedTables t(Pattern::p123);
  CHECK(t.pool(1) == perms({"4 3 1 2", "3 4 2 1"}));
  CHECK(t.seed(1) == t.pool(1));
  CHECK(t.seed(2) ==
        perms({"6 5 4 2 1 3", "4 6 5 2 1 3", "4 6 5 3 2 1", "5 4 6 1 3 2"}));
  CHECK(t.family(1, 6) ==
        perms({"6 5 4 1 3 2", "6 4 5 3 1 2", "6 3 5 1 4 2", "6 4 1 5 3 2",
               "5 6 4 2 3 1", "5 4 6 3 2 1", "5 3 6 2 4 1", "5 4 2 6 3 1"}));
  CHECK(t.family(2, 7) ==
        perms({"7 6 5 2 4 1 3", "5 7 6 2 4 1 3", "5 7 6 3 4 2 1",
               "6 5 7 1 4 3 2", "7 6 4 5 2 1 3", "5 7 4 6 2 1 3",
               "5 7 4 6 3 2 1", "6 5 4 7 1 3 2"}));
}

TEST_CASE("132 seed sets match the published small cases") {
  SeedTables t(Pattern::p132);
  CHECK(t.seed(1) == perms({"4 3 1 2", "3 4 2 1"}));
  CHECK(t.family(1, 6) ==
        perms({"6 5 2 3 1 4", "6 5 4 2 1 3", "6 4 5 3 1 2", "6 3 4 5 1 2",
               "5 6 2 3 4 1", "5 6 4 2 3 1", "5 4 6 3 2 1", "5 3 4 6 2 1"}));
}

TEST_CASE("wrap-pattern tables k <= 4") {
  const auto t123 = ak_table(Pattern::p123, 4);
  const auto t132 = ak_table(Pattern::p132, 4);
  const std::int64_t prime123[] = {2, 8, 44, 296};
  const std::int64_t a123[] = {2, 4, 20, 136};
  const std::int64_t prime132[] = {2, 8, 44, 294};
  const std::int64_t a132[] = {2, 4, 20, 134};
  for (int k = 1; k <= 4; ++k) {
    CHECK(t123[k - 1].a_prime == prime123[k - 1]);
    CHECK(t123[k - 1].a_k == a123[k - 1]);
    CHECK(t132[k - 1].a_prime == prime132[k - 1]);
    CHECK(t132[k - 1].a_k == a132[k - 1]);
  }
  CHECK(t123[3].overlap == 160);
  CHECK(t132[3].overlap == 160);
}

TEST_CASE("serial and parallel builds agree") {
  for (Pattern sigma : {Pattern::p312, Pattern::p321, Pattern::p132}) {
    SeedTables serial(sigma, EnumLimits{1, 2'000'000'000});
    SeedTables parallel(sigma, EnumLimits{4, 2'000'000'000});
    for (int k = 1; k <= 4; ++k) CHECK(serial.seed(k) == parallel.seed(k));
    CHECK(serial.family(2, 8) == parallel.family(2, 8));
  }
}

TEST_CASE("node budget guards seed builds") {
  SeedTables tiny(Pattern::p321, EnumLimits{1, 500});
  CHECK_THROWS_AS(tiny.seed(6), LimitExceeded);
}

TEST_CASE("disjointness reports") {
  CHECK(verify_disjoint(Pattern::p123, 8, 3).passed());
  CHECK(verify_disjoint(Pattern::p321, 8, 4).passed());
  CHECK(verify_disjoint(Pattern::p312, 4, 2).passed());
  CHECK(verify_disjoint(Pattern::p132, 8, 3).passed());
  const auto rep = verify_disjoint(Pattern::p312, 4, 2);
  bool found = false;
  for (const auto& c : rep.checks)
    if (c.name.find("union inside") != std::string::npos) found = true;
  CHECK(found);
}

TEST_CASE("cardinality reports") {
  CountTable table;
  for (Pattern sigma : {Pattern::p312, Pattern::p321, Pattern::p123,
                        Pattern::p132}) {
    for (int n = 6; n <= 9; ++n) {
      const auto rep = verify_cardinalities(sigma, n, 4, table);
      CHECK(rep.passed());
    }
  }
  // spot values: |X_{1,7}|(321) = 2 c_6 = 48; |X_{2,7}|(123) = 4 c_3 = 8
  SeedTables t321(Pattern::p321);
  CHECK(t321.family(1, 7).size() == 48);
  SeedTables t123(Pattern::p123);
  CHECK(t123.family(2, 7).size() == 8);
}

TEST_CASE("ak CSV round trip") {
  const auto rows = ak_table(Pattern::p123, 3);
  std::ostringstream os;
  write_ak_csv(os, Pattern::p123, rows);
  std::istringstream is(os.str());
  const auto back = parse_ak_csv(is);
  REQUIRE(back.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(back[i].first == Pattern::p123);
    CHECK(back[i].second.k == rows[i].k);
    CHECK(back[i].second.a_prime == rows[i].a_prime);
    CHECK(back[i].second.overlap == rows[i].overlap);
    CHECK(back[i].second.a_k == rows[i].a_k);
  }
}
