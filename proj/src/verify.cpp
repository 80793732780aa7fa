#include "cyclecomb/verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "cyclecomb/bounds.hpp"
#include "cyclecomb/compose.hpp"
#include "cyclecomb/dyck.hpp"
#include "cyclecomb/seeds.hpp"

namespace cyclecomb {

namespace {

// c_n(sigma) for n = 2..13, columns 123,132,213,231,312,321.
constexpr std::int64_t kGolden[12][6] = {
    {1, 1, 1, 1, 1, 1},
    {2, 2, 2, 1, 1, 2},
    {4, 4, 4, 2, 2, 4},
    {10, 10, 10, 5, 5, 10},
    {24, 24, 24, 12, 12, 24},
    {68, 68, 68, 30, 30, 66},
    {188, 182, 182, 86, 86, 178},
    {586, 544, 544, 253, 253, 512},
    {1722, 1574, 1574, 748, 748, 1486},
    {5492, 4888, 4888, 2274, 2274, 4446},
    {16924, 14864, 14864, 7152, 7152, 13468},
    {55582, 47610, 47610, 22890, 22890, 41648},
};

constexpr std::int64_t kA312[] = {1,    1,    2,     3,     6,     22,
                                  64,   175,  526,   1726,  5612,  18231,
                                  59932};
constexpr std::int64_t kA321[] = {2, 2, 0, 2, 6, 8, 46, 110, 296, 1136, 3230};
constexpr std::int64_t kSum321[] = {0,    8,    24,    64,    172,   504,
                                    1440, 4336, 13172, 40512, 126948};
constexpr std::int64_t kPrime123[] = {2, 8, 44, 296, 2252, 18874, 169860};
constexpr std::int64_t kAk123[] = {2, 4, 20, 136, 1052, 9114, 84556};
constexpr std::int64_t kPrime132[] = {2, 8, 44, 294, 2242, 18800, 169436};
constexpr std::int64_t kAk132[] = {2, 4, 20, 134, 1050, 9088, 84516};

std::int64_t catalan(int n) {
  std::int64_t c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

Permutation P(const char* text) { return Permutation::parse(text); }

std::vector<Permutation> sorted_set(std::initializer_list<const char*> texts) {
  std::vector<Permutation> out;
  for (const char* t : texts) out.push_back(Permutation::parse(t));
  std::sort(out.begin(), out.end());
  return out;
}

Report suite_avoiders(const VerifyOptions& o, CountTable& table) {
  Report r{"avoiders", {}};
  for (Pattern sigma : kAllPatterns) {
    for (int n = 1; n <= std::min(o.max_n, 12); ++n) {
      const auto got = count_avoiders(n, sigma, o.limits);
      r.add("|S_" + std::to_string(n) + "(" + std::string(to_string(sigma)) +
                ")| is Catalan",
            got == catalan(n),
            std::to_string(got) + " vs " + std::to_string(catalan(n)));
    }
    for (int n = 2; n <= std::min(o.max_n, 13); ++n) {
      const auto got = count_cyclic(n, sigma, table, o.limits);
      const auto want = kGolden[n - 2][static_cast<int>(sigma)];
      r.add("c_" + std::to_string(n) + "(" + std::string(to_string(sigma)) +
                ")",
            got == want, std::to_string(got) + " vs " + std::to_string(want));
    }
    for (int n = 2; n <= std::min(o.max_n, 8); ++n) {
      const auto slow = brute_force_count(n, sigma);
      const auto fast = count_cyclic(n, sigma, table, o.limits);
      r.add("brute force crosscheck n=" + std::to_string(n) + " " +
                std::string(to_string(sigma)),
            slow == fast, std::to_string(fast) + " vs " + std::to_string(slow));
    }
  }
  for (int n = 2; n <= o.max_n; ++n) {
    auto a = collect_cyclic_avoiders(n, Pattern::p312, o.limits);
    for (auto& p : a) p = symmetry(p, SymmetryKind::inverse);
    std::sort(a.begin(), a.end());
    r.add("inverse maps C_" + std::to_string(n) + "(312) onto C_n(231)",
          a == collect_cyclic_avoiders(n, Pattern::p231, o.limits));
    auto b = collect_cyclic_avoiders(n, Pattern::p132, o.limits);
    for (auto& p : b) p = symmetry(p, SymmetryKind::rc);
    std::sort(b.begin(), b.end());
    r.add("rc maps C_" + std::to_string(n) + "(132) onto C_n(213)",
          b == collect_cyclic_avoiders(n, Pattern::p213, o.limits));
    bool ends_in_1 = true;
    for (const auto& p : collect_cyclic_avoiders(n, Pattern::p312, o.limits))
      if (p.at(n) != 1) ends_in_1 = false;
    r.add("every member of C_" + std::to_string(n) + "(312) ends in 1",
          ends_in_1);
  }
  return r;
}

Report suite_compose(const VerifyOptions& o, CountTable&) {
  Report r{"compose", {}};
  r.add("star312 worked example",
        star312(P("3 4 6 5 8 7 2 1"), P("3 4 2 5 6 1")) ==
            P("3 4 6 5 8 7 9 10 2 11 12 1"));
  r.add("star312 square", star312(P("3 4 2 1"), P("3 4 2 1")) ==
                              P("3 4 5 6 2 1"));
  {
    const auto s = split312(P("4 3 6 5 2 10 9 11 8 7 13 14 12 1"));
    r.add("split312 worked example", s.left == P("4 3 6 5 2 1") &&
                                         s.right == P("5 4 6 3 2 8 9 7 1"));
  }
  r.add("odot321 worked example",
        odot321(P("3 5 6 1 7 2 4"), P("3 4 5 6 8 1 2 7")) ==
            P("3 5 7 1 8 2 9 10 12 4 6 11"));
  r.add("star123 worked example",
        star123(P("6 5 8 7 3 2 1 4"), P("4 6 2 5 3 1")) ==
            P("10 9 12 7 11 5 8 6 3 2 1 4"));
  r.add("cstar132 worked example",
        cstar132(P("6 5 4 2 1 3"), P("7 6 8 2 1 3 4 5")) ==
            P("12 11 9 8 10 4 3 5 6 2 1 7"));
  {
    const auto big = unstar312(P("3 4 6 5 8 7 9 10 2 11 12 1"), 6);
    r.add("unstar312 worked example", big.first == P("3 4 6 5 8 7 2 1") &&
                                          big.second == P("3 4 2 5 6 1"));
  }

  const int cap = std::min(10, o.max_n + 1);
  auto cyc = [&](int n, Pattern sigma) {
    return collect_cyclic_avoiders(n, sigma, o.limits);
  };
  bool closure = true;
  long pairs = 0;
  for (int m = 2; m <= cap; ++m)
    for (const auto& a : cyc(m, Pattern::p312)) {
      if (a.at(m) != 1 || (m > 2 && a.at(m - 1) != 2)) continue;
      for (int n = 2; n + m - 2 <= cap; ++n)
        for (const auto& b : cyc(n, Pattern::p312)) {
          const auto out = star312(a, b);
          ++pairs;
          if (!is_cyclic(out) || contains(out, Pattern::p312)) closure = false;
        }
    }
  r.add("star312 closure for outputs up to " + std::to_string(cap),
        closure && pairs > 0, std::to_string(pairs) + " pairs");

  closure = true;
  pairs = 0;
  for (int m = 4; m <= cap; ++m)
    for (const auto& a : cyc(m, Pattern::p321)) {
      if (a.at(m) == m - 1) continue;
      for (int n = 3; n + m - 3 <= cap; ++n)
        for (const auto& b : cyc(n, Pattern::p321)) {
          if (m >= 5 && b.at(2) == 1) continue;
          const auto out = odot321(a, b);
          ++pairs;
          if (!is_cyclic(out) || contains(out, Pattern::p321)) closure = false;
        }
    }
  r.add("odot321 closure for outputs up to " + std::to_string(cap),
        closure && pairs > 0, std::to_string(pairs) + " pairs");

  for (Pattern sigma : {Pattern::p123, Pattern::p132}) {
    closure = true;
    pairs = 0;
    for (int m = 2; 2 * m <= cap; ++m)
      for (const auto& a : cyc(2 * m, sigma)) {
        bool top = true;
        for (int i = 1; i <= m; ++i)
          if (a.at(i) <= m) top = false;
        if (!top) continue;
        for (int n = 2; n + 2 * m - 2 <= cap; ++n)
          for (const auto& b : cyc(n, sigma)) {
            const auto out =
                sigma == Pattern::p123 ? star123(a, b) : cstar132(a, b);
            ++pairs;
            if (!is_cyclic(out) || contains(out, sigma)) closure = false;
          }
      }
    r.add(std::string(sigma == Pattern::p123 ? "star123" : "cstar132") +
              " closure for outputs up to " + std::to_string(cap),
          closure && pairs > 0, std::to_string(pairs) + " pairs");
  }

  bool identity = true;
  for (int n = 2; n <= std::min(o.max_n, 9); ++n)
    for (const auto& b : collect_cyclic_avoiders(n, Pattern::p312, o.limits)) {
      if (star312(P("2 1"), b) != b) identity = false;
      if (b.at(n - 1) == 2 && star312(b, P("2 1")) != b) identity = false;
    }
  r.add("21 is a two-sided star312 identity", identity);
  return r;
}

Report suite_seeds(const VerifyOptions& o, CountTable& table) {
  Report r{"seeds", {}};
  // golden rows within the requested depth
  {
    SeedTables t(Pattern::p312, o.limits);
    for (int k = 1; k <= std::min<int>(o.max_k, std::size(kA312)); ++k)
      r.add("|A_" + std::to_string(k) + "|(312)",
            std::int64_t(t.seed(k).size()) == kA312[k - 1],
            std::to_string(t.seed(k).size()) + " vs " +
                std::to_string(kA312[k - 1]));
  }
  {
    SeedTables t(Pattern::p321, o.limits);
    for (int k = 1; k <= std::min<int>(o.max_k, std::size(kA321)); ++k) {
      r.add("|A_" + std::to_string(k) + "|(321)",
            std::int64_t(t.seed(k).size()) == kA321[k - 1],
            std::to_string(t.seed(k).size()) + " vs " +
                std::to_string(kA321[k - 1]));
      if (k >= 2)
        r.add("sum of |X_{i," + std::to_string(k + 3) + "}|(321)",
              t.ak_row(k).overlap == kSum321[k - 1],
              std::to_string(t.ak_row(k).overlap) + " vs " +
                  std::to_string(kSum321[k - 1]));
    }
  }
  for (Pattern sigma : {Pattern::p123, Pattern::p132}) {
    SeedTables t(sigma, o.limits);
    const auto* prime = sigma == Pattern::p123 ? kPrime123 : kPrime132;
    const auto* ak = sigma == Pattern::p123 ? kAk123 : kAk132;
    for (int k = 1; k <= std::min<int>(o.max_k, 7); ++k) {
      const auto row = t.ak_row(k);
      r.add("|A'_" + std::to_string(k) + "|(" +
                std::string(to_string(sigma)) + ")",
            row.a_prime == prime[k - 1],
            std::to_string(*row.a_prime) + " vs " +
                std::to_string(prime[k - 1]));
      r.add("|A_" + std::to_string(k) + "|(" + std::string(to_string(sigma)) +
                ")",
            row.a_k == ak[k - 1],
            std::to_string(row.a_k) + " vs " + std::to_string(ak[k - 1]));
    }
  }
  // the published example families
  {
    SeedTables t(Pattern::p123, o.limits);
    r.add("X_{1,6}(123)", t.family(1, 6) ==
                              sorted_set({"6 5 4 1 3 2", "6 4 5 3 1 2",
                                          "6 3 5 1 4 2", "6 4 1 5 3 2",
                                          "5 6 4 2 3 1", "5 4 6 3 2 1",
                                          "5 3 6 2 4 1", "5 4 2 6 3 1"}));
    r.add("X_{2,7}(123)", t.family(2, 7) ==
                              sorted_set({"7 6 5 2 4 1 3", "5 7 6 2 4 1 3",
                                          "5 7 6 3 4 2 1", "6 5 7 1 4 3 2",
                                          "7 6 4 5 2 1 3", "5 7 4 6 2 1 3",
                                          "5 7 4 6 3 2 1", "6 5 4 7 1 3 2"}));
  }
  {
    SeedTables t(Pattern::p132, o.limits);
    r.add("X_{1,6}(132)", t.family(1, 6) ==
                              sorted_set({"6 5 2 3 1 4", "6 5 4 2 1 3",
                                          "6 4 5 3 1 2", "6 3 4 5 1 2",
                                          "5 6 2 3 4 1", "5 6 4 2 3 1",
                                          "5 4 6 3 2 1", "5 3 4 6 2 1"}));
  }
  for (Pattern sigma : {Pattern::p312, Pattern::p321, Pattern::p123,
                        Pattern::p132}) {
    SeedTables shared(sigma, o.limits);
    for (int n = std::max(4, o.max_n - 2); n <= o.max_n; ++n) {
      r.merge(verify_disjoint(shared, n, o.max_k));
      r.merge(verify_cardinalities(shared, n, o.max_k, table));
    }
  }
  return r;
}

Report suite_dyck(const VerifyOptions& o, CountTable& table) {
  Report r{"dyck", {}};
  r.add("encode worked example",
        to_dyck(P("7 6 8 2 1 3 4 5")).str() == "uududduuuududddd");
  r.add("decode worked example",
        from_dyck(DyckPath::parse("uuuudduduudddd")) == P("4 5 3 1 2 6 7"));
  r.add("augment_left worked example",
        augment_left(P("7 6 8 2 1 3 4 5")) == P("8 7 9 5 2 1 3 4 6"));
  for (int n = 1; n <= o.max_n; ++n) {
    bool ok = true;
    for_each_avoider(
        n, Pattern::p132,
        [&](const Permutation& p) { ok = ok && from_dyck(to_dyck(p)) == p; },
        o.limits);
    r.add("Dyck round trip on S_" + std::to_string(n) + "(132)", ok);
  }
  for (int n = 3; n <= o.max_n + 1 && n <= kMaxN; ++n)
    r.merge(verify_doubling(n, table, o.limits));
  return r;
}

Report suite_bounds(const VerifyOptions& o, CountTable& table) {
  Report r{"bounds", {}};
  r.merge(verify_truncated_presets(table, std::min(o.max_n, 13), o.limits));
  struct Checkpoint {
    const char* preset;
    double root;
  };
  // regression values for the characteristic roots of the stored presets
  const Checkpoint points[] = {
      {"thm312", 3.043859694687944},      {"thm321", 3.178858297079501},
      {"thm123", 2.666124265078581},      {"thm132", 2.600925938102780},
      {"improved312", 3.001033781483322}, {"improved321", 3.027467092123083},
  };
  for (const auto& cp : points) {
    const double got = growth_rate(preset(cp.preset)).root;
    r.add(std::string("growth(") + cp.preset + ")",
          std::fabs(got - cp.root) < 1e-8,
          format_ratio(got) + " vs " + format_ratio(cp.root));
  }
  return r;
}

Report suite_corollary(const VerifyOptions& o, CountTable& table) {
  return verify_corollary_312(2, std::min(o.max_n, 12), table, o.limits);
}

Report suite_bona_cory(const VerifyOptions& o, CountTable& table) {
  Report r{"bona-cory", {}};
  for (Pattern sigma : kAllPatterns) {
    for (int n = 1; n <= std::min(o.max_n, 13); ++n)
      count_cyclic(n, sigma, table, o.limits);
    r.merge(check_bona_cory(sigma, table, o.min_n, std::min(o.max_n, 13)));
  }
  return r;
}

Report suite_order(const VerifyOptions& o, CountTable& table) {
  for (Pattern sigma : kAllPatterns)
    for (int n = 1; n <= std::min(o.max_n, 13); ++n)
      count_cyclic(n, sigma, table, o.limits);
  return check_conjectured_order(table, 2, std::min(o.max_n, 13));
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  return {"avoiders", "compose",   "seeds", "dyck", "bounds",
          "corollary", "bona-cory", "order", "all"};
}

Report run_verify_suite(std::string_view name, const VerifyOptions& options,
                        CountTable& table) {
  if (name == "avoiders") return suite_avoiders(options, table);
  if (name == "compose") return suite_compose(options, table);
  if (name == "seeds") return suite_seeds(options, table);
  if (name == "dyck") return suite_dyck(options, table);
  if (name == "bounds") return suite_bounds(options, table);
  if (name == "corollary") return suite_corollary(options, table);
  if (name == "bona-cory") return suite_bona_cory(options, table);
  if (name == "order") return suite_order(options, table);
  if (name == "all") {
    Report all{"all", {}};
    for (const auto& suite : verify_suite_names()) {
      if (suite == "all") continue;
      all.merge(run_verify_suite(suite, options, table));
    }
    return all;
  }
  throw UnknownPreset("unknown verify suite: " + std::string(name));
}

}  // namespace cyclecomb
