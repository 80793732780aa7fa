#include "cyclecomb/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace cyclecomb {

void Recurrence::validate() const {
  if (coeffs.empty()) throw Error("recurrence needs at least one coefficient");
  if (coeffs.back() == 0) throw Error("trailing coefficient must be nonzero");
  if (min_n < degree() + 1)
    throw Error("min_n must be at least degree + 1");
}

namespace {

// |A_k| for 321, k = 1..16; the thm321 coefficients are
// 2[k=1] + 2|A_k| - 3|A_{k-1}| per lag, with tail -3|A_16|.
constexpr std::int64_t kA321[] = {2,    2,     0,     2,      6,      8,
                                  46,   110,   296,   1136,   3230,   10382,
                                  35234, 113130, 377154, 1274152};

Recurrence make(Pattern p, std::vector<std::int64_t> coeffs, int min_n,
                std::string label) {
  Recurrence r{p, std::move(coeffs), min_n, std::move(label)};
  r.validate();
  return r;
}

}  // namespace

Recurrence preset(std::string_view name) {
  if (name == "thm312")
    return make(Pattern::p312,
                {1, 1, 2, 3, 6, 22, 64, 175, 526, 1726, 5612, 18231, 59932,
                 201544, 685550, 2350957, 8108124, 28174500},
                19, "thm312");
  if (name == "thm321")
    return make(Pattern::p321,
                {2, 4, -6, 4, 6, -2, 68, 82, 262, 1384, 3052, 11074, 39322,
                 120558, 414918, 1416842, -3822456},
                19, "thm321");
  if (name == "thm123")
    return make(Pattern::p123,
                {0, 2, 0, 4, 0, 20, 0, 136, 0, 1052, 0, 9114, 0, 84556, 0,
                 828118, 0, 8459908},
                20, "thm123");
  if (name == "thm132")
    return make(Pattern::p132,
                {0, 2, 0, 4, 0, 20, 0, 134, 0, 1046, 0, 9096, 0, 84532, 0,
                 829906},
                18, "thm132");
  if (name == "improved312")
    return make(Pattern::p312,
                {2, 0, 1, 1, 3, 16, 42, 111, 351, 1200, 3886, 12619, 41701,
                 141612, 484006, 1665407, 0, 0, 3406201},
                20, "improved312");
  if (name == "improved312_raw")
    return make(Pattern::p312,
                {2, 0, 1, 1, 3, 16, 42, 111, 351, 1200, 3886, 12619, 41701,
                 141612, 484006, 1665407, 5757167, 20066367, -28174500},
                20, "improved312_raw");
  if (name == "improved321")
    return make(Pattern::p321,
                {2, 1, 0, 4, 5, 0, 68, 82, 262, 1384, 3052, 11074, 39322,
                 120558, 167725},
                19, "improved321");
  throw UnknownPreset("unknown preset: " + std::string(name));
}

std::vector<std::string> preset_names() {
  return {"thm312",      "thm321",          "thm123",     "thm132",
          "improved312", "improved312_raw", "improved321"};
}

Recurrence truncate_prefix(const Recurrence& rec, int lags) {
  if (lags < 1 || lags > rec.degree())
    throw IndexOutOfRange("truncation length outside [1, degree]");
  std::vector<std::int64_t> coeffs(rec.coeffs.begin(),
                                   rec.coeffs.begin() + lags);
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  if (coeffs.empty()) throw Error("truncation is identically zero");
  const int d = static_cast<int>(coeffs.size());
  return make(rec.pattern, std::move(coeffs), d + 1,
              rec.label + "[:" + std::to_string(lags) + "]");
}

std::vector<Recurrence> theorem_truncations(Pattern sigma) {
  std::vector<Recurrence> out;
  auto push_unique = [&](Recurrence r) {
    for (const auto& seen : out)
      if (seen.coeffs == r.coeffs) return;
    out.push_back(std::move(r));
  };
  switch (sigma) {
    case Pattern::p312: {
      const Recurrence full = preset("thm312");
      for (int d = 1; d <= full.degree(); ++d) {
        Recurrence r = truncate_prefix(full, d);
        r.min_n = r.degree() + 2;  // deepest family needs a beta of length 2
        r.label = "thm312/k<=" + std::to_string(d);
        push_unique(std::move(r));
      }
      break;
    }
    case Pattern::p321: {
      const int kmax = static_cast<int>(std::size(kA321));
      for (int K = 1; K <= kmax; ++K) {
        std::vector<std::int64_t> coeffs(static_cast<std::size_t>(K) + 1, 0);
        coeffs[0] = 2;
        for (int j = 2; j <= K; ++j) coeffs[j - 1] += 2 * kA321[j - 1];
        for (int j = 3; j <= K + 1; ++j) coeffs[j - 1] -= 3 * kA321[j - 2];
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
        push_unique(make(Pattern::p321, std::move(coeffs), K + 3,
                         "thm321/k<=" + std::to_string(K)));
      }
      break;
    }
    default: {
      const Recurrence full =
          preset(sigma == Pattern::p123 ? "thm123" : "thm132");
      for (int d = 2; d <= full.degree(); d += 2) {
        Recurrence r = truncate_prefix(full, d);
        r.min_n = d + 2;
        r.label = full.label + "/k<=" + std::to_string(d / 2);
        push_unique(std::move(r));
      }
      break;
    }
  }
  return out;
}

GrowthResult growth_rate(const Recurrence& rec, double tol) {
  rec.validate();
  if (!(tol > 0)) throw Error("tol must be positive");
  const int d = rec.degree();
  // monic characteristic polynomial, highest power first
  std::vector<long double> poly(static_cast<std::size_t>(d) + 1);
  poly[0] = 1.0L;
  for (int i = 1; i <= d; ++i)
    poly[static_cast<std::size_t>(i)] = -static_cast<long double>(rec.coeffs[i - 1]);
  auto f = [&](long double x) {
    long double acc = 0.0L;
    for (long double c : poly) acc = acc * x + c;
    return acc;
  };

  long double capB = 1.0L;
  for (std::int64_t a : rec.coeffs) capB += std::abs(static_cast<long double>(a));
  // every root is below the Fujiwara bound, so grid points above it are
  // provably positive and the downward 1/64 scan may start there
  long double fuji = 0.0L;
  for (int i = 1; i <= d; ++i) {
    if (rec.coeffs[i - 1] == 0) continue;
    fuji = std::max(fuji,
                    powl(std::abs(static_cast<long double>(rec.coeffs[i - 1])),
                         1.0L / i));
  }
  fuji *= 2.0L;

  const long double step = 1.0L / 64.0L;
  long double lo = capB;
  if (fuji < capB) {
    const long double skips = floorl((capB - fuji) / step);
    lo = capB - skips * step;
  }
  long double hi = lo + step;
  while (f(lo) > 0) {
    hi = lo;
    lo -= step;
    if (lo <= 0)
      throw NoRealRootFound("no sign change on (0, " +
                            std::to_string(static_cast<double>(capB)) + "]");
  }
  while (hi - lo > tol) {
    const long double mid = (lo + hi) / 2;
    if (f(mid) > 0) hi = mid;
    else lo = mid;
  }
  const long double root = (lo + hi) / 2;
  return {static_cast<double>(root), static_cast<double>(f(root))};
}

std::int64_t evaluate_bound(const Recurrence& rec, const CountTable& table,
                            int n) {
  std::int64_t total = 0;
  for (int i = 1; i <= rec.degree(); ++i) {
    const std::int64_t a = rec.coeffs[static_cast<std::size_t>(i) - 1];
    if (a == 0) continue;
    const std::int64_t c = table.require(rec.pattern, n - i);
    std::int64_t term = 0, next = 0;
    if (__builtin_mul_overflow(a, c, &term))
      throw OverflowError("term overflow in bound evaluation");
    if (__builtin_add_overflow(total, term, &next))
      throw OverflowError("sum overflow in bound evaluation");
    total = next;
  }
  return total;
}

Report verify_bound(const Recurrence& rec, const CountTable& table, int n_lo,
                    int n_hi) {
  Report report{"bound " + rec.label, {}};
  int skipped = 0, checked = 0;
  for (int n = std::max(n_lo, rec.min_n); n <= n_hi; ++n) {
    bool have_all = table.lookup(rec.pattern, n).has_value();
    for (int i = 1; have_all && i <= rec.degree(); ++i)
      if (rec.coeffs[static_cast<std::size_t>(i) - 1] != 0 &&
          !table.lookup(rec.pattern, n - i))
        have_all = false;
    if (!have_all) {
      ++skipped;
      continue;
    }
    ++checked;
    const std::int64_t rhs = evaluate_bound(rec, table, n);
    const std::int64_t lhs = table.require(rec.pattern, n);
    report.add(rec.label + " at n=" + std::to_string(n), lhs >= rhs,
               std::to_string(lhs) + " >= " + std::to_string(rhs));
  }
  if (checked == 0 && skipped > 0)
    report.add(rec.label + " window", true,
               "no counts available in [" + std::to_string(n_lo) + ", " +
                   std::to_string(n_hi) + "]");
  return report;
}

Report verify_truncated_presets(CountTable& table, int max_n,
                                const EnumLimits& limits) {
  Report report{"truncated presets", {}};
  for (Pattern sigma : {Pattern::p312, Pattern::p321, Pattern::p123,
                        Pattern::p132}) {
    for (int n = 1; n <= max_n; ++n) count_cyclic(n, sigma, table, limits);
    for (const auto& rec : theorem_truncations(sigma)) {
      if (rec.min_n > max_n) continue;
      report.merge(verify_bound(rec, table, rec.min_n, max_n));
    }
  }
  return report;
}

Report check_bona_cory(Pattern sigma, const CountTable& table, int n_lo,
                       int n_hi) {
  Report report{"bona_cory(" + std::string(to_string(sigma)) + ")", {}};
  for (int n = n_lo; n <= n_hi; ++n) {
    const auto cn = table.lookup(sigma, n);
    const auto cprev = table.lookup(sigma, n - 1);
    if (!cn || !cprev) continue;
    report.add("2c_" + std::to_string(n - 1) + " <= c_" + std::to_string(n),
               *cn >= 2 * *cprev,
               std::to_string(*cn) + " vs 2*" + std::to_string(*cprev));
    report.add("c_" + std::to_string(n) + " <= 4c_" + std::to_string(n - 1),
               *cn <= 4 * *cprev,
               std::to_string(*cn) + " vs 4*" + std::to_string(*cprev));
  }
  return report;
}

Report verify_corollary_312(int n_lo, int n_hi, CountTable& table,
                            const EnumLimits& limits) {
  Report report{"corollary_312", {}};
  std::vector<std::int64_t> ends21(static_cast<std::size_t>(n_hi) + 1, 0);
  for (int k = 2; k <= n_hi; ++k)
    ends21[static_cast<std::size_t>(k)] = count_filtered(
        k, Pattern::p312,
        [](const Permutation& p) {
          const int m = p.size();
          return m >= 2 && p.at(m - 1) == 2 && p.at(m) == 1;
        },
        limits);
  for (int n = std::max(2, n_lo); n <= n_hi; ++n) {
    std::int64_t sum = 0;
    for (int k = 2; k <= n; ++k)
      sum += ends21[static_cast<std::size_t>(k)] *
             count_cyclic(n + 1 - k, Pattern::p312, table, limits);
    const std::int64_t cn = count_cyclic(n, Pattern::p312, table, limits);
    report.add("identity at n=" + std::to_string(n), sum == cn,
               std::to_string(sum) + " vs " + std::to_string(cn));
  }
  return report;
}

std::string format_ratio(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.14g", value);
  return buf;
}

std::vector<RatioPoint> ratio_series(Pattern num, Pattern den,
                                     const CountTable& table, int n_lo,
                                     int n_hi) {
  std::vector<RatioPoint> out;
  for (int n = n_lo; n <= n_hi; ++n) {
    const long double a = static_cast<long double>(table.require(num, n));
    const long double b = static_cast<long double>(table.require(den, n));
    const double rounded =
        std::strtod(format_ratio(static_cast<double>(a / b)).c_str(), nullptr);
    out.push_back({n, rounded});
  }
  return out;
}

Report check_conjectured_order(const CountTable& table, int n_lo, int n_hi) {
  Report report{"conjectured order", {}};
  const Pattern chain[] = {Pattern::p123, Pattern::p132, Pattern::p321,
                           Pattern::p312};
  for (int n = n_lo; n <= n_hi; ++n) {
    for (int i = 0; i + 1 < 4; ++i) {
      const auto a = table.lookup(chain[i], n);
      const auto b = table.lookup(chain[i + 1], n);
      if (!a || !b) continue;
      report.add("c_" + std::to_string(n) + "(" +
                     std::string(to_string(chain[i])) + ") >= c_" +
                     std::to_string(n) + "(" +
                     std::string(to_string(chain[i + 1])) + ")",
                 *a >= *b, std::to_string(*a) + " vs " + std::to_string(*b));
    }
  }
  return report;
}

void write_growth_csv(
    std::ostream& os,
    const std::vector<std::pair<std::string, GrowthResult>>& rows,
    const std::vector<int>& degrees) {
  os << "preset,degree,root,residual\n";
  char buf[128];
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%s,%d,%.17g,%.17g",
                  rows[i].first.c_str(), degrees[i], rows[i].second.root,
                  rows[i].second.residual);
    os << buf << '\n';
  }
}

void write_ratios_csv(std::ostream& os, Pattern num, Pattern den,
                      const std::vector<RatioPoint>& points) {
  os << "num,den,n,ratio\n";
  for (const auto& pt : points)
    os << to_string(num) << ',' << to_string(den) << ',' << pt.n << ','
       << format_ratio(pt.value) << '\n';
}

}  // namespace cyclecomb
