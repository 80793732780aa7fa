#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cyclecomb/avoiders.hpp"
#include "cyclecomb/perm.hpp"
#include "cyclecomb/report.hpp"

namespace cyclecomb {

/// A signed-coefficient lower-bound recurrence: asserts
/// c_n >= sum_i coeffs[i-1] * c_{n-i} for n >= min_n. Invariants: the last
/// coefficient is nonzero and min_n >= degree + 1.
struct Recurrence {
  Pattern pattern = Pattern::p312;
  std::vector<std::int64_t> coeffs;  // a_1..a_d
  int min_n = 2;
  std::string label;

  int degree() const { return static_cast<int>(coeffs.size()); }
  void validate() const;  // throws Error on broken invariants
};

/// Named presets:
///   thm312, thm321, thm123, thm132  — the four theorem recurrences
///   improved312                     — 2c_{n-1} form with the collapsed
///                                     +3406201 c_{n-19} tail
///   improved312_raw                 — same before collapsing (19 lags)
///   improved321                     — improved 2c_{n-1} form for 321
Recurrence preset(std::string_view name);  // throws UnknownPreset
std::vector<std::string> preset_names();

/// Plain coefficient-prefix truncation (trailing zeros stripped,
/// min_n = new degree + 1). Shape-agnostic; see theorem_truncations for the
/// family-consistent variants used by the verify suite.
Recurrence truncate_prefix(const Recurrence& rec, int lags);

/// Truncations of the four theorem presets that correspond to unions of
/// whole X-families, with the windows the constructions justify:
///   312:      coefficient prefixes, min_n = d + 2
///   123/132:  even-length prefixes, min_n = d + 2
///   321:      K-family sums over lags 1..K+1 with tail -3|A_K|,
///             min_n = K + 3
/// Every returned recurrence holds wherever counts exist.
std::vector<Recurrence> theorem_truncations(Pattern sigma);

struct GrowthResult {
  double root = 0.0;
  double residual = 0.0;
};

/// Largest real root of x^d - sum a_i x^{d-i} on (0, 1 + sum|a_i|], found by
/// a downward 1/64-step sign scan (grid points with x above the Fujiwara
/// bound 2 max |a_i|^{1/i} are provably positive and are skipped wholesale)
/// followed by bisection to bracket width <= tol. Throws NoRealRootFound if
/// the scan reaches 0 without a sign change.
GrowthResult growth_rate(const Recurrence& rec, double tol = 1e-10);

/// sum a_i c_{n-i} with checked 64-bit arithmetic.
std::int64_t evaluate_bound(const Recurrence& rec, const CountTable& table,
                            int n);  // MissingCount / OverflowError

/// Asserts c_n >= evaluate_bound for every n in [n_lo, n_hi] that is inside
/// the recurrence's validity window.
Report verify_bound(const Recurrence& rec, const CountTable& table, int n_lo,
                    int n_hi);

/// Runs verify_bound over all theorem_truncations of all four patterns
/// against counts in [2, max_n] (generated on demand).
Report verify_truncated_presets(CountTable& table, int max_n,
                                const EnumLimits& limits = {});

/// Lower/upper status of 2c_{n-1} <= c_n <= 4c_{n-1} per n.
Report check_bona_cory(Pattern sigma, const CountTable& table, int n_lo,
                       int n_hi);

/// The exact identity c_n(312) = sum_{k=2}^{n} a_k(312) c_{n+1-k}(312) with
/// a_k(312) the number of members of C_k(312) ending in "2 1".
Report verify_corollary_312(int n_lo, int n_hi, CountTable& table,
                            const EnumLimits& limits = {});

struct RatioPoint {
  int n = 0;
  double value = 0.0;
};

/// c_n(num)/c_n(den) as reals, rounded to 14 significant digits at emission.
std::vector<RatioPoint> ratio_series(Pattern num, Pattern den,
                                     const CountTable& table, int n_lo,
                                     int n_hi);

/// Per-n status of c_n(123) >= c_n(132) >= c_n(321) >= c_n(312).
Report check_conjectured_order(const CountTable& table, int n_lo, int n_hi);

/// "preset,degree,root,residual" rows.
void write_growth_csv(std::ostream& os,
                      const std::vector<std::pair<std::string, GrowthResult>>&
                          rows,
                      const std::vector<int>& degrees);

/// "num,den,n,ratio" rows, ratios at 14 significant digits.
void write_ratios_csv(std::ostream& os, Pattern num, Pattern den,
                      const std::vector<RatioPoint>& points);

/// Formats a double to 14 significant digits (the precision used for ratio
/// emission).
std::string format_ratio(double value);

}  // namespace cyclecomb
