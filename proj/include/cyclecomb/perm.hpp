#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cyclecomb/errors.hpp"

namespace cyclecomb {

/// Hard cap on permutation length; the enumeration engine packs value sets
/// into 64-bit masks and counts use checked 64-bit arithmetic.
inline constexpr int kMaxN = 64;

enum class Pattern : std::uint8_t { p123, p132, p213, p231, p312, p321 };

inline constexpr std::array<Pattern, 6> kAllPatterns = {
    Pattern::p123, Pattern::p132, Pattern::p213,
    Pattern::p231, Pattern::p312, Pattern::p321};

std::string_view to_string(Pattern p);
Pattern pattern_from_string(std::string_view s);  // throws ParseError

enum class SymmetryKind : std::uint8_t { reverse, complement, inverse, rc, rci };

std::string_view to_string(SymmetryKind s);
SymmetryKind symmetry_from_string(std::string_view s);  // throws ParseError

/// A permutation of [1..n] in one-line notation. Storage is 0-indexed,
/// values are 1-based: values()[i] is the image of i+1. Immutable after
/// construction; the constructor enforces the bijection invariant.
class Permutation {
 public:
  /// Validating constructor; throws NotABijection on duplicate or
  /// out-of-range values, LimitExceeded for n > kMaxN.
  explicit Permutation(std::vector<std::uint8_t> one_line);

  static Permutation identity(int n);
  static Permutation from_one_line(std::span<const int> values);
  /// Parses the space-separated text form, e.g. "4 5 2 3 7 1 6".
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(v_.size()); }
  /// Image of 1-based position i.
  int at(int i) const { return v_[static_cast<std::size_t>(i) - 1]; }
  std::span<const std::uint8_t> values() const { return v_; }

  /// Space-separated one-line text form.
  std::string str() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(Unchecked, std::vector<std::uint8_t> v) : v_(std::move(v)) {}
  friend class PermBuilder;

  std::vector<std::uint8_t> v_;
};

/// Construction escape hatch for internal code that already guarantees the
/// bijection invariant (the enumeration engine, composition internals).
class PermBuilder {
 public:
  static Permutation adopt(std::vector<std::uint8_t> v) {
    return Permutation(Permutation::Unchecked{}, std::move(v));
  }
};

struct PermHash {
  std::size_t operator()(const Permutation& p) const;
};

/// Cycle notation (1, c_2, ..., c_n) of a cyclic permutation, canonically
/// started at 1: c_2 = pi_1 and c_{i+1} = pi_{c_i}.
class CycleForm {
 public:
  explicit CycleForm(std::vector<std::uint8_t> entries);  // validates
  static CycleForm parse(std::string_view text);          // "(1,4,3,2,5,7,6)"

  int size() const { return static_cast<int>(e_.size()); }
  std::span<const std::uint8_t> entries() const { return e_; }
  std::string str() const;

  friend auto operator<=>(const CycleForm&, const CycleForm&) = default;

 private:
  std::vector<std::uint8_t> e_;
};

/// True iff the orbit of 1 under p has size n.
bool is_cyclic(const Permutation& p);

CycleForm to_cycle(const Permutation& p);  // throws NotCyclic
Permutation from_cycle(const CycleForm& c);

Permutation symmetry(const Permutation& p, SymmetryKind kind);

/// The image of a length-3 pattern under a symmetry (e.g. 312 under inverse
/// is 231); used by the avoidance-duality checks.
Pattern transformed(Pattern sigma, SymmetryKind kind);

/// Order-isomorphic relabeling of a sequence of distinct integers onto
/// [1..k]; throws DuplicateEntry.
Permutation reduce(std::span<const int> word);

/// Pattern containment via per-pattern linear scans (monotone thresholds for
/// 123/321, a right-to-left stack for the 132 symmetry class).
bool contains(const Permutation& p, Pattern sigma);
inline bool avoids(const Permutation& p, Pattern sigma) {
  return !contains(p, sigma);
}

/// Cubic-time reference checker, kept as the oracle for the fast scans and
/// as the containment test inside brute_force_count.
bool contains_naive(const Permutation& p, Pattern sigma);

}  // namespace cyclecomb
