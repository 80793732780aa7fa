#pragma once

#include <string>
#include <string_view>

#include "cyclecomb/avoiders.hpp"
#include "cyclecomb/perm.hpp"
#include "cyclecomb/report.hpp"

namespace cyclecomb {

/// A balanced up/down step sequence with the nonnegative-prefix property.
/// Wire format is a lowercase string over {u, d}, e.g. "uududd".
class DyckPath {
 public:
  explicit DyckPath(std::string steps);  // validates
  static DyckPath parse(std::string_view text);

  int length() const { return static_cast<int>(steps_.size()); }
  int semilength() const { return length() / 2; }
  const std::string& str() const { return steps_; }
  /// Height after the k-th down step (k is 1-based).
  int height_after_down(int k) const;

  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

 private:
  std::string steps_;
};

/// Encodes a 132-avoiding permutation: for the j-th left-to-right minimum,
/// emit u^l d^m with l the drop from the previous minimum (from n+1 for the
/// first) and m the gap to the next minimum position (to n+1 for the last).
DyckPath to_dyck(const Permutation& p);  // PreconditionFailed{pattern}

/// Decodes: pi_k is the unique remaining value with exactly h_k larger
/// elements to its right, h_k the height after the k-th down step.
Permutation from_dyck(const DyckPath& d);

/// Splices "ud" after the first idx steps (0 <= idx <= length).
DyckPath insert_ud(const DyckPath& d, int idx);  // IndexOutOfRange

/// Augmentations of a cyclic 132-avoider through its Dyck path: splice "ud"
/// after step n-1 (left) or n+1 (right), then decode. Both land in
/// C_{n+1}(132).
Permutation augment_left(const Permutation& p);
Permutation augment_right(const Permutation& p);

/// Confirms |augment_left(C_{n-1})| = |augment_right(C_{n-1})| = c_{n-1}(132),
/// that the images are disjoint subsets of C_n(132), and the resulting
/// doubling inequality c_n(132) >= 2 c_{n-1}(132).
Report verify_doubling(int n, CountTable& table, const EnumLimits& limits = {});

}  // namespace cyclecomb
