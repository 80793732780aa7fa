#pragma once

#include <cstdint>
#include <span>

namespace cyclecomb::detail {

/// Orbit-of-1 walk over a raw one-line word (must be a bijection on [1..n]).
inline bool is_cyclic_word(std::span<const std::uint8_t> w) {
  const int n = static_cast<int>(w.size());
  int cur = w[0];
  int steps = 1;
  while (cur != 1) {
    cur = w[static_cast<std::size_t>(cur) - 1];
    ++steps;
  }
  return steps == n;
}

}  // namespace cyclecomb::detail
