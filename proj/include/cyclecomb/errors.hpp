#pragma once

#include <stdexcept>
#include <string>

namespace cyclecomb {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotABijection : Error { using Error::Error; };
struct NotCyclic : Error { using Error::Error; };
struct DuplicateEntry : Error { using Error::Error; };
struct LimitExceeded : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct NotDecomposable : Error { using Error::Error; };
struct UnknownPreset : Error { using Error::Error; };
struct NoRealRootFound : Error { using Error::Error; };
struct MissingCount : Error { using Error::Error; };
struct OverflowError : Error { using Error::Error; };
struct CountMismatch : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

/// Advisory: the operands are structurally composable but the closure lemma's
/// hypotheses do not hold, so membership of the result in C_n(sigma) is not
/// guaranteed.
struct ClosureNotGuaranteed : Error { using Error::Error; };

/// Which clause of an operation's precondition was violated. Tests and CLI
/// messages key on this, not on message text.
enum class Violation {
  length,        // operand too short, or odd where an even length is required
  cyclic,        // operand is not a single n-cycle
  pattern,       // operand contains the forbidden pattern
  suffix,        // operand does not end in "2 1"
  prefix_block,  // first half of the operand is not the top block of values
  pair_order,    // values m-1 and m are not positioned r < s < m
  index,         // split/insert position out of range
};

const char* to_string(Violation v);

struct PreconditionFailed : Error {
  Violation which;
  PreconditionFailed(Violation w, const std::string& msg)
      : Error(msg), which(w) {}
};

}  // namespace cyclecomb
