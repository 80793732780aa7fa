#pragma once

#include <utility>

#include "cyclecomb/perm.hpp"

namespace cyclecomb {

enum class OpKind : std::uint8_t { star312, odot321, star123, cstar132 };

std::string_view to_string(OpKind op);
OpKind op_from_string(std::string_view s);  // throws ParseError
Pattern op_pattern(OpKind op);

/// alpha * beta for 312-avoiding cycles.
///
/// Preconditions: alpha in C_m(312), m >= 2, ending in "2 1"; beta in
/// C_n(312), n >= 2. The result places alpha_1..alpha_{m-2} in front of beta,
/// shifting every beta value except 2 up by m-2 and keeping the final 1; it
/// lies in C_{m+n-2}(312).
Permutation star312(const Permutation& alpha, const Permutation& beta);

struct SplitResult312 {
  Permutation left;   // alpha21
  Permutation right;  // red(beta1)
};

/// Splits pi = alpha 2 beta 1 at the position of the value 2 and returns
/// (alpha21, red(beta1)); both parts are cyclic 312-avoiders whenever pi is.
SplitResult312 split312(const Permutation& pi);

/// Undoes * at a chosen cut: (pi_1..pi_k 2 1, red(pi_{k+1}..pi_n)) for
/// 0 <= k <= n-2. Throws NotDecomposable when the parts fail star312's
/// preconditions (e.g. the prefix values are not exactly [3..k+2]).
std::pair<Permutation, Permutation> unstar312(const Permutation& pi, int k);

/// alpha ⊙ beta for 321-avoiding cycles.
///
/// Structurally defined whenever |alpha| = m >= 4 holds m-1 and m at
/// positions r < s < m, and |beta| = n >= 3: the entries at r and s become
/// the images of beta_1 and beta_2, alpha's tail element replaces beta's 1,
/// and the remaining beta values shift by m-3. Validation here is structural
/// only; use odot321_closure_ok / odot321_checked when membership of the
/// result in C_{m+n-3}(321) must be guaranteed.
Permutation odot321(const Permutation& alpha, const Permutation& beta);

/// The closure hypotheses: both operands cyclic 321-avoiders, and for
/// m >= 5 both alpha_m != m-1 and beta_2 != 1.
bool odot321_closure_ok(const Permutation& alpha, const Permutation& beta);

/// Like odot321 but throws ClosureNotGuaranteed when the structural
/// precondition holds and the closure hypotheses do not.
Permutation odot321_checked(const Permutation& alpha, const Permutation& beta);

/// alpha ★ beta for 123-avoiding cycles.
///
/// Preconditions: alpha in C_{2m}(123) with {alpha_1..alpha_m} = [m+1, 2m],
/// m >= 2; beta in C_n(123), n >= 2. Wraps alpha around beta: the first m-1
/// alpha entries (shifted by n-2) go in front, the last m-1 go behind, and
/// beta sits in the middle with its n and 1 replaced by alpha_m + n - 2 and
/// alpha_{m+1}.
Permutation star123(const Permutation& alpha, const Permutation& beta);

/// alpha ⊛ beta for 132-avoiding cycles; same shape constraints as star123.
/// The first m-1 alpha entries (shifted by n-2) go in front, beta_1..beta_{n-1}
/// sit in the middle shifted by m-1 (beta's n becomes alpha_m + n - 2), and
/// alpha's tail follows with the entry m replaced by beta_n + m - 1.
Permutation cstar132(const Permutation& alpha, const Permutation& beta);

/// Dispatch by OpKind (validating variants).
Permutation compose(OpKind op, const Permutation& alpha,
                    const Permutation& beta);

namespace unchecked {
// Validation-free variants for inner loops over pre-validated operands.
Permutation star312(const Permutation& alpha, const Permutation& beta);
Permutation odot321(const Permutation& alpha, const Permutation& beta);
Permutation star123(const Permutation& alpha, const Permutation& beta);
Permutation cstar132(const Permutation& alpha, const Permutation& beta);
}  // namespace unchecked

}  // namespace cyclecomb
