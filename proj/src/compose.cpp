#include "cyclecomb/compose.hpp"

#include <algorithm>

#include "cyclecomb/detail/word.hpp"

namespace cyclecomb {

std::string_view to_string(OpKind op) {
  switch (op) {
    case OpKind::star312: return "star312";
    case OpKind::odot321: return "odot321";
    case OpKind::star123: return "star123";
    case OpKind::cstar132: return "cstar132";
  }
  return "?";
}

OpKind op_from_string(std::string_view s) {
  for (OpKind op : {OpKind::star312, OpKind::odot321, OpKind::star123,
                    OpKind::cstar132})
    if (s == to_string(op)) return op;
  throw ParseError("unknown operation: " + std::string(s));
}

Pattern op_pattern(OpKind op) {
  switch (op) {
    case OpKind::star312: return Pattern::p312;
    case OpKind::odot321: return Pattern::p321;
    case OpKind::star123: return Pattern::p123;
    case OpKind::cstar132: return Pattern::p132;
  }
  return Pattern::p312;
}

namespace {

void require_cyclic_avoider(const Permutation& p, Pattern sigma,
                            const char* operand) {
  if (!is_cyclic(p))
    throw PreconditionFailed(Violation::cyclic,
                             std::string(operand) + " is not cyclic");
  if (contains(p, sigma))
    throw PreconditionFailed(Violation::pattern, std::string(operand) +
                                                     " contains " +
                                                     std::string(to_string(sigma)));
}

// Positions (0-based) of the values m-1 and m in alpha; pair_order violation
// unless r < s < m-1 (i.e. both strictly before the last position).
std::pair<int, int> odot_positions(const Permutation& alpha) {
  const int m = alpha.size();
  int r = -1, s = -1;
  const auto v = alpha.values();
  for (int i = 0; i < m; ++i) {
    if (v[i] == m - 1) r = i;
    if (v[i] == m) s = i;
  }
  if (!(r < s && s < m - 1))
    throw PreconditionFailed(
        Violation::pair_order,
        "alpha must hold m-1 and m at positions r < s < m");
  return {r, s};
}

void require_top_block(const Permutation& alpha) {
  const int len = alpha.size();
  if (len % 2 != 0 || len < 4)
    throw PreconditionFailed(Violation::length,
                             "alpha must have even length >= 4");
  const int m = len / 2;
  const auto v = alpha.values();
  for (int i = 0; i < m; ++i)
    if (v[i] <= m)
      throw PreconditionFailed(
          Violation::prefix_block,
          "alpha's first half must be the values [m+1, 2m]");
}

}  // namespace

namespace unchecked {

Permutation star312(const Permutation& alpha, const Permutation& beta) {
  const int m = alpha.size(), n = beta.size();
  std::vector<std::uint8_t> out;
  out.reserve(static_cast<std::size_t>(m + n - 2));
  const auto a = alpha.values();
  const auto b = beta.values();
  out.insert(out.end(), a.begin(), a.end() - 2);
  for (int i = 0; i < n - 1; ++i)
    out.push_back(b[i] == 2 ? std::uint8_t(2) : std::uint8_t(b[i] + m - 2));
  out.push_back(1);
  return PermBuilder::adopt(std::move(out));
}

Permutation odot321(const Permutation& alpha, const Permutation& beta) {
  const int m = alpha.size(), n = beta.size();
  const auto a = alpha.values();
  const auto b = beta.values();
  int r = -1, s = -1;
  for (int i = 0; i < m; ++i) {
    if (a[i] == m - 1) r = i;
    if (a[i] == m) s = i;
  }
  const std::uint8_t tail = a[m - 1];
  auto shifted = [&](std::uint8_t x) {
    return x == 1 ? tail : std::uint8_t(x + m - 3);
  };
  std::vector<std::uint8_t> out(a.begin(), a.end() - 1);
  out[static_cast<std::size_t>(r)] = shifted(b[0]);
  out[static_cast<std::size_t>(s)] = shifted(b[1]);
  out.reserve(static_cast<std::size_t>(m + n - 3));
  for (int i = 2; i < n; ++i) out.push_back(shifted(b[i]));
  return PermBuilder::adopt(std::move(out));
}

Permutation star123(const Permutation& alpha, const Permutation& beta) {
  const int m = alpha.size() / 2, n = beta.size();
  const auto a = alpha.values();
  const auto b = beta.values();
  std::vector<std::uint8_t> out;
  out.reserve(static_cast<std::size_t>(n + 2 * m - 2));
  for (int i = 0; i < m - 1; ++i) out.push_back(std::uint8_t(a[i] + n - 2));
  for (int i = 0; i < n; ++i) {
    if (b[i] == n) out.push_back(std::uint8_t(a[m - 1] + n - 2));
    else if (b[i] == 1) out.push_back(a[m]);
    else out.push_back(std::uint8_t(b[i] + m - 1));
  }
  for (int i = m + 1; i < 2 * m; ++i) out.push_back(a[i]);
  return PermBuilder::adopt(std::move(out));
}

Permutation cstar132(const Permutation& alpha, const Permutation& beta) {
  const int m = alpha.size() / 2, n = beta.size();
  const auto a = alpha.values();
  const auto b = beta.values();
  std::vector<std::uint8_t> out;
  out.reserve(static_cast<std::size_t>(n + 2 * m - 2));
  for (int i = 0; i < m - 1; ++i) out.push_back(std::uint8_t(a[i] + n - 2));
  for (int i = 0; i < n - 1; ++i) {
    if (b[i] == n) out.push_back(std::uint8_t(a[m - 1] + n - 2));
    else out.push_back(std::uint8_t(b[i] + m - 1));
  }
  for (int i = m; i < 2 * m; ++i) {
    if (a[i] == m) out.push_back(std::uint8_t(b[n - 1] + m - 1));
    else out.push_back(a[i]);
  }
  return PermBuilder::adopt(std::move(out));
}

}  // namespace unchecked

Permutation star312(const Permutation& alpha, const Permutation& beta) {
  if (alpha.size() < 2)
    throw PreconditionFailed(Violation::length, "alpha must have length >= 2");
  if (beta.size() < 2)
    throw PreconditionFailed(Violation::length, "beta must have length >= 2");
  require_cyclic_avoider(alpha, Pattern::p312, "alpha");
  require_cyclic_avoider(beta, Pattern::p312, "beta");
  const int m = alpha.size();
  if (alpha.at(m - 1) != 2 || alpha.at(m) != 1)
    throw PreconditionFailed(Violation::suffix, "alpha must end in \"2 1\"");
  return unchecked::star312(alpha, beta);
}

SplitResult312 split312(const Permutation& pi) {
  if (pi.size() < 2)
    throw PreconditionFailed(Violation::length, "pi must have length >= 2");
  require_cyclic_avoider(pi, Pattern::p312, "pi");
  const auto v = pi.values();
  const int n = pi.size();
  int two = 0;
  while (v[two] != 2) ++two;  // 0-based position of the value 2

  std::vector<std::uint8_t> left(v.begin(), v.begin() + two);
  left.push_back(2);
  left.push_back(1);

  std::vector<std::uint8_t> right;
  right.reserve(static_cast<std::size_t>(n - two - 1));
  for (int i = two + 1; i < n; ++i)
    right.push_back(v[i] == 1 ? std::uint8_t(1) : std::uint8_t(v[i] - two - 1));
  return {Permutation(std::move(left)), Permutation(std::move(right))};
}

std::pair<Permutation, Permutation> unstar312(const Permutation& pi, int k) {
  require_cyclic_avoider(pi, Pattern::p312, "pi");
  const int n = pi.size();
  if (k < 0 || k + 2 > n)
    throw PreconditionFailed(Violation::index,
                             "need 0 <= k <= n-2 to cut off alpha of length k+2");
  const auto v = pi.values();
  // the prefix must use exactly the values [3, k+2] for alpha21 to be a
  // permutation
  std::uint64_t seen = 0;
  for (int i = 0; i < k; ++i) seen |= 1ull << (v[i] - 1);
  const std::uint64_t expect = k == 0 ? 0 : ((1ull << (k + 2)) - 1) ^ 3ull;
  if (seen != expect)
    throw NotDecomposable("prefix values are not [3.." + std::to_string(k + 2) +
                          "]");

  std::vector<std::uint8_t> left(v.begin(), v.begin() + k);
  left.push_back(2);
  left.push_back(1);
  Permutation alpha(std::move(left));

  std::vector<std::uint8_t> right;
  right.reserve(static_cast<std::size_t>(n - k));
  for (int i = k; i < n; ++i)
    right.push_back(v[i] <= 2 ? v[i] : std::uint8_t(v[i] - k));
  Permutation beta(std::move(right));

  if (!is_cyclic(alpha) || !is_cyclic(beta))
    throw NotDecomposable("cut parts are not both cyclic");
  return {std::move(alpha), std::move(beta)};
}

Permutation odot321(const Permutation& alpha, const Permutation& beta) {
  if (alpha.size() < 4)
    throw PreconditionFailed(Violation::length, "alpha must have length >= 4");
  if (beta.size() < 3)
    throw PreconditionFailed(Violation::length, "beta must have length >= 3");
  odot_positions(alpha);
  return unchecked::odot321(alpha, beta);
}

bool odot321_closure_ok(const Permutation& alpha, const Permutation& beta) {
  const int m = alpha.size();
  if (m < 4 || beta.size() < 3) return false;
  if (!is_cyclic(alpha) || contains(alpha, Pattern::p321)) return false;
  if (!is_cyclic(beta) || contains(beta, Pattern::p321)) return false;
  if (alpha.at(m) == m - 1) return false;  // no r < s < m placement exists
  int r = -1, s = -1;
  for (int i = 1; i <= m; ++i) {
    if (alpha.at(i) == m - 1) r = i;
    if (alpha.at(i) == m) s = i;
  }
  if (!(r < s && s < m)) return false;
  if (m >= 5 && beta.at(2) == 1) return false;
  return true;
}

Permutation odot321_checked(const Permutation& alpha, const Permutation& beta) {
  Permutation result = odot321(alpha, beta);
  if (!odot321_closure_ok(alpha, beta))
    throw ClosureNotGuaranteed(
        "operands do not meet the closure hypotheses; the result may leave "
        "C_n(321)");
  return result;
}

Permutation star123(const Permutation& alpha, const Permutation& beta) {
  require_top_block(alpha);
  if (beta.size() < 2)
    throw PreconditionFailed(Violation::length, "beta must have length >= 2");
  require_cyclic_avoider(alpha, Pattern::p123, "alpha");
  require_cyclic_avoider(beta, Pattern::p123, "beta");
  return unchecked::star123(alpha, beta);
}

Permutation cstar132(const Permutation& alpha, const Permutation& beta) {
  require_top_block(alpha);
  if (beta.size() < 2)
    throw PreconditionFailed(Violation::length, "beta must have length >= 2");
  require_cyclic_avoider(alpha, Pattern::p132, "alpha");
  require_cyclic_avoider(beta, Pattern::p132, "beta");
  return unchecked::cstar132(alpha, beta);
}

Permutation compose(OpKind op, const Permutation& alpha,
                    const Permutation& beta) {
  switch (op) {
    case OpKind::star312: return star312(alpha, beta);
    case OpKind::odot321: return odot321(alpha, beta);
    case OpKind::star123: return star123(alpha, beta);
    case OpKind::cstar132: return cstar132(alpha, beta);
  }
  throw Error("bad op");
}

}  // namespace cyclecomb
