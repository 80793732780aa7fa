#include "cyclecomb/perm.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace cyclecomb {

const char* to_string(Violation v) {
  switch (v) {
    case Violation::length: return "length";
    case Violation::cyclic: return "cyclic";
    case Violation::pattern: return "pattern";
    case Violation::suffix: return "suffix";
    case Violation::prefix_block: return "prefix_block";
    case Violation::pair_order: return "pair_order";
    case Violation::index: return "index";
  }
  return "?";
}

std::string_view to_string(Pattern p) {
  switch (p) {
    case Pattern::p123: return "123";
    case Pattern::p132: return "132";
    case Pattern::p213: return "213";
    case Pattern::p231: return "231";
    case Pattern::p312: return "312";
    case Pattern::p321: return "321";
  }
  return "?";
}

Pattern pattern_from_string(std::string_view s) {
  for (Pattern p : kAllPatterns)
    if (s == to_string(p)) return p;
  throw ParseError("unknown pattern: " + std::string(s));
}

std::string_view to_string(SymmetryKind s) {
  switch (s) {
    case SymmetryKind::reverse: return "r";
    case SymmetryKind::complement: return "c";
    case SymmetryKind::inverse: return "i";
    case SymmetryKind::rc: return "rc";
    case SymmetryKind::rci: return "rci";
  }
  return "?";
}

SymmetryKind symmetry_from_string(std::string_view s) {
  for (SymmetryKind k : {SymmetryKind::reverse, SymmetryKind::complement,
                         SymmetryKind::inverse, SymmetryKind::rc,
                         SymmetryKind::rci})
    if (s == to_string(k)) return k;
  throw ParseError("unknown symmetry: " + std::string(s));
}

Permutation::Permutation(std::vector<std::uint8_t> one_line)
    : v_(std::move(one_line)) {
  const std::size_t n = v_.size();
  if (n == 0) throw NotABijection("empty permutation");
  if (n > static_cast<std::size_t>(kMaxN))
    throw LimitExceeded("permutation length exceeds " + std::to_string(kMaxN));
  std::uint64_t seen = 0;
  for (std::uint8_t v : v_) {
    if (v < 1 || v > n)
      throw NotABijection("value " + std::to_string(int(v)) +
                          " out of range for n=" + std::to_string(n));
    const std::uint64_t bit = 1ull << (v - 1);
    if (seen & bit)
      throw NotABijection("duplicate value " + std::to_string(int(v)));
    seen |= bit;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<std::uint8_t> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = std::uint8_t(i + 1);
  return Permutation(std::move(v));
}

Permutation Permutation::from_one_line(std::span<const int> values) {
  std::vector<std::uint8_t> v;
  v.reserve(values.size());
  for (int x : values) {
    if (x < 1 || x > 255)
      throw NotABijection("value " + std::to_string(x) + " out of range");
    v.push_back(static_cast<std::uint8_t>(x));
  }
  return Permutation(std::move(v));
}

namespace {

std::vector<int> parse_ints(std::string_view text, std::string_view seps) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (seps.find(text[i]) != std::string_view::npos) {
      ++i;
      continue;
    }
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc())
      throw ParseError("expected integer in \"" + std::string(text) + "\"");
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return out;
}

}  // namespace

Permutation Permutation::parse(std::string_view text) {
  auto ints = parse_ints(text, " \t,");
  if (ints.empty()) throw ParseError("empty permutation text");
  return from_one_line(ints);
}

std::string Permutation::str() const {
  std::string out;
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(int(v_[i]));
  }
  return out;
}

std::size_t PermHash::operator()(const Permutation& p) const {
  std::size_t h = 1469598103934665603ull;
  for (std::uint8_t v : p.values()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

CycleForm::CycleForm(std::vector<std::uint8_t> entries) : e_(std::move(entries)) {
  if (e_.empty() || e_[0] != 1)
    throw Error("cycle form must start at 1");
  Permutation check(std::vector<std::uint8_t>(e_.begin(), e_.end()));  // bijection
  (void)check;
}

CycleForm CycleForm::parse(std::string_view text) {
  auto ints = parse_ints(text, " \t,()");
  if (ints.empty()) throw ParseError("empty cycle text");
  std::vector<std::uint8_t> e;
  e.reserve(ints.size());
  for (int x : ints) {
    if (x < 1 || x > 255) throw ParseError("cycle entry out of range");
    e.push_back(static_cast<std::uint8_t>(x));
  }
  return CycleForm(std::move(e));
}

std::string CycleForm::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(int(e_[i]));
  }
  out += ')';
  return out;
}

bool is_cyclic(const Permutation& p) {
  const int n = p.size();
  int cur = p.at(1);
  int steps = 1;
  while (cur != 1) {
    cur = p.at(cur);
    ++steps;
  }
  return steps == n;
}

CycleForm to_cycle(const Permutation& p) {
  if (!is_cyclic(p)) throw NotCyclic("permutation is not a single n-cycle");
  const int n = p.size();
  std::vector<std::uint8_t> e;
  e.reserve(static_cast<std::size_t>(n));
  int cur = 1;
  for (int i = 0; i < n; ++i) {
    e.push_back(static_cast<std::uint8_t>(cur));
    cur = p.at(cur);
  }
  return CycleForm(std::move(e));
}

Permutation from_cycle(const CycleForm& c) {
  const auto entries = c.entries();
  const std::size_t n = entries.size();
  std::vector<std::uint8_t> v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[entries[i] - 1] = entries[(i + 1) % n];
  return Permutation(std::move(v));
}

Permutation symmetry(const Permutation& p, SymmetryKind kind) {
  const int n = p.size();
  const auto src = p.values();
  std::vector<std::uint8_t> v(static_cast<std::size_t>(n));
  switch (kind) {
    case SymmetryKind::reverse:
      for (int i = 0; i < n; ++i) v[i] = src[n - 1 - i];
      break;
    case SymmetryKind::complement:
      for (int i = 0; i < n; ++i) v[i] = std::uint8_t(n + 1 - src[i]);
      break;
    case SymmetryKind::inverse:
      for (int i = 0; i < n; ++i) v[src[i] - 1] = std::uint8_t(i + 1);
      break;
    case SymmetryKind::rc:
      for (int i = 0; i < n; ++i) v[i] = std::uint8_t(n + 1 - src[n - 1 - i]);
      break;
    case SymmetryKind::rci: {
      for (int i = 0; i < n; ++i)
        v[n - src[n - 1 - i]] = std::uint8_t(i + 1);
      break;
    }
  }
  return Permutation(std::move(v));
}

Pattern transformed(Pattern sigma, SymmetryKind kind) {
  const auto s = to_string(sigma);
  std::vector<std::uint8_t> digits = {std::uint8_t(s[0] - '0'),
                                      std::uint8_t(s[1] - '0'),
                                      std::uint8_t(s[2] - '0')};
  Permutation image = symmetry(Permutation(std::move(digits)), kind);
  std::string tag;
  for (std::uint8_t v : image.values()) tag += char('0' + v);
  return pattern_from_string(tag);
}

Permutation reduce(std::span<const int> word) {
  std::vector<int> sorted(word.begin(), word.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DuplicateEntry("reduce requires distinct entries");
  std::vector<std::uint8_t> v;
  v.reserve(word.size());
  for (int x : word) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
    v.push_back(static_cast<std::uint8_t>(it - sorted.begin() + 1));
  }
  return Permutation(std::move(v));
}

namespace {

// Does the word contain an occurrence a_i < a_k < a_j with i < j < k
// (pattern 132)? Right-to-left scan: the stack holds candidates for the "3"
// role, `two` the best value already popped (a valid "2" with its "3" to the
// left). Any later-scanned smaller value completes the pattern.
bool contains_132_core(std::span<const std::uint8_t> w) {
  const int n = static_cast<int>(w.size());
  std::array<std::uint8_t, kMaxN> stack;
  int top = 0;
  int two = 0;
  for (int i = n - 1; i >= 0; --i) {
    if (w[i] < two) return true;
    while (top > 0 && w[i] > stack[top - 1]) two = stack[--top];
    stack[top++] = w[i];
  }
  return false;
}

bool contains_123_core(std::span<const std::uint8_t> w) {
  int lo = kMaxN + 1;  // min so far
  int mid = kMaxN + 1; // min second element of an increasing pair
  for (std::uint8_t v : w) {
    if (v > mid) return true;
    if (v > lo) mid = std::min<int>(mid, v);
    lo = std::min<int>(lo, v);
  }
  return false;
}

bool contains_321_core(std::span<const std::uint8_t> w) {
  int hi = 0;
  int mid = 0;  // max second element of a decreasing pair
  for (std::uint8_t v : w) {
    if (v < mid) return true;
    if (v < hi) mid = std::max<int>(mid, v);
    hi = std::max<int>(hi, v);
  }
  return false;
}

}  // namespace

bool contains(const Permutation& p, Pattern sigma) {
  const auto src = p.values();
  const int n = p.size();
  std::array<std::uint8_t, kMaxN> buf;
  switch (sigma) {
    case Pattern::p123:
      return contains_123_core(src);
    case Pattern::p321:
      return contains_321_core(src);
    case Pattern::p132:
      return contains_132_core(src);
    case Pattern::p231:  // 231^r = 132
      for (int i = 0; i < n; ++i) buf[i] = src[n - 1 - i];
      return contains_132_core({buf.data(), src.size()});
    case Pattern::p312:  // 312^c = 132
      for (int i = 0; i < n; ++i) buf[i] = std::uint8_t(n + 1 - src[i]);
      return contains_132_core({buf.data(), src.size()});
    case Pattern::p213:  // 213^rc = 132
      for (int i = 0; i < n; ++i) buf[i] = std::uint8_t(n + 1 - src[n - 1 - i]);
      return contains_132_core({buf.data(), src.size()});
  }
  return false;
}

bool contains_naive(const Permutation& p, Pattern sigma) {
  const auto s = to_string(sigma);
  const int a = s[0] - '0', b = s[1] - '0', c = s[2] - '0';
  const auto v = p.values();
  const int n = p.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        int x = v[i], y = v[j], z = v[k];
        // order-isomorphic to (a, b, c)?
        int ra = 1 + (x > y) + (x > z);
        int rb = 1 + (y > x) + (y > z);
        int rc = 1 + (z > x) + (z > y);
        if (ra == a && rb == b && rc == c) return true;
      }
  return false;
}

}  // namespace cyclecomb
