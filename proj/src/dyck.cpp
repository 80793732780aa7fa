#include "cyclecomb/dyck.hpp"

#include <algorithm>
#include <bit>

#include "cyclecomb/detail/word.hpp"

namespace cyclecomb {

DyckPath::DyckPath(std::string steps) : steps_(std::move(steps)) {
  if (steps_.size() % 2 != 0 || steps_.empty())
    throw Error("Dyck path needs an even, positive number of steps");
  if (steps_.size() > 2 * std::size_t(kMaxN))
    throw LimitExceeded("Dyck path semilength exceeds " + std::to_string(kMaxN));
  int h = 0;
  for (char c : steps_) {
    if (c == 'u') ++h;
    else if (c == 'd') --h;
    else throw ParseError("Dyck step must be 'u' or 'd'");
    if (h < 0) throw Error("Dyck prefix dips below zero");
  }
  if (h != 0) throw Error("Dyck path is unbalanced");
}

DyckPath DyckPath::parse(std::string_view text) {
  return DyckPath(std::string(text));
}

int DyckPath::height_after_down(int k) const {
  int h = 0, seen = 0;
  for (char c : steps_) {
    h += c == 'u' ? 1 : -1;
    if (c == 'd' && ++seen == k) return h;
  }
  throw IndexOutOfRange("fewer than " + std::to_string(k) + " down steps");
}

DyckPath to_dyck(const Permutation& p) {
  if (contains(p, Pattern::p132))
    throw PreconditionFailed(Violation::pattern, "permutation contains 132");
  const int n = p.size();
  std::string steps;
  steps.reserve(2 * std::size_t(n));
  int prev_value = n + 1;  // value of the previous left-to-right minimum
  int low = n + 1;
  // collect minima positions first so the gap to the next one is at hand
  std::vector<int> minima;
  for (int i = 1; i <= n; ++i)
    if (p.at(i) < low) {
      low = p.at(i);
      minima.push_back(i);
    }
  for (std::size_t j = 0; j < minima.size(); ++j) {
    const int pos = minima[j];
    const int next_pos = j + 1 < minima.size() ? minima[j + 1] : n + 1;
    steps.append(std::size_t(prev_value - p.at(pos)), 'u');
    steps.append(std::size_t(next_pos - pos), 'd');
    prev_value = p.at(pos);
  }
  return DyckPath(std::move(steps));
}

Permutation from_dyck(const DyckPath& d) {
  const int n = d.semilength();
  std::vector<std::uint8_t> out;
  out.reserve(std::size_t(n));
  std::uint64_t remaining = n == 64 ? ~0ull : (1ull << n) - 1;
  int h = 0;
  for (char c : d.str()) {
    if (c == 'u') {
      ++h;
      continue;
    }
    --h;
    // (h+1)-th largest remaining value: skip h set bits from the top
    std::uint64_t pool = remaining;
    int v = 0;
    for (int skip = h;; --skip) {
      v = 64 - std::countl_zero(pool);
      if (skip == 0) break;
      pool &= ~(1ull << (v - 1));
    }
    out.push_back(std::uint8_t(v));
    remaining &= ~(1ull << (v - 1));
  }
  return PermBuilder::adopt(std::move(out));
}

DyckPath insert_ud(const DyckPath& d, int idx) {
  if (idx < 0 || idx > d.length())
    throw IndexOutOfRange("splice index " + std::to_string(idx) +
                          " outside [0, " + std::to_string(d.length()) + "]");
  std::string steps = d.str();
  steps.insert(std::size_t(idx), "ud");
  return DyckPath(std::move(steps));
}

namespace {

Permutation augment(const Permutation& p, int idx) {
  if (p.size() < 2)
    throw PreconditionFailed(Violation::length, "need length >= 2");
  if (!is_cyclic(p))
    throw PreconditionFailed(Violation::cyclic, "permutation is not cyclic");
  return from_dyck(insert_ud(to_dyck(p), idx));
}

}  // namespace

Permutation augment_left(const Permutation& p) {
  return augment(p, p.size() - 1);
}

Permutation augment_right(const Permutation& p) {
  return augment(p, p.size() + 1);
}

Report verify_doubling(int n, CountTable& table, const EnumLimits& limits) {
  Report report{"doubling(132, n=" + std::to_string(n) + ")", {}};
  const auto smaller = collect_cyclic_avoiders(n - 1, Pattern::p132, limits);
  std::vector<Permutation> left, right;
  left.reserve(smaller.size());
  right.reserve(smaller.size());
  for (const auto& p : smaller) {
    left.push_back(augment_left(p));
    right.push_back(augment_right(p));
  }
  auto in_target = [&](const std::vector<Permutation>& image) {
    for (const auto& q : image)
      if (q.size() != n || !is_cyclic(q) || contains(q, Pattern::p132))
        return false;
    return true;
  };
  report.add("left image in C_n(132)", in_target(left));
  report.add("right image in C_n(132)", in_target(right));

  auto unique_size = [](std::vector<Permutation> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v.size();
  };
  report.add("left augmentation injective", unique_size(left) == smaller.size());
  report.add("right augmentation injective",
             unique_size(right) == smaller.size());

  std::vector<Permutation> ls = left, rs = right;
  std::sort(ls.begin(), ls.end());
  std::sort(rs.begin(), rs.end());
  std::vector<Permutation> common;
  std::set_intersection(ls.begin(), ls.end(), rs.begin(), rs.end(),
                        std::back_inserter(common));
  report.add("images disjoint", common.empty());

  const std::int64_t cn = count_cyclic(n, Pattern::p132, table, limits);
  const std::int64_t cn1 = count_cyclic(n - 1, Pattern::p132, table, limits);
  report.add("c_n >= 2 c_{n-1}", cn >= 2 * cn1,
             std::to_string(cn) + " vs 2*" + std::to_string(cn1));
  return report;
}

}  // namespace cyclecomb
