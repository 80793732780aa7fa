#include "cyclecomb/avoiders.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <fstream>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "cyclecomb/detail/word.hpp"

namespace cyclecomb {

namespace {

// Value-set masks: bit v-1 stands for the value v.
inline std::uint64_t mask_lt(int v) {
  return v <= 1 ? 0 : (v > 64 ? ~0ull : (1ull << (v - 1)) - 1);
}
inline std::uint64_t mask_gt(int v) {
  return v >= 64 ? 0 : ~0ull << v;
}

// Per-prefix pruning state. `bad` is the set of values that would complete an
// occurrence of sigma ending at the next position; it only grows along a
// branch, which is exactly the prefix-monotonicity of containment.
struct NodeState {
  std::uint64_t bad = 0;
  std::uint8_t lo = 255;  // smallest prefix value so far
  std::uint8_t hi = 0;    // largest prefix value so far
};

// Extends the state by the value x appended at the end of the prefix.
// For each sigma, the new forbidden values are those completing an occurrence
// whose first two elements end at x:
//   123: pairs (p, x) with p < x forbid everything above x
//   321: pairs (p, x) with p > x forbid everything below x
//   213: pairs (p, x) with p > x forbid values above the smallest such p
//   231: pairs (p, x) with p < x forbid values below the largest such p
//   132: pairs (p, x) with p < x forbid the open interval (min prefix, x)
//   312: pairs (p, x) with p > x forbid the open interval (x, max prefix)
inline NodeState push_state(Pattern sigma, const NodeState& cur,
                            std::uint64_t used, int x) {
  NodeState s = cur;
  switch (sigma) {
    case Pattern::p123:
      if (cur.lo < x) s.bad |= mask_gt(x);
      break;
    case Pattern::p321:
      if (cur.hi > x) s.bad |= mask_lt(x);
      break;
    case Pattern::p213: {
      const std::uint64_t above = used & mask_gt(x);
      if (above) s.bad |= mask_gt(std::countr_zero(above) + 1);
      break;
    }
    case Pattern::p231: {
      const std::uint64_t below = used & mask_lt(x);
      if (below) s.bad |= mask_lt(std::bit_width(below));
      break;
    }
    case Pattern::p132:
      if (cur.lo < x) s.bad |= mask_gt(cur.lo) & mask_lt(x);
      break;
    case Pattern::p312:
      if (cur.hi > x) s.bad |= mask_gt(x) & mask_lt(cur.hi);
      break;
  }
  if (x < s.lo) s.lo = std::uint8_t(x);
  if (x > s.hi) s.hi = std::uint8_t(x);
  return s;
}

struct BudgetTracker {
  std::uint64_t budget;
  std::atomic<std::uint64_t>* shared = nullptr;  // null in serial mode
  std::atomic<bool>* stop = nullptr;
  std::uint64_t local = 0;
  std::uint64_t flushed = 0;

  static constexpr std::uint64_t kBatch = 1 << 10;

  // Returns false when the budget is exhausted (or another worker stopped).
  inline bool tick() {
    ++local;
    if (shared == nullptr) return local <= budget;
    if ((local & (kBatch - 1)) == 0) return flush();
    return true;
  }

  // Publishes locally counted nodes; false when over budget or stopped.
  bool flush() {
    const std::uint64_t delta = local - flushed;
    flushed = local;
    if (shared == nullptr) return local <= budget;
    const std::uint64_t total =
        shared->fetch_add(delta, std::memory_order_relaxed) + delta;
    if (total > budget || stop->load(std::memory_order_relaxed)) {
      stop->store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }
};

template <class Sink>
class Dfs {
 public:
  Dfs(std::span<const std::uint64_t> allowed, Pattern sigma, Sink& sink,
      BudgetTracker& budget)
      : allowed_(allowed),
        length_(static_cast<int>(allowed.size())),
        sigma_(sigma),
        sink_(sink),
        budget_(budget) {}

  // Runs the whole tree (serial entry point).
  void run() {
    state_[0] = NodeState{};
    descend(0);
  }

  // Runs the subtree with position 0 pinned to `first` (parallel partitions).
  void run_partition(int first) {
    state_[0] = NodeState{};
    buf_[0] = std::uint8_t(first);
    used_ = 1ull << (first - 1);
    state_[1] = push_state(sigma_, state_[0], 0, first);
    if (!budget_.tick()) throw LimitExceeded("enumeration node budget exceeded");
    descend(1);
  }

 private:
  void descend(int pos) {
    if (pos == length_) {
      sink_({buf_.data(), static_cast<std::size_t>(length_)});
      return;
    }
    std::uint64_t cand = allowed_[pos] & ~used_ & ~state_[pos].bad;
    while (cand) {
      const int bit = std::countr_zero(cand);
      cand &= cand - 1;
      const int x = bit + 1;
      if (!budget_.tick())
        throw LimitExceeded("enumeration node budget exceeded");
      state_[pos + 1] = push_state(sigma_, state_[pos], used_, x);
      buf_[pos] = std::uint8_t(x);
      used_ |= 1ull << bit;
      descend(pos + 1);
      used_ &= ~(1ull << bit);
    }
  }

  std::span<const std::uint64_t> allowed_;
  int length_;
  Pattern sigma_;
  Sink& sink_;
  BudgetTracker& budget_;
  std::uint64_t used_ = 0;
  std::array<std::uint8_t, kMaxN> buf_{};
  std::array<NodeState, kMaxN + 1> state_{};
};

using Word = std::span<const std::uint8_t>;

void check_masks(std::span<const std::uint64_t> allowed) {
  if (allowed.empty()) throw Error("empty position list");
  if (allowed.size() > static_cast<std::size_t>(kMaxN))
    throw LimitExceeded("n exceeds " + std::to_string(kMaxN));
  std::uint64_t pool = 0;
  for (std::uint64_t m : allowed) pool |= m;
  if (std::popcount(pool) != static_cast<int>(allowed.size()))
    throw Error("value pool size does not match word length");
  // cyclicity checks assume the pool is exactly [1..n]
  if (pool != (allowed.size() == 64 ? ~0ull : (1ull << allowed.size()) - 1))
    throw Error("value pool must be [1..n]");
}

std::vector<std::uint64_t> full_masks(int n) {
  if (n < 1) throw Error("n must be positive");
  if (n > kMaxN) throw LimitExceeded("n exceeds " + std::to_string(kMaxN));
  const std::uint64_t all = n == 64 ? ~0ull : (1ull << n) - 1;
  return std::vector<std::uint64_t>(static_cast<std::size_t>(n), all);
}

// Serial driver used by the visitor-based entry points.
template <class Sink>
void run_serial(std::span<const std::uint64_t> allowed, Pattern sigma,
                const EnumLimits& limits, Sink&& sink) {
  BudgetTracker budget{limits.node_budget};
  Dfs<Sink> dfs(allowed, sigma, sink, budget);
  dfs.run();
}

// Parallel driver: one task per first-element value, results delivered into
// per-partition slots and combined in value order so that the outcome is
// identical to the serial run.
template <class MakeSink, class Combine>
void run_partitioned(std::span<const std::uint64_t> allowed, Pattern sigma,
                     const EnumLimits& limits, MakeSink&& make_sink,
                     Combine&& combine) {
  std::vector<int> firsts;
  for (int v = 1; v <= static_cast<int>(allowed.size()); ++v)
    if (allowed[0] & (1ull << (v - 1))) firsts.push_back(v);
  if (allowed.size() == 1) {
    // single position: partitions are the leaves themselves
  }

  using SinkT = std::decay_t<decltype(make_sink())>;
  std::vector<SinkT> slots;
  slots.reserve(firsts.size());
  for (std::size_t i = 0; i < firsts.size(); ++i) slots.push_back(make_sink());

  const int workers =
      std::max(1, std::min<int>(limits.threads, static_cast<int>(firsts.size())));
  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> exceeded{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto work = [&] {
    for (;;) {
      const std::size_t idx = next.fetch_add(1, std::memory_order_relaxed);
      if (idx >= firsts.size()) return;
      if (stop.load(std::memory_order_relaxed)) return;
      BudgetTracker budget{limits.node_budget, &nodes, &stop};
      try {
        Dfs<SinkT> dfs(allowed, sigma, slots[idx], budget);
        dfs.run_partition(firsts[idx]);
        if (!budget.flush())
          throw LimitExceeded("enumeration node budget exceeded");
      } catch (const LimitExceeded&) {
        exceeded.store(true, std::memory_order_relaxed);
        stop.store(true, std::memory_order_relaxed);
        return;
      } catch (...) {
        std::scoped_lock lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        stop.store(true, std::memory_order_relaxed);
        return;
      }
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);
  if (exceeded.load()) throw LimitExceeded("enumeration node budget exceeded");
  for (std::size_t i = 0; i < slots.size(); ++i) combine(slots[i]);
}

struct CountSink {
  bool cyclic_only = false;
  std::int64_t count = 0;
  void operator()(Word w) {
    if (!cyclic_only || detail::is_cyclic_word(w)) ++count;
  }
};

struct CollectSink {
  bool cyclic_only = false;
  std::vector<Permutation> out;
  void operator()(Word w) {
    if (!cyclic_only || detail::is_cyclic_word(w))
      out.push_back(PermBuilder::adopt({w.begin(), w.end()}));
  }
};

}  // namespace

void for_each_avoider_masked(std::span<const std::uint64_t> allowed,
                             Pattern sigma, const PermVisitor& fn,
                             const EnumLimits& limits) {
  check_masks(allowed);
  run_serial(allowed, sigma, limits,
             [&](Word w) { fn(PermBuilder::adopt({w.begin(), w.end()})); });
}

void for_each_avoider(int n, Pattern sigma, const PermVisitor& fn,
                      const EnumLimits& limits) {
  const auto masks = full_masks(n);
  run_serial(masks, sigma, limits,
             [&](Word w) { fn(PermBuilder::adopt({w.begin(), w.end()})); });
}

void for_each_cyclic_avoider(int n, Pattern sigma, const PermVisitor& fn,
                             const EnumLimits& limits) {
  const auto masks = full_masks(n);
  run_serial(masks, sigma, limits, [&](Word w) {
    if (detail::is_cyclic_word(w))
      fn(PermBuilder::adopt({w.begin(), w.end()}));
  });
}

namespace {

std::vector<Permutation> collect_impl(std::span<const std::uint64_t> masks,
                                      Pattern sigma, bool cyclic_only,
                                      const EnumLimits& limits) {
  std::vector<Permutation> all;
  run_partitioned(
      masks, sigma, limits, [&] { return CollectSink{cyclic_only, {}}; },
      [&](CollectSink& s) {
        all.insert(all.end(), std::make_move_iterator(s.out.begin()),
                   std::make_move_iterator(s.out.end()));
      });
  return all;
}

std::int64_t count_impl(std::span<const std::uint64_t> masks, Pattern sigma,
                        bool cyclic_only, const EnumLimits& limits) {
  std::int64_t total = 0;
  run_partitioned(
      masks, sigma, limits, [&] { return CountSink{cyclic_only, 0}; },
      [&](CountSink& s) { total += s.count; });
  return total;
}

}  // namespace

std::vector<Permutation> collect_avoiders(int n, Pattern sigma,
                                          const EnumLimits& limits) {
  return collect_impl(full_masks(n), sigma, false, limits);
}

std::vector<Permutation> collect_cyclic_avoiders(int n, Pattern sigma,
                                                 const EnumLimits& limits) {
  return collect_impl(full_masks(n), sigma, true, limits);
}

std::vector<Permutation> collect_cyclic_avoiders_masked(
    std::span<const std::uint64_t> allowed, Pattern sigma,
    const EnumLimits& limits) {
  check_masks(allowed);
  return collect_impl(allowed, sigma, true, limits);
}

std::int64_t count_avoiders(int n, Pattern sigma, const EnumLimits& limits) {
  return count_impl(full_masks(n), sigma, false, limits);
}

std::int64_t count_cyclic_avoiders(int n, Pattern sigma,
                                   const EnumLimits& limits) {
  return count_impl(full_masks(n), sigma, true, limits);
}

std::int64_t count_filtered(int n, Pattern sigma, const PermPredicate& pred,
                            const EnumLimits& limits) {
  const auto masks = full_masks(n);
  std::int64_t count = 0;
  run_serial(masks, sigma, limits, [&](Word w) {
    if (!detail::is_cyclic_word(w)) return;
    if (pred(PermBuilder::adopt({w.begin(), w.end()}))) ++count;
  });
  return count;
}

std::int64_t brute_force_count(int n, Pattern sigma) {
  if (n < 1) throw Error("n must be positive");
  if (n > 10) throw LimitExceeded("brute force supports n <= 10");
  std::vector<std::uint8_t> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = std::uint8_t(i + 1);
  std::int64_t count = 0;
  do {
    const Permutation p = PermBuilder::adopt(w);
    if (!contains_naive(p, sigma) && detail::is_cyclic_word(p.values()))
      ++count;
  } while (std::next_permutation(w.begin(), w.end()));
  return count;
}

// --- CountTable --------------------------------------------------------------

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::generated: return "generated";
    case Provenance::brute_force: return "brute_force";
    case Provenance::fixture: return "fixture";
  }
  return "?";
}

namespace {
int provenance_rank(Provenance p) {
  switch (p) {
    case Provenance::generated: return 2;
    case Provenance::brute_force: return 1;
    case Provenance::fixture: return 0;
  }
  return -1;
}
}  // namespace

std::optional<std::int64_t> CountTable::lookup(Pattern sigma, int n) const {
  auto it = entries_.find({sigma, n});
  if (it == entries_.end()) return std::nullopt;
  return it->second.count;
}

std::int64_t CountTable::require(Pattern sigma, int n) const {
  auto v = lookup(sigma, n);
  if (!v)
    throw MissingCount("no count for c_" + std::to_string(n) + "(" +
                       std::string(to_string(sigma)) + ")");
  return *v;
}

void CountTable::insert(Pattern sigma, int n, std::int64_t count,
                        Provenance prov) {
  if (count < 0) throw Error("negative count");
  auto [it, inserted] = entries_.try_emplace({sigma, n}, Entry{count, prov});
  if (inserted) return;
  if (it->second.count != count)
    throw CountMismatch("c_" + std::to_string(n) + "(" +
                        std::string(to_string(sigma)) + "): stored " +
                        std::to_string(it->second.count) + " (" +
                        std::string(to_string(it->second.provenance)) +
                        ") vs inserted " + std::to_string(count) + " (" +
                        std::string(to_string(prov)) + ")");
  if (provenance_rank(prov) > provenance_rank(it->second.provenance))
    it->second.provenance = prov;
}

std::int64_t count_cyclic(int n, Pattern sigma, CountTable& table,
                          const EnumLimits& limits) {
  if (auto hit = table.lookup(sigma, n)) return *hit;
  const std::int64_t c = count_cyclic_avoiders(n, sigma, limits);
  table.insert(sigma, n, c, Provenance::generated);
  return c;
}

// --- persistence -------------------------------------------------------------

void write_counts_csv(std::ostream& os, const CountTable& table) {
  os << "pattern,n,count,provenance\n";
  for (const auto& [key, entry] : table.entries())
    os << to_string(key.first) << ',' << key.second << ',' << entry.count
       << ',' << to_string(entry.provenance) << '\n';
}

CountTable parse_counts_csv(std::istream& is) {
  CountTable table;
  std::string line;
  bool header = true;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (header) {
      if (line != "pattern,n,count,provenance")
        throw ParseError("bad counts CSV header: " + line);
      header = false;
      continue;
    }
    std::istringstream row(line);
    std::string pat, ns, cs, ps;
    if (!std::getline(row, pat, ',') || !std::getline(row, ns, ',') ||
        !std::getline(row, cs, ',') || !std::getline(row, ps, ','))
      throw ParseError("bad counts CSV row: " + line);
    Provenance prov;
    if (ps == "generated") prov = Provenance::generated;
    else if (ps == "brute_force") prov = Provenance::brute_force;
    else if (ps == "fixture") prov = Provenance::fixture;
    else throw ParseError("bad provenance: " + ps);
    table.insert(pattern_from_string(pat), std::stoi(ns), std::stoll(cs), prov);
  }
  return table;
}

void load_bfile(CountTable& table, const std::filesystem::path& file,
                Pattern sigma) {
  std::ifstream is(file);
  if (!is) throw Error("cannot open b-file: " + file.string());
  std::string line;
  while (std::getline(is, line)) {
    const auto start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream row(line);
    long long idx = 0, value = 0;
    if (!(row >> idx >> value))
      throw ParseError("bad b-file line in " + file.string() + ": " + line);
    if (idx < 1 || idx > kMaxN) continue;
    table.insert(sigma, static_cast<int>(idx), value, Provenance::fixture);
  }
}

void load_fixture_dir(CountTable& table, const std::filesystem::path& dir) {
  const auto manifest_path = dir / "manifest.json";
  std::ifstream is(manifest_path);
  if (!is) throw Error("cannot open manifest: " + manifest_path.string());
  nlohmann::json manifest;
  is >> manifest;
  for (const auto& [tag, value] : manifest.items()) {
    const Pattern sigma = pattern_from_string(tag);
    load_bfile(table, dir / value.get<std::string>(), sigma);
  }
}

}  // namespace cyclecomb
