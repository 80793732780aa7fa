#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "cyclecomb/dyck.hpp"

using namespace cyclecomb;

namespace {
Permutation P(const char* text) { return Permutation::parse(text); }
}

TEST_CASE("path validation") {
  CHECK_NOTHROW(DyckPath::parse("ud"));
  CHECK_THROWS_AS(DyckPath::parse("du"), Error);
  CHECK_THROWS_AS(DyckPath::parse("uudd u"), ParseError);
  CHECK_THROWS_AS(DyckPath::parse("uud"), Error);
  CHECK(DyckPath::parse("uudd").semilength() == 2);
}

TEST_CASE("encode worked examples") {
  CHECK(to_dyck(P("7 6 8 2 1 3 4 5")).str() == "uududduuuududddd");
  CHECK(to_dyck(P("1")).str() == "ud");
  CHECK(to_dyck(P("4 5 3 1 2 6 7")).str() == "uuuudduduudddd");
  CHECK_THROWS_AS(to_dyck(P("1 3 2")), PreconditionFailed);
}

TEST_CASE("decode worked examples") {
  CHECK(from_dyck(DyckPath::parse("uuuudduduudddd")) == P("4 5 3 1 2 6 7"));
  CHECK(from_dyck(DyckPath::parse("ud")) == P("1"));
  CHECK(from_dyck(DyckPath::parse("uududduuuududddd")) == P("7 6 8 2 1 3 4 5"));
}

TEST_CASE("bijection both ways at small sizes") {
  // every 132-avoider round-trips
  for (int n = 1; n <= 9; ++n)
    for_each_avoider(n, Pattern::p132, [&](const Permutation& p) {
      CHECK(from_dyck(to_dyck(p)) == p);
    });
  // every Dyck path of semilength <= 9 round-trips; enumerate recursively
  std::vector<std::string> paths;
  std::string cur;
  auto gen = [&](auto&& self, int open, int closed, int n) -> void {
    if ((int)cur.size() == 2 * n) {
      paths.push_back(cur);
      return;
    }
    if (open < n) {
      cur.push_back('u');
      self(self, open + 1, closed, n);
      cur.pop_back();
    }
    if (closed < open) {
      cur.push_back('d');
      self(self, open, closed + 1, n);
      cur.pop_back();
    }
  };
  for (int n = 1; n <= 9; ++n) {
    paths.clear();
    gen(gen, 0, 0, n);
    for (const auto& s : paths) {
      const DyckPath d = DyckPath::parse(s);
      const Permutation p = from_dyck(d);
      CHECK(avoids(p, Pattern::p132));
      CHECK(to_dyck(p).str() == s);
    }
  }
}

TEST_CASE("insert_ud") {
  CHECK(insert_ud(DyckPath::parse("ud"), 0).str() == "udud");
  CHECK(insert_ud(DyckPath::parse("uududduuuududddd"), 7).str() ==
        "uududduuduuududddd");
  CHECK_THROWS_AS(insert_ud(DyckPath::parse("ud"), 3), IndexOutOfRange);
  CHECK_THROWS_AS(insert_ud(DyckPath::parse("ud"), -1), IndexOutOfRange);

  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 200; ++trial) {
    // random Dyck path by cutting a random balanced word at its minimum
    const int n = 1 + int(rng() % 10);
    std::string w(std::size_t(n), 'u');
    w.append(std::size_t(n), 'd');
    std::shuffle(w.begin(), w.end(), rng);
    int h = 0, best = 0, cut = 0;
    for (int i = 0; i < 2 * n; ++i) {
      h += w[std::size_t(i)] == 'u' ? 1 : -1;
      if (h < best) {
        best = h;
        cut = i + 1;
      }
    }
    const std::string cycled = w.substr(std::size_t(cut)) + w.substr(0, std::size_t(cut));
    const DyckPath d = DyckPath::parse(cycled);
    const int idx = int(rng() % std::size_t(d.length() + 1));
    CHECK_NOTHROW(insert_ud(d, idx));  // splice preserves the prefix property
  }
}

TEST_CASE("augmentation worked examples") {
  CHECK(augment_left(P("7 6 8 2 1 3 4 5")) == P("8 7 9 5 2 1 3 4 6"));
  CHECK(augment_left(P("2 1")) == P("2 3 1"));
  CHECK(augment_right(P("2 1")) == P("3 1 2"));
  CHECK_THROWS_AS(augment_left(P("1 2")), PreconditionFailed);
}

TEST_CASE("augmentations stay cyclic, are injective, and have disjoint images") {
  for (int n = 2; n <= 9; ++n) {
    const auto src = collect_cyclic_avoiders(n, Pattern::p132);
    std::set<Permutation> left, right;
    for (const auto& p : src) {
      const auto l = augment_left(p);
      const auto r = augment_right(p);
      CHECK(is_cyclic(l));
      CHECK(avoids(l, Pattern::p132));
      CHECK(is_cyclic(r));
      CHECK(avoids(r, Pattern::p132));
      left.insert(l);
      right.insert(r);
    }
    CHECK(left.size() == src.size());
    CHECK(right.size() == src.size());
    std::vector<Permutation> common;
    std::set_intersection(left.begin(), left.end(), right.begin(), right.end(),
                          std::back_inserter(common));
    CHECK(common.empty());
  }
}

TEST_CASE("doubling report") {
  CountTable table;
  for (int n : {3, 8}) {
    const auto rep = verify_doubling(n, table);
    CHECK(rep.passed());
  }
  CHECK(table.require(Pattern::p132, 8) == 182);
  CHECK(table.require(Pattern::p132, 7) == 68);
}
