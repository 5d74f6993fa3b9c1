#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "zpd/perm.hpp"
#include "zpd/rng.hpp"

using namespace zpd;

TEST_CASE("compose basics") {
  Perm id(3);
  Perm q = Perm::from_one_line_1based({1, 3, 2});
  CHECK(compose(id, q) == q);
  CHECK(compose(q, q.inverse()) == id);

  // (1 2) o (2 3): direct table evaluation gives the 3-cycle 1->2->3->1.
  Perm t12 = Perm::from_one_line_1based({2, 1, 3});
  Perm t23 = Perm::from_one_line_1based({1, 3, 2});
  CHECK(compose(t12, t23) == Perm::from_one_line_1based({2, 3, 1}));

  CHECK_THROWS(compose(Perm(2), Perm(3)));
}

TEST_CASE("cycle decomposition") {
  CHECK(cycle_decomposition(Perm(4)).cycles.empty());

  Perm t13 = Perm::from_one_line_1based({3, 2, 1});
  auto form = cycle_decomposition(t13);
  REQUIRE(form.cycles.size() == 1);
  CHECK(form.cycles[0] == std::vector<int>{0, 2});

  SplitMix64 rng(5);
  auto s5 = all_perms(5);
  for (int it = 0; it < 50; ++it) {
    const Perm& p = s5[rng.below(s5.size())];
    auto f = cycle_decomposition(p);
    int fixed = 0;
    for (int i = 0; i < 5; ++i)
      if (p(i) == i) ++fixed;
    CHECK(f.moved_points() + fixed == 5);
    // cycles reproduce p
    for (const auto& c : f.cycles)
      for (std::size_t i = 0; i < c.size(); ++i)
        CHECK(p(c[i]) == c[(i + 1) % c.size()]);
  }
}

TEST_CASE("cayley distance examples") {
  Perm id(4);
  Perm t = Perm::from_one_line_1based({2, 1, 3, 4});
  Perm c3 = Perm::from_one_line_1based({2, 3, 1, 4});
  CHECK(cayley_distance(t, t) == 0);
  CHECK(cayley_distance(id, t) == 1);
  CHECK(cayley_distance(id, c3) == 2);
  CHECK(cayley_distance_bfs(id, c3) == 2);
}

TEST_CASE("closed form equals BFS oracle on all of S_4") {
  auto s4 = all_perms(4);
  for (const auto& p : s4)
    for (const auto& q : s4)
      CHECK(cayley_distance(p, q) == cayley_distance_bfs(p, q));
}

TEST_CASE("left invariance on random S_5 triples") {
  auto s5 = all_perms(5);
  SplitMix64 rng(9);
  for (int it = 0; it < 300; ++it) {
    const Perm& p = s5[rng.below(s5.size())];
    const Perm& q = s5[rng.below(s5.size())];
    const Perm& r = s5[rng.below(s5.size())];
    CHECK(cayley_distance(compose(r, p), compose(r, q)) == cayley_distance(p, q));
  }
}

TEST_CASE("canonicalize_quotient examples") {
  {
    auto cq = canonicalize_quotient(Perm(4));
    CHECK(cq.form.cycles.empty());
    CHECK(cq.theta == Perm(4));
    CHECK(cq.canonical == Perm(4));
  }
  {
    // single 3-cycle on {2,4,5} (1-based) -> canonical (3 2 1)
    Perm q = Perm::from_one_line_1based({1, 4, 3, 5, 2});
    auto cq = canonicalize_quotient(q);
    CHECK(cq.s == std::vector<int>{3});
    CHECK(cq.canonical == Perm::from_one_line_1based({3, 1, 2, 4, 5}));
    CHECK(compose(cq.theta, compose(q, cq.theta.inverse())) == cq.canonical);
  }
  {
    // cycles of lengths (2,3): endpoints s = (2,5), evens first
    Perm q = Perm::from_one_line_1based({2, 1, 4, 5, 3});
    auto cq = canonicalize_quotient(q);
    CHECK(cq.s == std::vector<int>{2, 5});
    CHECK(cq.even_count == 1);
    CHECK(compose(cq.theta, compose(q, cq.theta.inverse())) == cq.canonical);
  }
}

TEST_CASE("canonicalize_quotient conjugation identity (randomized)") {
  auto s6 = all_perms(6);
  SplitMix64 rng(13);
  for (int it = 0; it < 200; ++it) {
    const Perm& q = s6[rng.below(s6.size())];
    auto cq = canonicalize_quotient(q);
    CHECK(compose(cq.theta, compose(q, cq.theta.inverse())) == cq.canonical);
    // cycle type preserved
    auto a = cycle_decomposition(q).lengths();
    auto b = cq.form.lengths();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
    // even-length cycles come first
    for (int i = 0; i + 1 < int(cq.form.cycles.size()); ++i)
      if (cq.form.cycles[i].size() % 2 == 1)
        CHECK(cq.form.cycles[i + 1].size() % 2 == 1);
  }
}
