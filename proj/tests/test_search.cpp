#include <doctest.h>

#include <random>

#include "iofpar/fence.hpp"
#include "iofpar/generators.hpp"
#include "iofpar/search.hpp"
#include "test_util.hpp"

using namespace iofpar;
using iofpar::test::pinj;

TEST_CASE("element sets are canonical") {
  auto a = pinj(3, {{1, 3}});
  auto b = pinj(3, {{1, 1}});
  ElementSet s(3, {a, b, a});
  CHECK(s.size() == 2);
  CHECK(s.elements()[0] == b);  // sorted
  CHECK(s.contains(a));
  CHECK_FALSE(s.contains(PartialInjection::identity(3)));
  CHECK_THROWS_AS(ElementSet(3, {PartialInjection::identity(4)}), ValueError);
}

TEST_CASE("member counts at listed sizes") {
  CHECK(enumerate_members(1).size() == 2);
  CHECK(enumerate_members(2).size() == 4);
  CHECK(enumerate_members(3).size() == 10);

  // the ten elements over n=3, spelled out
  ElementSet expect(3, {
      PartialInjection::identity(3), PartialInjection::empty(3),
      pinj(3, {{1, 1}}), pinj(3, {{2, 2}}), pinj(3, {{3, 3}}),
      pinj(3, {{1, 1}, {2, 2}}), pinj(3, {{1, 1}, {3, 3}}), pinj(3, {{2, 2}, {3, 3}}),
      pinj(3, {{1, 3}}), pinj(3, {{3, 1}}),
  });
  CHECK(enumerate_members(3) == expect);
}

TEST_CASE("member counts, frozen regression values") {
  CHECK(enumerate_members(4).size() == 22);
  CHECK(enumerate_members(5).size() == 52);
  CHECK(enumerate_members(6).size() == 120);
  CHECK(enumerate_members(7).size() == 286);
  CHECK(enumerate_members(8).size() == 678);
}

TEST_CASE("enumeration agrees with the direct filter, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<PartialInjection> filtered;
    for (const auto& a : all_partial_injections(n)) {
      if (is_member_direct(a)) filtered.push_back(a);
    }
    CHECK(enumerate_members(n) == ElementSet(n, std::move(filtered)));
  }
}

TEST_CASE("sizes of the full partial-injection monoids") {
  CHECK(all_partial_injections(1).size() == 2);
  CHECK(all_partial_injections(2).size() == 7);
  CHECK(all_partial_injections(3).size() == 34);
  CHECK(all_partial_injections(4).size() == 209);
  CHECK(all_partial_injections(5).size() == 1546);
  CHECK_THROWS_AS(all_partial_injections(9), ValueError);
}

TEST_CASE("closures") {
  SUBCASE("the v generators produce exactly the partial identities") {
    for (int n : {3, 4, 5}) {
      std::vector<PartialInjection> vs;
      for (int i = 1; i <= n; ++i) vs.push_back(gen_v(n, i));
      auto c = closure(n, vs);
      CHECK(c.size() == (std::size_t{1} << n));
      for (const auto& e : c.elements()) CHECK(e.is_partial_identity());
    }
  }

  SUBCASE("empty generating set gives the trivial monoid") {
    auto c = closure(4, {});
    CHECK(c.size() == 1);
    CHECK(c.contains(PartialInjection::identity(4)));
  }

  SUBCASE("the standard generating set saturates to the whole monoid") {
    std::vector<PartialInjection> a4;
    for (auto& [name, g] : standard_generating_set(4)) a4.push_back(g);
    CHECK(closure(4, a4) == enumerate_members(4));
    CHECK(is_generating(4, a4));
  }

  SUBCASE("monotone in the generators") {
    std::mt19937 rng(31);
    const auto members = enumerate_members(5).elements();
    std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<PartialInjection> small;
      for (int i = 0; i < 3; ++i) small.push_back(members[pick(rng)]);
      std::vector<PartialInjection> big = small;
      big.push_back(members[pick(rng)]);
      auto cs = closure(5, small);
      auto cb = closure(5, big);
      for (const auto& e : cs.elements()) CHECK(cb.contains(e));
    }
  }

  SUBCASE("result ignores generator order") {
    std::vector<PartialInjection> gens;
    for (auto& [name, g] : standard_generating_set(5)) gens.push_back(g);
    auto forward = closure(5, gens);
    std::reverse(gens.begin(), gens.end());
    CHECK(closure(5, gens) == forward);
  }

  SUBCASE("universe mismatch is rejected") {
    std::vector<PartialInjection> gens{PartialInjection::identity(3)};
    CHECK_THROWS_AS(closure(4, gens), ValueError);
  }
}

TEST_CASE("dropping the extreme shift generator breaks generation") {
  std::vector<PartialInjection> gens;
  for (auto& [name, g] : standard_generating_set(4)) {
    if (name != "u2") gens.push_back(g);
  }
  CHECK_FALSE(is_generating(4, gens));
}

TEST_CASE("the full member set generates itself") {
  auto members = enumerate_members(4);
  CHECK(is_generating(4, members.elements()));
}

TEST_CASE("rank classification") {
  for (int n = 4; n <= 6; ++n) {
    auto top = classify_rank(n, n);
    CHECK(top.size() == 1);
    CHECK(top.contains(PartialInjection::identity(n)));

    auto co1 = classify_rank(n, n - 1);
    CHECK(co1.size() == static_cast<std::size_t>(n));
    for (const auto& e : co1.elements()) CHECK(e.is_partial_identity());
    for (int i = 1; i <= n; ++i) CHECK(co1.contains(gen_v(n, i)));

    auto co2 = classify_rank(n, n - 2);
    CHECK(co2.size() == static_cast<std::size_t>(n * (n - 1) / 2 + 2));
    CHECK(co2.contains(gen_u(n, n - 2)));
    CHECK(co2.contains(gen_x(n, n - 2)));
  }
  CHECK_THROWS_AS(classify_rank(4, 5), ValueError);
  CHECK_THROWS_AS(classify_rank(4, -1), ValueError);
}

TEST_CASE("rank class sizes partition the monoid, frozen distributions") {
  const std::vector<std::vector<std::size_t>> by_rank{
      {1, 8, 8, 4, 1},                // n=4
      {1, 13, 20, 12, 5, 1},          // n=5
      {1, 18, 41, 36, 17, 6, 1},      // n=6
      {1, 25, 81, 91, 57, 23, 7, 1},  // n=7
  };
  for (int n = 4; n <= 7; ++n) {
    std::size_t total = 0;
    for (int k = 0; k <= n; ++k) {
      const std::size_t size = classify_rank(n, k).size();
      CHECK(size == by_rank[static_cast<std::size_t>(n - 4)][static_cast<std::size_t>(k)]);
      total += size;
    }
    CHECK(total == enumerate_members(n).size());
  }
}

TEST_CASE("rank search") {
  CHECK(brute_rank(1) == 1);
  CHECK(brute_rank(2) == 2);
  CHECK(brute_rank(3) == 5);
  CHECK(brute_rank(4) == 6);
  CHECK_THROWS_AS(brute_rank(3, 2), ValueError);  // budget below the answer
  CHECK_THROWS_AS(brute_rank(5, 4), ValueError);  // budget below the forced floor
}

TEST_CASE("drop-one minimality") {
  CHECK(check_minimality(4));
  CHECK(check_minimality(5));
}

TEST_CASE("witness classes for every short domain pattern are populated") {
  for (int n = 5; n <= 7; ++n) {
    const auto members = enumerate_members(n).elements();
    for (int i = 1; i <= n - 4; ++i) {
      std::vector<int> ji;
      for (int k = 1; k <= i; ++k) ji.push_back(k);
      for (int k = i + 4; k <= n; ++k) ji.push_back(k);
      bool has_dom = false;
      bool has_im = false;
      for (const auto& e : members) {
        if (e.is_partial_identity()) continue;
        has_dom |= e.domain() == ji;
        has_im |= e.image() == ji;
      }
      CHECK(has_dom);
      CHECK(has_im);
    }
  }
}
