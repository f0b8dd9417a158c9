#include <algorithm>
#include <random>

#include "support.hpp"

using namespace symchar;
using support::P;

TEST_CASE("enumerate agrees with deduplicated compositions") {
  for (int n = 0; n <= 12; ++n) {
    const auto expected = oracle::partitions_by_compositions(n);
    const auto got = enumerate(n);
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].parts() == expected[i]);
  }
}

TEST_CASE("enumerate: small cases") {
  const auto four = enumerate(4);
  std::vector<std::string> names;
  for (const auto& p : four) names.push_back(p.str());
  CHECK(names == std::vector<std::string>{"1^4", "1^2,2", "2^2", "1,3", "4"});

  const auto zero = enumerate(0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].empty());

  const auto six = enumerate(6, PartSet::bounded(2));
  REQUIRE(six.size() == 4);
  CHECK(six[0] == P("1^6"));
  CHECK(six[3] == P("2^3"));

  CHECK(enumerate(5, PartSet::explicit_set({2})).empty());
}

TEST_CASE("partition counts") {
  const int p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
  for (int n = 0; n < 10; ++n) CHECK(enumerate(n).size() == static_cast<std::size_t>(p[n]));
  CHECK(enumerate(20).size() == 627u);
}

TEST_CASE("restricted enumeration matches filtered oracle") {
  const std::vector<PartSet> sets = {PartSet::bounded(3), PartSet::non_multiples(2), PartSet::non_multiples(3),
                                     PartSet::explicit_set({2, 3, 7})};
  for (const auto& s : sets) {
    for (int n = 0; n <= 14; ++n) {
      const auto expected = oracle::partitions(n, [&](int i) { return s.contains(i); });
      const auto got = enumerate(n, s);
      REQUIRE(got.size() == expected.size());
      for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].parts() == expected[i]);
    }
  }
}

TEST_CASE("compare sorts shuffled lists into enumeration order") {
  std::mt19937 rng(7);
  for (int n = 1; n <= 8; ++n) {
    auto list = enumerate(n);
    auto shuffled = list;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    std::sort(shuffled.begin(), shuffled.end(), [](const Partition& a, const Partition& b) { return compare(a, b) < 0; });
    CHECK(shuffled == list);
  }
  CHECK(compare(P("1,2^2"), P("1^2,3")) < 0);
  CHECK(compare(P("3,2"), P("2,3")) == 0);
  CHECK_THROWS_AS(compare(P("3"), P("4")), std::invalid_argument);
}

TEST_CASE("parse and print") {
  CHECK(P("1^2,3") == P("3,1,1"));
  CHECK(P("(3,1,1)") == P("1^2,3"));
  CHECK(P("[2^2,1]").str() == "1,2^2");
  CHECK(P("").empty());
  CHECK_THROWS_AS(P("0,1"), std::invalid_argument);
  CHECK_THROWS_AS(P("1^"), std::invalid_argument);
  CHECK_THROWS_AS(P("x"), std::invalid_argument);
}

TEST_CASE("multiplicities and stats") {
  CHECK(multiplicities(P("1^2,3")) == std::map<int, int>{{1, 2}, {3, 1}});
  CHECK(multiplicities(Partition()).empty());
  const auto s = stats(P("1^2,3"));
  CHECK(s.a == 3);
  CHECK(s.b == 2);
  CHECK(s.z == 6);
  CHECK(stats(P("1^5")).z == 120);
  CHECK(stats(Partition()).z == 1);
  for (int n = 0; n <= 10; ++n) {
    for (const auto& p : enumerate(n)) {
      const auto st = stats(p);
      CHECK(st.a == oracle::a_of(p.parts()));
      CHECK(st.b == oracle::b_of(p.parts()));
      CHECK(st.z == st.a * st.b);
    }
  }
}

TEST_CASE("product of a equals product of b over all partitions") {
  for (int n = 0; n <= 12; ++n) {
    mpz_class pa = 1, pb = 1;
    for (const auto& p : oracle::partitions(n)) {
      pa *= oracle::a_of(p);
      pb *= oracle::b_of(p);
    }
    CHECK(pa == pb);
  }
}

TEST_CASE("regularity predicates") {
  auto f = predicates(P("2,3"), 2, 5);
  CHECK(f.is_ell_regular);
  CHECK_FALSE(f.is_ell_class_regular);
  f = predicates(P("1^5"), 2, 5);
  CHECK_FALSE(f.is_ell_regular);
  CHECK(f.is_ell_class_regular);
  CHECK(is_k_bounded(P("1,3"), 3));
  CHECK_FALSE(is_k_bounded(P("1,3"), 2));

  for (int n = 0; n <= 12; ++n) {
    for (int ell = 2; ell <= 6; ++ell) {
      int reg = 0, creg = 0;
      for (const auto& p : oracle::partitions(n)) {
        auto m = oracle::mults(p);
        if (std::all_of(m.begin(), m.end(), [&](auto kv) { return kv.second < ell; })) ++reg;
        if (std::none_of(p.begin(), p.end(), [&](int x) { return x % ell == 0; })) ++creg;
      }
      CHECK(reg == creg);
      int lib_reg = 0, lib_creg = 0;
      for (const auto& p : enumerate(n)) {
        lib_reg += is_ell_regular(p, ell);
        lib_creg += is_ell_class_regular(p, ell);
      }
      CHECK(lib_reg == reg);
      CHECK(lib_creg == creg);
    }
  }
}

TEST_CASE("dominance") {
  CHECK(dominates(P("4,1"), P("3,2")));
  CHECK_FALSE(dominates(P("3,2"), P("4,1")));
  CHECK_FALSE(dominates(P("3,1^3"), P("2^3")));
  CHECK_FALSE(dominates(P("2^3"), P("3,1^3")));
}

TEST_CASE("part sets") {
  CHECK(PartSet::parse("all") == PartSet::all());
  CHECK(PartSet::parse("bounded:3") == PartSet::bounded(3));
  CHECK(PartSet::parse("nonmult:2") == PartSet::non_multiples(2));
  CHECK(PartSet::parse("explicit:2,4") == PartSet::explicit_set({2, 4}));
  CHECK_THROWS_AS(PartSet::parse("nope"), std::invalid_argument);

  CHECK(PartSet::all().is_p_closed(2, 40));
  CHECK_FALSE(PartSet::bounded(5).is_p_closed(2, 40));
  CHECK(PartSet::non_multiples(3).is_p_closed(2, 40));
  CHECK_FALSE(PartSet::non_multiples(4).is_p_closed(2, 40));
  CHECK_FALSE(PartSet::explicit_set({2, 4}).is_p_divisible(2));
  CHECK(PartSet::explicit_set({1, 2, 4}).is_p_divisible(2));

  // p-divisible: p*r in S implies r in S; checked by brute force on a window
  const std::vector<PartSet> sets = {PartSet::all(), PartSet::bounded(5), PartSet::non_multiples(4),
                                     PartSet::non_multiples(6), PartSet::explicit_set({1, 3, 9})};
  for (const auto& s : sets) {
    for (int p : {2, 3, 5}) {
      bool divisible = true;
      for (int r = 1; r <= 60; ++r)
        if (s.contains(p * r) && !s.contains(r)) divisible = false;
      CHECK(s.is_p_divisible(p) == divisible);
    }
  }
}
