#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "numsemi/numerical_semigroup.hpp"
#include "oracle_support.hpp"

using numsemi::Factorization;
using numsemi::Int;
using numsemi::NumericalSemigroup;

namespace {

NumericalSemigroup make(std::vector<Int> gens) {
  return NumericalSemigroup::from_generators(gens);
}

}  // namespace

TEST_CASE("from_generators minimalizes and fills the derived tables") {
  auto s = make({4, 6, 9, 13});
  CHECK(s.minimal_generators() == std::vector<Int>{4, 6, 9});
  CHECK(s.frobenius() == 11);
  CHECK(s.conductor() == 12);
  CHECK(s.genus() == 6);
  CHECK(s.gaps() == std::vector<Int>{1, 2, 3, 5, 7, 11});
  CHECK(s.multiplicity() == 4);

  // membership must agree with the reachability table over the raw input
  auto table = testsupport::reachable_table({4, 6, 9, 13}, 26);
  for (Int n = 0; n <= 26; ++n) {
    CHECK(s.contains(n) == table[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("input hygiene: zeros and duplicates are dropped") {
  auto s = make({0, 9, 6, 4, 9, 0, 13});
  CHECK(s == make({4, 6, 9}));
}

TEST_CASE("the full monoid") {
  auto s = make({1});
  CHECK(s.frobenius() == -1);
  CHECK(s.conductor() == 0);
  CHECK(s.genus() == 0);
  CHECK(s.gaps().empty());
  CHECK(s.small_elements().empty());
  CHECK(s.apery_row() == std::vector<Int>{0});
}

TEST_CASE("a small semigroup card") {
  auto s = make({2, 3});
  CHECK(s.frobenius() == 1);
  CHECK(s.conductor() == 2);
  CHECK(s.genus() == 1);
  CHECK(s.gaps() == std::vector<Int>{1});
  CHECK(s.small_elements() == std::vector<Int>{0});
}

TEST_CASE("from_generators rejects bad input") {
  CHECK_THROWS_AS(make({4, 6}), numsemi::GcdNotOne);
  try {
    make({4, 6});
  } catch (const numsemi::GcdNotOne& e) {
    CHECK(e.gcd() == 2);
  }
  CHECK_THROWS_AS(make({}), numsemi::EmptyGenerators);
  CHECK_THROWS_AS(make({0, 0}), numsemi::EmptyGenerators);
  CHECK_THROWS_AS(make({-2, 3}), std::invalid_argument);
}

TEST_CASE("contains") {
  auto s = make({4, 6, 9});
  CHECK_FALSE(s.contains(11));
  CHECK(s.contains(0));
  CHECK(s.contains(12));
  CHECK_FALSE(s.contains(-3));
  // apery consistency over a window
  const auto& ap = s.apery_row();
  for (Int n = 0; n <= 2 * s.conductor(); ++n) {
    CHECK(s.contains(n) ==
          (n >= ap[static_cast<std::size_t>(n % s.multiplicity())]));
  }
}

TEST_CASE("nth_element") {
  auto s = make({2, 5});
  CHECK(s.nth_element(4) == 6);
  CHECK(s.nth_element(0) == 0);
  auto full = make({1});
  for (Int k : {0, 1, 7, 100}) CHECK(full.nth_element(k) == k);

  // agrees with a scan of members
  Int k = 0;
  for (Int n = 0; n <= 20; ++n) {
    if (s.contains(n)) {
      CHECK(s.nth_element(k) == n);
      ++k;
    }
  }
  CHECK_THROWS_AS(s.nth_element(-1), std::invalid_argument);
}

TEST_CASE("apery_set") {
  auto s = make({2, 3});
  CHECK(s.apery_set(2) == std::vector<Int>{0, 3});
  auto t = make({4, 6, 9});
  CHECK(t.apery_set(4) == std::vector<Int>{0, 9, 6, 15});
  CHECK(t.apery_set(t.multiplicity()) == t.apery_row());
  CHECK_THROWS_AS(t.apery_set(5), numsemi::NotAMember);
  CHECK_THROWS_AS(t.apery_set(0), numsemi::NotAMember);

  for (Int m : {6, 9, 12}) {
    auto ap = t.apery_set(m);
    REQUIRE(ap.size() == static_cast<std::size_t>(m));
    CHECK(ap[0] == 0);
    for (Int i = 0; i < m; ++i) {
      Int w = ap[static_cast<std::size_t>(i)];
      CHECK(w % m == i);
      CHECK(t.contains(w));
      CHECK_FALSE(t.contains(w - m));
    }
  }
}

TEST_CASE("factorize picks the lexicographically greatest vector") {
  auto s = make({4, 6, 9});
  CHECK(s.factorize(13).coefficients == std::vector<Int>{1, 0, 1});
  CHECK(s.factorize(0).coefficients == std::vector<Int>{0, 0, 0});
  CHECK_THROWS_AS(s.factorize(11), numsemi::NotAMember);
  CHECK_THROWS_AS(s.factorize(-4), numsemi::NotAMember);

  for (auto gens : {std::vector<Int>{4, 6, 9}, std::vector<Int>{3, 5},
                    std::vector<Int>{5, 7, 9, 11}}) {
    auto t = make(gens);
    for (Int n = 0; n <= 2 * t.conductor() + 5; ++n) {
      if (!t.contains(n)) continue;
      auto f = t.factorize(n);
      CHECK(t.evaluate(f) == n);
      auto expected = testsupport::lex_greatest_factorization(
          t.minimal_generators(), n);
      REQUIRE(expected.has_value());
      CHECK(f.coefficients == *expected);
    }
  }
}

TEST_CASE("evaluate validates its input") {
  auto s = make({4, 6, 9});
  CHECK(s.evaluate(Factorization{{1, 0, 1}}) == 13);
  CHECK_THROWS_AS(s.evaluate(Factorization{{1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(s.evaluate(Factorization{{1, -1, 0}}),
                  std::invalid_argument);
}

TEST_CASE("children of the semigroup tree") {
  CHECK(make({1}).children() == std::vector<NumericalSemigroup>{make({2, 3})});
  CHECK(make({2, 3}).children() ==
        std::vector<NumericalSemigroup>{make({3, 4, 5}), make({2, 5})});
  CHECK(make({3, 4, 5}).children() ==
        std::vector<NumericalSemigroup>{make({4, 5, 6, 7}), make({3, 5, 7}),
                                        make({3, 4})});
}

TEST_CASE("tree soundness: children drop exactly one generator") {
  for (auto gens : {std::vector<Int>{1}, std::vector<Int>{2, 3},
                    std::vector<Int>{3, 4, 5}, std::vector<Int>{4, 6, 9},
                    std::vector<Int>{2, 5}}) {
    auto s = make(gens);
    std::vector<Int> removable;
    for (Int a : s.minimal_generators()) {
      if (a > s.frobenius()) removable.push_back(a);
    }
    auto kids = s.children();
    REQUIRE(kids.size() == removable.size());
    for (std::size_t i = 0; i < kids.size(); ++i) {
      const auto& child = kids[i];
      CHECK(child.genus() == s.genus() + 1);
      std::vector<Int> expected_gaps = s.gaps();
      expected_gaps.push_back(removable[i]);
      std::sort(expected_gaps.begin(), expected_gaps.end());
      CHECK(child.gaps() == expected_gaps);
    }
  }
}

TEST_CASE("minimalization is idempotent, including on random inputs") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<Int> size_dist(2, 5);
  std::uniform_int_distribution<Int> value_dist(2, 30);
  int tested = 0;
  while (tested < 50) {
    std::vector<Int> gens;
    for (Int i = 0, n = size_dist(rng); i < n; ++i) {
      gens.push_back(value_dist(rng));
    }
    Int g = 0;
    for (Int a : gens) g = std::gcd(g, a);
    if (g != 1) continue;
    ++tested;

    auto s = make(gens);
    auto again = make(s.minimal_generators());
    CHECK(again == s);
    CHECK(again.hash() == s.hash());
    CHECK(again.gaps() == s.gaps());

    // no minimal generator is representable over the others
    for (std::size_t i = 0; i < s.minimal_generators().size(); ++i) {
      std::vector<Int> others;
      for (std::size_t j = 0; j < s.minimal_generators().size(); ++j) {
        if (j != i) others.push_back(s.minimal_generators()[j]);
      }
      Int a = s.minimal_generators()[i];
      if (others.empty()) continue;
      auto table = testsupport::reachable_table(others, a);
      CHECK_FALSE(table[static_cast<std::size_t>(a)]);
    }

    // membership agrees with the reachability table over the raw input
    Int bound = 2 * s.conductor() + 1;
    auto table = testsupport::reachable_table(gens, bound);
    for (Int n = 0; n <= bound; ++n) {
      CHECK(s.contains(n) == table[static_cast<std::size_t>(n)]);
    }
  }
}

TEST_CASE("to_string and ordering") {
  CHECK(make({2, 5}).to_string() == "<2,5>");
  CHECK(make({2, 5}) < make({3, 4, 5}));
  CHECK_FALSE(make({2, 5}) < make({2, 5}));
}

TEST_CASE("parse_integer_list") {
  CHECK(numsemi::parse_integer_list("4,6,9") == std::vector<Int>{4, 6, 9});
  CHECK(numsemi::parse_integer_list("0,2,3") == std::vector<Int>{0, 2, 3});
  CHECK(numsemi::parse_integer_list("7") == std::vector<Int>{7});
  CHECK_THROWS_AS(numsemi::parse_integer_list(""), numsemi::Error);
  CHECK_THROWS_AS(numsemi::parse_integer_list("4,,6"), numsemi::Error);
  CHECK_THROWS_AS(numsemi::parse_integer_list("4,x"), numsemi::Error);
  CHECK_THROWS_AS(numsemi::parse_integer_list("-4,6"), numsemi::Error);
  CHECK_THROWS_AS(numsemi::parse_integer_list("4,6,"), numsemi::Error);
}
