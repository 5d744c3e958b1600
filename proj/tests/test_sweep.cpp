#include <doctest.h>

#include <set>

#include "nsg/error.hpp"
#include "nsg/sweep.hpp"
#include "oracles.hpp"

using nsg::NumericalSemigroup;

TEST_CASE("genus counts") {
  const std::vector<std::size_t> expected{1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204, 343, 592};
  const auto all = nsg::semigroups_up_to_genus(12);
  std::vector<std::size_t> counts(13, 0);
  for (const auto& s : all) ++counts.at(static_cast<std::size_t>(s.genus()));
  CHECK(counts == expected);
  CHECK(std::set<NumericalSemigroup>(all.begin(), all.end()).size() == all.size());
}

TEST_CASE("Kunz enumeration agrees with the genus tree and the gap-set oracle") {
  // Every semigroup with F <= 12 has genus <= 12.
  const std::int64_t f_max = 12;
  const auto tree = nsg::semigroups_up_to_genus(12);
  for (std::int64_t m = 2; m <= f_max + 1; ++m) {
    const auto kunz = nsg::semigroups_with_multiplicity(m, f_max);
    std::set<NumericalSemigroup> expected;
    for (const auto& s : tree) {
      if (s.multiplicity() == m && s.frobenius() <= f_max) expected.insert(s);
    }
    CHECK_MESSAGE(std::set<NumericalSemigroup>(kunz.begin(), kunz.end()) == expected, "m = " << m);
    CHECK(kunz.size() == expected.size());
    CHECK(std::is_sorted(kunz.begin(), kunz.end()));
  }
  std::size_t by_frobenius = 0;
  for (std::int64_t f = 1; f <= 12; ++f) by_frobenius += oracle::with_frobenius(f).size();
  std::size_t by_kunz = 0;
  for (std::int64_t m = 2; m <= 13; ++m) by_kunz += nsg::semigroups_with_multiplicity(m, 12).size();
  CHECK(by_kunz == by_frobenius);
}

TEST_CASE("check_interval small sweeps") {
  nsg::Budget budget;
  const auto four = nsg::check_interval(4, 14, budget);
  CHECK(four.counterexamples.empty());
  CHECK(four.semigroups > 0);
  for (const auto& [lengths, count] : four.census) {
    CHECK(lengths != std::vector<std::size_t>{3});
    CHECK(count > 0);
  }
  const auto five = nsg::check_interval(5, 16, budget);
  CHECK(five.counterexamples.empty());

  const auto six = nsg::check_interval(6, 18, budget, 3);
  CHECK(six.counterexamples.empty());
  for (const auto& [lengths, count] : six.census) {
    const std::set<std::size_t> l(lengths.begin(), lengths.end());
    if (l.count(5)) CHECK(l.count(4));
    if (l.count(4)) CHECK(l.count(3));
  }
}

TEST_CASE("check_interval is independent of the thread count") {
  nsg::Budget budget;
  const auto one = nsg::check_interval(6, 16, budget, 1);
  const auto many = nsg::check_interval(6, 16, budget, 4);
  CHECK(one.semigroups == many.semigroups);
  CHECK(one.census == many.census);
  CHECK(one.counterexamples == many.counterexamples);
}

TEST_CASE("check_msbound") {
  nsg::Budget budget;
  const auto four = nsg::check_msbound(4, 12, budget);
  CHECK(four.violations.empty());
  CHECK(four.max_mset_size == 2);
  CHECK(four.semigroups > 0);
  CHECK(nsg::check_msbound(5, 16, budget, 2).violations.empty());
  const auto six = nsg::check_msbound(6, 18, budget, 2);
  CHECK(six.violations.empty());
  CHECK(six.max_mset_size <= 3);
}

TEST_CASE("sweep preconditions") {
  nsg::Budget budget;
  CHECK_THROWS_AS(nsg::check_interval(1, 10, budget), nsg::Error);
  CHECK_THROWS_AS(nsg::check_interval(6, 3, budget), nsg::Error);
  CHECK_THROWS_AS(nsg::check_msbound(1, 10, budget), nsg::Error);
}
