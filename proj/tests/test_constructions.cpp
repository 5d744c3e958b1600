#include <doctest.h>

#include "nsg/classify.hpp"
#include "nsg/constructions.hpp"
#include "nsg/decompose.hpp"
#include "nsg/error.hpp"
#include "nsg/ordinary.hpp"
#include "nsg/sweep.hpp"

using nsg::NumericalSemigroup;
using Vec = std::vector<std::int64_t>;

namespace {

NumericalSemigroup gens(std::initializer_list<std::int64_t> g) { return NumericalSemigroup::from_generators(g); }

bool has(const Vec& v, std::int64_t x) { return std::find(v.begin(), v.end(), x) != v.end(); }

nsg::ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const nsg::Error& e) {
    return e.kind();
  }
  return nsg::ErrorKind::internal_assertion;
}

}  // namespace

TEST_CASE("m4_cover examples") {
  const auto t = nsg::m4_cover(nsg::H(4));
  CHECK(t == gens({2, 5}));
  CHECK(nsg::m_set(nsg::H(4), t) == Vec{1, 3});
  CHECK(nsg::m4_cover(gens({4, 5, 7})) == gens({2, 5}));
  const auto sym = gens({4, 5, 6});
  REQUIRE(nsg::classify(sym).kind == nsg::SemigroupKind::symmetric);
  CHECK(nsg::m4_cover(sym) == sym);
  CHECK(kind_of([] { nsg::m4_cover(nsg::H(5)); }) == nsg::ErrorKind::wrong_multiplicity);
}

TEST_CASE("m4_cover sweep (F <= 20)") {
  for (const auto& s : nsg::semigroups_with_multiplicity(4, 20)) {
    const auto t = nsg::m4_cover(s);
    CHECK(nsg::classify(t).kind == nsg::SemigroupKind::symmetric);
    CHECK(nsg::is_subset(s, t));
    const auto m = nsg::m_set(s, t);
    CHECK(has(m, 1));
    CHECK(has(m, 3));
    if (!nsg::is_irreducible(s)) {
      const auto lengths = nsg::length_spectrum(s).lengths;
      CHECK(std::find(lengths.begin(), lengths.end(), 2) != lengths.end());
    }
  }
}

TEST_CASE("m6_covers examples") {
  const auto pair = nsg::m6_covers(nsg::H(6));
  CHECK(pair.T == gens({3, 4}));
  CHECK(pair.choice_T.b1 == 7);
  CHECK(pair.choice_T.b3 == 3);
  CHECK(pair.choice_T.b4 == 4);
  CHECK_FALSE(pair.choice_T.a2_greater);
  CHECK(nsg::m_set(nsg::H(6), pair.T) == Vec{1, 2, 5});
  CHECK(pair.T_prime == gens({3, 5, 7}));
  CHECK(pair.sg_count == 3);
  CHECK(kind_of([] { nsg::m6_covers(nsg::H(5)); }) == nsg::ErrorKind::wrong_multiplicity);
}

TEST_CASE("m6_covers sweep (F <= 20)") {
  std::size_t ties = 0, first_case = 0;
  for (const auto& s : nsg::semigroups_with_multiplicity(6, 20)) {
    const auto sg = nsg::special_gaps(s).size();
    for (bool keep_fourth : {false, true}) {
      const auto pair = nsg::m6_covers(s, keep_fourth);
      CHECK(pair.sg_count == sg);
      const auto m = nsg::m_set(s, pair.T);
      const auto mp = nsg::m_set(s, pair.T_prime);
      CHECK(nsg::is_irreducible(pair.T));
      CHECK(nsg::is_irreducible(pair.T_prime));
      CHECK(nsg::is_subset(s, pair.T));
      CHECK(nsg::is_subset(s, pair.T_prime));
      CHECK((has(m, 2) && has(m, 5)));
      CHECK((has(mp, 1) && has(mp, 4)));
      if (pair.choice_T.a2_greater) {
        ++first_case;
        CHECK(nsg::classify(pair.T).kind == nsg::SemigroupKind::pseudosymmetric);
        CHECK(pair.T.frobenius() == s.apery_element(2) - 6);
      }
      if (sg >= 4) {
        CHECK(m.size() <= 3);
        CHECK(mp.size() <= 3);
        CHECK_FALSE(has(m, 3));
        CHECK_FALSE(has(mp, 3));
      }
      if (sg == 5) CHECK((m.size() == 2 || mp.size() == 2));
      ties += pair.choice_T.tie_dropped_fourth || pair.choice_T.tie_dropped_first;
    }
    if (nsg::classify(s).kind == nsg::SemigroupKind::symmetric) {
      CHECK(nsg::is_subset(s, nsg::m6_covers(s).T));
    }
  }
  MESSAGE("tie branch fired " << ties << " times; a2 > a5 case " << first_case << " times");
  CHECK(first_case > 0);
}

TEST_CASE("m6_shorten on sweep instances") {
  nsg::Budget budget;
  std::size_t fives = 0, fours = 0, search_failures = 0;
  for (const auto& s : nsg::semigroups_with_multiplicity(6, 18)) {
    if (nsg::is_irreducible(s)) continue;
    const auto spectrum = nsg::length_spectrum(s, budget);
    for (std::size_t k : {5u, 4u}) {
      const auto it = spectrum.witnesses.find(k);
      if (it == spectrum.witnesses.end()) continue;
      try {
        const auto shorter = nsg::m6_shorten(s, it->second, budget);
        CHECK(shorter.length() == k - 1);
        CHECK(nsg::is_decomposition(s, shorter.components).verdict == nsg::Verdict::valid_irredundant);
        (k == 5 ? fives : fours) += 1;
      } catch (const nsg::Error& e) {
        if (e.kind() != nsg::ErrorKind::search_failed) throw;
        ++search_failures;
        MESSAGE("search failed for " << s.to_string() << ": " << e.what());
      }
    }
  }
  MESSAGE("shortened " << fives << " length-5 and " << fours << " length-4 witnesses");
  CHECK(fives > 0);
  CHECK(fours > 0);
  CHECK(search_failures == 0);
}

TEST_CASE("m6_shorten preconditions") {
  const auto t = nsg::T_irr(13);
  const nsg::Decomposition single{{t}};
  CHECK(kind_of([&] { nsg::m6_shorten(nsg::H(7), single); }) == nsg::ErrorKind::not_applicable);
  const auto s = gens({6, 7, 8, 9, 10, 11});
  REQUIRE(s == nsg::H(6));
  CHECK(kind_of([&] { nsg::m6_shorten(s, single); }) == nsg::ErrorKind::not_applicable);
  const nsg::Decomposition wrong{{t, t, t, t}};
  CHECK(kind_of([&] { nsg::m6_shorten(s, wrong); }) == nsg::ErrorKind::not_applicable);
}
