#include "nsg/constructions.hpp"

#include <algorithm>
#include <array>
#include <optional>

#include "nsg/classify.hpp"

namespace nsg {
namespace {

bool contains_all(const std::vector<std::int64_t>& set, std::initializer_list<std::int64_t> values) {
  return std::all_of(values.begin(), values.end(),
                     [&](std::int64_t v) { return std::find(set.begin(), set.end(), v) != set.end(); });
}

NumericalSemigroup build(std::int64_t n, std::span<const std::int64_t> apery, const char* what) {
  try {
    return NumericalSemigroup::from_apery(n, apery);
  } catch (const Error& e) {
    fail(ErrorKind::internal_assertion, std::string(what) + ": " + e.what());
  }
}

std::int64_t half_up(std::int64_t x) { return (x + 1) / 2; }

// Largest value <= hi congruent to r mod 6, or smallest >= lo when lowest.
std::int64_t pick(std::int64_t lo, std::int64_t hi, std::int64_t r, bool lowest) {
  if (lowest) {
    const auto v = lo + ((r - lo) % 6 + 6) % 6;
    return v <= hi ? v : -1;
  }
  const auto v = hi - ((hi - r) % 6 + 6) % 6;
  return v >= lo ? v : -1;
}

struct M6Result {
  NumericalSemigroup t;
  M6Choice choice;
};

// One cover from the multiplicity-6 construction, with residues relabelled
// by p = (p1, ..., p5); p = (1,...,5) gives T and (5,...,1) gives T'.
M6Result m6_cover(const NumericalSemigroup& s, const std::array<std::int64_t, 6>& p, std::size_t sg_count,
                  const std::vector<std::int64_t>& sg, bool keep_fourth_on_tie) {
  const auto a = [&](int k) { return s.apery_element(p[k]); };
  const auto is_sg = [&](std::int64_t x) { return std::binary_search(sg.begin(), sg.end(), x); };
  ensure(a(2) != a(5), "Apery elements of distinct residues coincide");

  M6Choice choice;
  std::array<std::int64_t, 6> b{};
  b[2] = a(2);
  b[5] = a(5);
  if (a(2) > a(5)) {
    choice.a2_greater = true;
    b[3] = a(2) - a(5);
    const auto low = a(2) / 2;
    const auto high = (a(2) + 6) / 2;
    ensure(a(2) % 2 == 0, "a_{p2} is odd in the first multiplicity-6 case");
    if ((low - p[1]) % 6 == 0) {
      b[1] = low;
      b[4] = high;
    } else {
      b[1] = high;
      b[4] = low;
    }
  } else {
    choice.a2_greater = false;
    b[3] = a(5) - a(2);
    choice.prefer_first = sg_count >= 4 && is_sg(a(1) - 6);
    choice.prefer_fourth = sg_count >= 4 && is_sg(a(4) - 6);
    if (choice.prefer_first && choice.prefer_fourth && a(1) + a(4) == a(5) + 6) {
      if (keep_fourth_on_tie) {
        choice.prefer_first = false;
        choice.tie_dropped_first = true;
      } else {
        choice.prefer_fourth = false;
        choice.tie_dropped_fourth = true;
      }
    }
    const auto lo = std::max(half_up(a(2)), a(5) - a(4) + (choice.prefer_fourth ? 6 : 0));
    const auto hi = std::min(a(1) - (choice.prefer_first ? 6 : 0), a(5) - half_up(a(2)));
    // Only b_{p4} <= a_{p4} - 6 requested: make b_{p4} as large as allowed.
    b[1] = pick(lo, hi, p[1], choice.prefer_fourth && !choice.prefer_first);
    ensure(b[1] > 0, "no admissible b_{p1} in [" + std::to_string(lo) + ", " + std::to_string(hi) + "] for " +
                         s.to_string());
    b[4] = a(5) - b[1];
  }
  choice.b1 = b[1];
  choice.b3 = b[3];
  choice.b4 = b[4];

  std::vector<std::int64_t> apery(5);
  for (int k = 1; k <= 5; ++k) apery[static_cast<std::size_t>(p[k] - 1)] = b[k];
  auto t = build(6, apery, "multiplicity-6 cover is not a semigroup");
  ensure(t.multiplicity() <= 6, "multiplicity-6 cover has multiplicity above 6");
  const auto expected = choice.a2_greater ? SemigroupKind::pseudosymmetric : SemigroupKind::symmetric;
  ensure(classify(t).kind == expected, "multiplicity-6 cover " + t.to_string() + " is " +
                                           std::string(to_string(classify(t).kind)) + ", expected " +
                                           std::string(to_string(expected)));
  return {std::move(t), choice};
}

}  // namespace

NumericalSemigroup m4_cover(const NumericalSemigroup& s) {
  if (s.multiplicity() != 4) {
    fail(ErrorKind::wrong_multiplicity, s.to_string() + " has multiplicity " + std::to_string(s.multiplicity()) +
                                            ", expected 4");
  }
  const auto a1 = s.apery_element(1);
  const auto a3 = s.apery_element(3);
  const std::int64_t b2 = a1 <= a3 ? a3 - a1 : a1 - a3;
  const std::array<std::int64_t, 3> apery{a1, b2, a3};
  auto t = build(4, apery, "multiplicity-4 cover is not a semigroup");
  ensure(classify(t).kind == SemigroupKind::symmetric, "multiplicity-4 cover " + t.to_string() + " is not symmetric");
  ensure(is_subset(s, t), "multiplicity-4 cover does not contain " + s.to_string());
  ensure(contains_all(m_set(s, t), {1, 3}), "multiplicity-4 cover misses residue 1 or 3 in M_S(T)");
  return t;
}

M6CoverPair m6_covers(const NumericalSemigroup& s, bool keep_fourth_on_tie) {
  if (s.multiplicity() != 6) {
    fail(ErrorKind::wrong_multiplicity, s.to_string() + " has multiplicity " + std::to_string(s.multiplicity()) +
                                            ", expected 6");
  }
  const auto sg = special_gaps(s);
  M6CoverPair pair;
  pair.sg_count = sg.size();
  auto first = m6_cover(s, {0, 1, 2, 3, 4, 5}, sg.size(), sg, keep_fourth_on_tie);
  auto second = m6_cover(s, {0, 5, 4, 3, 2, 1}, sg.size(), sg, keep_fourth_on_tie);
  pair.T = std::move(first.t);
  pair.choice_T = first.choice;
  pair.T_prime = std::move(second.t);
  pair.choice_T_prime = second.choice;

  const auto m = m_set(s, pair.T);
  const auto mp = m_set(s, pair.T_prime);
  const auto where = " for " + s.to_string();
  ensure(contains_all(m, {2, 5}), "M_S(T) lacks 2 or 5" + where);
  ensure(contains_all(mp, {1, 4}), "M_S(T') lacks 1 or 4" + where);
  if (pair.sg_count >= 4) {
    ensure(m.size() <= 3 && mp.size() <= 3, "an M set has more than 3 elements" + where);
    const auto has3 = [](const std::vector<std::int64_t>& v) { return std::find(v.begin(), v.end(), 3) != v.end(); };
    ensure(!has3(m) && !has3(mp), "an M set contains 3" + where);
  }
  if (pair.sg_count == 5) {
    ensure(m.size() == 2 || mp.size() == 2, "neither M set has exactly 2 elements" + where);
  }
  return pair;
}

Decomposition m6_shorten(const NumericalSemigroup& s, const Decomposition& decomposition, Budget& budget) {
  if (s.multiplicity() != 6) fail(ErrorKind::not_applicable, s.to_string() + " does not have multiplicity 6");
  const auto k = decomposition.length();
  if (k != 4 && k != 5) {
    fail(ErrorKind::not_applicable, "decomposition has length " + std::to_string(k) + ", expected 4 or 5");
  }
  const auto given = is_decomposition(s, decomposition.components);
  if (given.verdict != Verdict::valid_irredundant) {
    fail(ErrorKind::not_applicable, "input is not an irredundant decomposition: " + given.reason);
  }
  const auto covers = m6_covers(s);

  const auto verified = [&](Decomposition d) {
    const auto check = is_decomposition(s, d.components);
    return check.verdict == Verdict::valid_irredundant ? std::optional<Decomposition>(std::move(d)) : std::nullopt;
  };

  if (k == 5) {
    for (const auto* cover : {&covers.T, &covers.T_prime}) {
      if (m_set(s, *cover).size() != 2) continue;
      const auto missed = miss_set(s, *cover);
      Decomposition d{{*cover}};
      for (const auto& c : decomposition.components) {
        const auto other = miss_set(s, c);
        const bool overlaps = std::any_of(other.begin(), other.end(), [&](std::int64_t x) {
          return std::binary_search(missed.begin(), missed.end(), x);
        });
        if (!overlaps) d.components.push_back(c);
      }
      if (auto good = verified(std::move(d)); good && good->length() == 4) return *good;
    }
    fail(ErrorKind::internal_assertion, "no length-4 decomposition from the multiplicity-6 covers of " + s.to_string());
  }

  for (const auto& atom : irreducible_oversemigroups(s, budget)) {
    if (atom.mset.size() > 2 || std::find(atom.mset.begin(), atom.mset.end(), 3) == atom.mset.end()) continue;
    if (auto good = verified(Decomposition{{covers.T, covers.T_prime, atom.semigroup}})) return *good;
  }
  fail(ErrorKind::search_failed, "no irreducible U with 3 in M_S(U), #M_S(U) <= 2 completes T and T' for " +
                                     s.to_string());
}

Decomposition m6_shorten(const NumericalSemigroup& s, const Decomposition& decomposition) {
  Budget budget;
  return m6_shorten(s, decomposition, budget);
}

}  // namespace nsg
