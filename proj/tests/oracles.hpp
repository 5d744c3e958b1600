#pragma once

// Brute-force reference implementations used only by the tests. They work on
// explicit gap sets and never touch Apéry coordinates.

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <set>
#include <vector>

#include "nsg/decompose.hpp"
#include "nsg/semigroup.hpp"

namespace oracle {

using Gaps = std::vector<std::int64_t>;  // sorted

inline bool member(const Gaps& gaps, std::int64_t x) {
  return x >= 0 && !std::binary_search(gaps.begin(), gaps.end(), x);
}

// The complement of `gaps` is closed under addition.
inline bool closed(const Gaps& gaps) {
  const auto top = gaps.empty() ? 0 : gaps.back();
  for (std::int64_t x = 1; x <= top; ++x) {
    if (!member(gaps, x)) continue;
    for (std::int64_t y = x; x + y <= top; ++y) {
      if (member(gaps, y) && !member(gaps, x + y)) return false;
    }
  }
  return true;
}

// Every gap set of size <= max_genus with closed complement. A semigroup of
// genus g has all gaps below 2g.
inline std::vector<Gaps> all_gap_sets(int max_genus) {
  std::vector<Gaps> out;
  const int top = std::max(1, 2 * max_genus - 1);
  Gaps current;
  auto rec = [&](auto&& self, std::int64_t next) -> void {
    if (closed(current)) out.push_back(current);
    if (static_cast<int>(current.size()) == max_genus) return;
    for (std::int64_t x = next; x <= top; ++x) {
      current.push_back(x);
      self(self, x + 1);
      current.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

inline nsg::NumericalSemigroup make(const Gaps& gaps) { return nsg::NumericalSemigroup::from_gaps(gaps); }

// All semigroups containing the one with gap set `gaps`: closed subsets.
inline std::vector<Gaps> oversemigroups(const Gaps& gaps) {
  std::vector<Gaps> out;
  const auto n = gaps.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Gaps sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) sub.push_back(gaps[i]);
    }
    if (closed(sub)) out.push_back(sub);
  }
  return out;
}

inline std::int64_t frobenius(const Gaps& gaps) { return gaps.empty() ? -1 : gaps.back(); }

// Irreducible: maximal among semigroups with the same Frobenius number.
// Within an oversemigroup family this only needs the family itself.
inline bool maximal_for_frobenius(const Gaps& t, const std::vector<Gaps>& family) {
  if (t.empty()) return true;
  for (const auto& u : family) {
    if (u.size() < t.size() && frobenius(u) == frobenius(t) &&
        std::includes(t.begin(), t.end(), u.begin(), u.end())) {
      return false;
    }
  }
  return true;
}

// Definitional pseudo-Frobenius numbers: gaps x with x + s in S for all
// nonzero s in S.
inline std::vector<std::int64_t> pseudo_frobenius(const Gaps& gaps) {
  std::vector<std::int64_t> out;
  const auto f = frobenius(gaps);
  for (auto x : gaps) {
    bool ok = true;
    for (std::int64_t s = 1; s <= f + 1 && ok; ++s) {
      if (member(gaps, s) && !member(gaps, x + s)) ok = false;
    }
    if (ok) out.push_back(x);
  }
  return out;
}

// All semigroups with Frobenius number f (gap subsets of [1, f] containing f).
inline std::vector<Gaps> with_frobenius(std::int64_t f) {
  std::vector<Gaps> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (f - 1)); ++mask) {
    Gaps g;
    for (std::int64_t i = 1; i < f; ++i) {
      if (mask >> (i - 1) & 1) g.push_back(i);
    }
    g.push_back(f);
    if (closed(g)) out.push_back(g);
  }
  return out;
}

// Gap-set intersection is gap-set union.
inline Gaps meet(const Gaps& a, const Gaps& b) {
  Gaps out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline std::vector<std::int64_t> special_gaps(const Gaps& gaps) {
  std::vector<std::int64_t> out;
  for (auto x : pseudo_frobenius(gaps)) {
    if (member(gaps, 2 * x)) out.push_back(x);
  }
  return out;
}

// Length set by trying every subset of irreducible oversemigroups with at
// most #SG(S) members, judged by direct gap-set intersection.
inline std::set<std::size_t> spectrum(const Gaps& s) {
  const auto max_size = special_gaps(s).size();
  const auto family = oversemigroups(s);
  std::vector<Gaps> irreducible;
  for (const auto& t : family) {
    if (t != s && maximal_for_frobenius(t, family)) irreducible.push_back(t);
  }
  if (maximal_for_frobenius(s, family)) return {1};

  std::set<std::size_t> lengths;
  std::vector<std::size_t> chosen;
  auto irredundant = [&] {
    for (std::size_t drop = 0; drop < chosen.size(); ++drop) {
      Gaps acc;
      for (std::size_t i = 0; i < chosen.size(); ++i) {
        if (i != drop) acc = meet(acc, irreducible[chosen[i]]);
      }
      if (acc == s) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t start, const Gaps& acc) -> void {
    if (!chosen.empty() && acc == s) {
      // Any extension would contain a redundant member.
      if (irredundant()) lengths.insert(chosen.size());
      return;
    }
    if (chosen.size() == max_size) return;
    for (std::size_t i = start; i < irreducible.size(); ++i) {
      chosen.push_back(i);
      self(self, i + 1, meet(acc, irreducible[i]));
      chosen.pop_back();
    }
  };
  rec(rec, 0, Gaps{});
  return lengths;
}

}  // namespace oracle
