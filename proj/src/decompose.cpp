#include "nsg/decompose.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "cover.hpp"
#include "nsg/classify.hpp"

namespace nsg {
namespace {

using detail::Mask;

std::vector<std::int64_t> special_gaps_or_empty(const NumericalSemigroup& s) {
  return s.is_naturals() ? std::vector<std::int64_t>{} : special_gaps(s);
}

void require_oversemigroup(const NumericalSemigroup& s, const NumericalSemigroup& t) {
  if (!is_subset(s, t)) {
    fail(ErrorKind::not_oversemigroup, t.to_string() + " does not contain " + s.to_string());
  }
}

std::vector<std::int64_t> m_set_unchecked(const NumericalSemigroup& s, const NumericalSemigroup& t) {
  const auto m = s.multiplicity();
  const auto ap = apery(t, m);
  std::vector<std::int64_t> out;
  for (std::int64_t i = 1; i < m; ++i) {
    if (ap.elements[static_cast<std::size_t>(i)] == s.apery_element(i)) out.push_back(i);
  }
  return out;
}

Mask to_mask(std::span<const std::int64_t> sg, std::span<const std::int64_t> subset) {
  Mask mask = 0;
  for (auto x : subset) {
    const auto it = std::lower_bound(sg.begin(), sg.end(), x);
    mask |= Mask{1} << static_cast<unsigned>(it - sg.begin());
  }
  return mask;
}

void require_mask_width(const NumericalSemigroup& s, std::size_t n) {
  if (n > 64) {
    fail(ErrorKind::out_of_range, s.to_string() + " has " + std::to_string(n) +
                                      " special gaps; cover search supports at most 64");
  }
}

// Distinct miss masks in canonical order, each with the first atom that
// realizes it.
struct MissFamily {
  std::vector<Mask> masks;
  std::vector<std::size_t> representative;
};

MissFamily distinct_miss_sets(std::span<const std::int64_t> sg, std::span<const CoverAtom> atoms) {
  std::vector<std::pair<Mask, std::size_t>> seen;
  std::unordered_set<Mask> known;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const auto mask = to_mask(sg, atoms[i].miss);
    if (known.insert(mask).second) seen.emplace_back(mask, i);
  }
  std::sort(seen.begin(), seen.end(),
            [](const auto& a, const auto& b) { return detail::canonical_less(a.first, b.first); });
  MissFamily family;
  for (const auto& [mask, index] : seen) {
    family.masks.push_back(mask);
    family.representative.push_back(index);
  }
  return family;
}

Decomposition assemble(const NumericalSemigroup& s, std::span<const CoverAtom> atoms, const MissFamily& family,
                       std::span<const std::size_t> chosen) {
  Decomposition d;
  for (auto c : chosen) d.components.push_back(atoms[family.representative[c]].semigroup);
  const auto check = is_decomposition(s, d.components);
  ensure(check.verdict == Verdict::valid_irredundant,
         "cover of special gaps of " + s.to_string() + " did not verify as a decomposition: " + check.reason);
  return d;
}

}  // namespace

std::string_view to_string(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::valid_irredundant: return "valid_irredundant";
    case Verdict::valid_redundant: return "valid_redundant";
    case Verdict::invalid: return "invalid";
  }
  return "unknown";
}

std::vector<NumericalSemigroup> oversemigroups(const NumericalSemigroup& s, Budget& budget) {
  auto meter = budget.meter("oversemigroup enumeration of " + s.to_string());
  std::unordered_set<NumericalSemigroup> seen{s};
  std::vector<NumericalSemigroup> stack{s};
  std::vector<NumericalSemigroup> out;
  while (!stack.empty()) {
    auto t = std::move(stack.back());
    stack.pop_back();
    meter.tick();
    for (auto x : special_gaps_or_empty(t)) {
      auto bigger = add_special_gap(t, x);
      if (seen.insert(bigger).second) stack.push_back(std::move(bigger));
    }
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NumericalSemigroup> oversemigroups(const NumericalSemigroup& s) {
  Budget budget;
  return oversemigroups(s, budget);
}

std::vector<CoverAtom> irreducible_oversemigroups(const NumericalSemigroup& s, Budget& budget,
                                                  AtomStrategy strategy) {
  const auto sg = special_gaps_or_empty(s);
  if (sg.empty()) return {};
  if (strategy == AtomStrategy::automatic) {
    strategy = s.genus() <= kOversemigroupGenusLimit ? AtomStrategy::oversemigroups : AtomStrategy::per_frobenius;
  }

  std::vector<NumericalSemigroup> candidates;
  if (strategy == AtomStrategy::oversemigroups) {
    for (auto& t : oversemigroups(s, budget)) {
      if (kind_by_genus(t) != SemigroupKind::reducible) candidates.push_back(std::move(t));
    }
  } else {
    // F(T) is a gap of S, and at least the smallest special gap when T
    // misses anything.
    for (auto f : s.gaps()) {
      if (f < sg.front()) continue;
      for (auto& t : irreducibles_with_frobenius_containing(f, s, budget)) candidates.push_back(std::move(t));
    }
  }

  std::vector<CoverAtom> atoms;
  for (auto& t : candidates) {
    std::vector<std::int64_t> miss;
    for (auto x : sg) {
      if (!t.contains(x)) miss.push_back(x);
    }
    if (miss.empty()) continue;
    auto mset = m_set_unchecked(s, t);
    atoms.push_back(CoverAtom{std::move(t), std::move(miss), std::move(mset)});
  }
  std::sort(atoms.begin(), atoms.end(),
            [](const CoverAtom& a, const CoverAtom& b) { return a.semigroup < b.semigroup; });
  return atoms;
}

std::vector<CoverAtom> irreducible_oversemigroups(const NumericalSemigroup& s) {
  Budget budget;
  return irreducible_oversemigroups(s, budget);
}

std::vector<std::int64_t> miss_set(const NumericalSemigroup& s, const NumericalSemigroup& t) {
  require_oversemigroup(s, t);
  std::vector<std::int64_t> out;
  for (auto x : special_gaps_or_empty(s)) {
    if (!t.contains(x)) out.push_back(x);
  }
  return out;
}

std::vector<std::int64_t> m_set(const NumericalSemigroup& s, const NumericalSemigroup& t) {
  require_oversemigroup(s, t);
  return m_set_unchecked(s, t);
}

DecompositionCheck is_decomposition(const NumericalSemigroup& s, std::span<const NumericalSemigroup> components) {
  DecompositionCheck check;
  const auto k = components.size();
  if (k == 0) {
    check.reason = "empty component list";
    return check;
  }

  // Cross-check criteria on special gaps; meaningful for oversemigroups.
  const auto sg = special_gaps_or_empty(s);
  std::set<std::int64_t> sg_union;
  for (const auto& c : components) {
    for (auto x : special_gaps_or_empty(c)) sg_union.insert(x);
  }
  check.sg_union = std::all_of(sg.begin(), sg.end(), [&](std::int64_t x) { return sg_union.count(x) != 0; });
  check.miss_cover = std::all_of(sg.begin(), sg.end(), [&](std::int64_t x) {
    return std::any_of(components.begin(), components.end(), [&](const auto& c) { return !c.contains(x); });
  });
  check.miss_irredundant = true;
  for (std::size_t i = 0; i < k && check.miss_irredundant; ++i) {
    check.miss_irredundant = std::any_of(sg.begin(), sg.end(), [&](std::int64_t x) {
      if (components[i].contains(x)) return false;
      for (std::size_t j = 0; j < k; ++j) {
        if (j != i && !components[j].contains(x)) return false;
      }
      return true;
    });
  }

  for (std::size_t i = 0; i < k; ++i) {
    if (kind_by_genus(components[i]) == SemigroupKind::reducible) {
      check.reason = "component " + std::to_string(i + 1) + " " + components[i].to_string() + " is not irreducible";
      return check;
    }
  }

  // prefix[i] = c_0 n ... n c_{i-1}, suffix[i] = c_i n ... n c_{k-1}.
  std::vector<NumericalSemigroup> prefix(k + 1), suffix(k + 1);
  for (std::size_t i = 0; i < k; ++i) prefix[i + 1] = intersect(prefix[i], components[i]);
  for (std::size_t i = k; i-- > 0;) suffix[i] = intersect(suffix[i + 1], components[i]);
  if (prefix[k] != s) {
    check.reason = "components intersect to " + prefix[k].to_string() + ", not " + s.to_string();
    return check;
  }
  if (k > 1) {
    for (std::size_t i = 0; i < k; ++i) {
      if (intersect(prefix[i], suffix[i + 1]) == s) {
        check.verdict = Verdict::valid_redundant;
        check.reason = "component " + std::to_string(i + 1) + " " + components[i].to_string() + " is redundant";
        return check;
      }
    }
  }
  check.verdict = Verdict::valid_irredundant;
  return check;
}

LengthSpectrum length_spectrum(const NumericalSemigroup& s, Budget& budget) {
  LengthSpectrum spectrum;
  if (s.is_naturals() || kind_by_genus(s) != SemigroupKind::reducible) {
    spectrum.lengths = {1};
    spectrum.witnesses[1] = Decomposition{{s}};
    return spectrum;
  }
  const auto sg = special_gaps(s);
  require_mask_width(s, sg.size());
  const auto atoms = irreducible_oversemigroups(s, budget);
  // Two components with equal miss sets are never both irredundant, so the
  // search runs over distinct miss sets without losing any length.
  const auto family = distinct_miss_sets(sg, atoms);

  std::map<std::size_t, std::vector<std::size_t>> first_cover;
  auto meter = budget.meter("irredundant cover enumeration for " + s.to_string());
  detail::for_each_irredundant_cover(sg.size(), family.masks, meter, [&](std::span<const std::size_t> chosen) {
    first_cover.try_emplace(chosen.size(), chosen.begin(), chosen.end());
  });
  ensure(!first_cover.empty(), "no decomposition found for reducible " + s.to_string());
  ensure(first_cover.rbegin()->first <= sg.size(), "decomposition longer than #SG for " + s.to_string());

  for (const auto& [length, chosen] : first_cover) {
    spectrum.lengths.push_back(length);
    spectrum.witnesses[length] = assemble(s, atoms, family, chosen);
  }
  return spectrum;
}

LengthSpectrum length_spectrum(const NumericalSemigroup& s) {
  Budget budget;
  return length_spectrum(s, budget);
}

Decomposition minimum_decomposition(const NumericalSemigroup& s, Budget& budget) {
  if (s.is_naturals() || kind_by_genus(s) != SemigroupKind::reducible) return Decomposition{{s}};
  const auto sg = special_gaps(s);
  require_mask_width(s, sg.size());
  const auto atoms = irreducible_oversemigroups(s, budget);
  const auto family = distinct_miss_sets(sg, atoms);
  auto meter = budget.meter("minimum cover search for " + s.to_string());
  const auto chosen = detail::minimum_cover(sg.size(), family.masks, meter);
  ensure(!chosen.empty(), "miss sets do not cover the special gaps of " + s.to_string());
  return assemble(s, atoms, family, chosen);
}

}  // namespace nsg
