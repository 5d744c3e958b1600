#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nsg/budget.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

/// An irreducible oversemigroup T of S that avoids at least one special gap
/// of S.
struct CoverAtom {
  NumericalSemigroup semigroup;
  std::vector<std::int64_t> miss;  // SG(S) \ T, sorted, nonempty
  std::vector<std::int64_t> mset;  // M_S(T) = {i : b_i = a_i}, Apéry sets taken w.r.t. m(S)
};

struct Decomposition {
  std::vector<NumericalSemigroup> components;

  std::size_t length() const noexcept { return components.size(); }
};

struct LengthSpectrum {
  std::vector<std::size_t> lengths;                 // sorted
  std::map<std::size_t, Decomposition> witnesses;   // one per length

  bool is_interval() const noexcept {
    return lengths.empty() || lengths.back() - lengths.front() + 1 == lengths.size();
  }
};

enum class Verdict { valid_irredundant, valid_redundant, invalid };

std::string_view to_string(Verdict verdict) noexcept;

struct DecompositionCheck {
  Verdict verdict = Verdict::invalid;
  std::string reason;  // empty when valid_irredundant
  /// Cross-check criteria evaluated alongside the direct intersection:
  /// every special gap of S avoids some component,
  bool miss_cover = false;
  /// every component avoids a special gap that all others contain,
  bool miss_irredundant = false;
  /// and the printed variant SG(S) within the union of the SG(S_i).
  bool sg_union = false;
};

enum class AtomStrategy { automatic, oversemigroups, per_frobenius };

/// Genus above which irreducible_oversemigroups switches from the full
/// oversemigroup recursion to per-Frobenius enumeration.
inline constexpr std::int64_t kOversemigroupGenusLimit = 20;

/// All T with S <= T <= N, sorted canonically; includes S and N.
std::vector<NumericalSemigroup> oversemigroups(const NumericalSemigroup& s, Budget& budget);
std::vector<NumericalSemigroup> oversemigroups(const NumericalSemigroup& s);

/// All irreducible semigroups with Frobenius number f, sorted canonically.
/// Enumerated from T(f) by the generator swap g -> f - g (g a minimal
/// generator in (f/2, f)), deduplicated by member set.
std::vector<NumericalSemigroup> irreducibles_with_frobenius(std::int64_t f, Budget& budget);
std::vector<NumericalSemigroup> irreducibles_with_frobenius(std::int64_t f);

/// Same enumeration restricted to semigroups containing s. Subtrees whose
/// members in (f/2, f) already miss an element of s are skipped: the swap
/// never adds such members back.
std::vector<NumericalSemigroup> irreducibles_with_frobenius_containing(std::int64_t f, const NumericalSemigroup& s,
                                                                       Budget& budget);

/// Every irreducible oversemigroup of s that misses a special gap of s.
std::vector<CoverAtom> irreducible_oversemigroups(const NumericalSemigroup& s, Budget& budget,
                                                  AtomStrategy strategy = AtomStrategy::automatic);
std::vector<CoverAtom> irreducible_oversemigroups(const NumericalSemigroup& s);

/// SG(S) \ T. Throws not_oversemigroup unless S <= T.
std::vector<std::int64_t> miss_set(const NumericalSemigroup& s, const NumericalSemigroup& t);

/// M_S(T) on Apéry sets w.r.t. m(S). Throws not_oversemigroup unless S <= T.
std::vector<std::int64_t> m_set(const NumericalSemigroup& s, const NumericalSemigroup& t);

/// Direct check by intersecting the components; this is the ground truth the
/// cover criteria are tested against.
DecompositionCheck is_decomposition(const NumericalSemigroup& s, std::span<const NumericalSemigroup> components);

/// Every achievable irredundant decomposition length with one witness each.
LengthSpectrum length_spectrum(const NumericalSemigroup& s, Budget& budget);
LengthSpectrum length_spectrum(const NumericalSemigroup& s);

/// A decomposition of minimum length (minimum set cover of SG(S) by miss
/// sets).
Decomposition minimum_decomposition(const NumericalSemigroup& s, Budget& budget);

}  // namespace nsg
