#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "nsg/semigroup.hpp"

namespace nsg {

enum class SemigroupKind { symmetric, pseudosymmetric, reducible };

std::string_view to_string(SemigroupKind kind) noexcept;

struct IrreducibilityReport {
  SemigroupKind kind = SemigroupKind::symmetric;
  std::int64_t frobenius = -1;
  std::int64_t genus = 0;
  /// Pseudosymmetric only: the residue j with 2 a_j = a_k + m, where a_k is
  /// the largest Apéry element.
  std::optional<std::int64_t> pseudosymmetric_index;
  /// Reducible only: two strictly larger semigroups meeting in S.
  std::optional<std::pair<NumericalSemigroup, NumericalSemigroup>> reducible_witness;
};

/// Gaps maximal for the divisibility order, read off the Apéry set:
/// PF(S) = Maximals(Ap(S; m)) - m. Throws full_semigroup on N.
std::vector<std::int64_t> pseudo_frobenius(const NumericalSemigroup& s);

/// t(S) = |PF(S)|.
std::int64_t type(const NumericalSemigroup& s);

/// Pseudo-Frobenius numbers x with 2x in S. Throws full_semigroup on N.
std::vector<std::int64_t> special_gaps(const NumericalSemigroup& s);

/// Second route to special gaps: x is a gap and S u {x} is additively closed.
bool is_special_gap_by_closure(const NumericalSemigroup& s, std::int64_t x);

/// S u {x}; throws not_special_gap unless x is a special gap of S.
NumericalSemigroup add_special_gap(const NumericalSemigroup& s, std::int64_t x);

/// The two independent classification routes. classify() runs both and
/// raises internal_assertion if they ever disagree.
SemigroupKind kind_by_genus(const NumericalSemigroup& s);
SemigroupKind kind_by_apery(const NumericalSemigroup& s);

/// N is reported symmetric with Frobenius number -1.
IrreducibilityReport classify(const NumericalSemigroup& s);

bool is_irreducible(const NumericalSemigroup& s);

}  // namespace nsg
