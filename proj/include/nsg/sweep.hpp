#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "nsg/budget.hpp"
#include "nsg/decompose.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

/// Every semigroup with multiplicity m and Frobenius number at most f_max,
/// sorted canonically. Kunz coordinates a_i range over m + i, 2m + i, ...,
/// up to f_max + m and are pruned by the Apéry-set inequalities as soon as
/// all three indices of a triple are assigned.
std::vector<NumericalSemigroup> semigroups_with_multiplicity(std::int64_t m, std::int64_t f_max);

/// Every numerical semigroup of genus at most max_genus (N included), by
/// walking the tree that removes minimal generators above the Frobenius
/// number.
std::vector<NumericalSemigroup> semigroups_up_to_genus(std::int64_t max_genus);

struct IntervalReport {
  std::int64_t multiplicity = 0;
  std::int64_t f_max = 0;
  std::size_t semigroups = 0;
  std::vector<std::pair<NumericalSemigroup, std::vector<std::size_t>>> counterexamples;
  std::map<std::vector<std::size_t>, std::size_t> census;  // spectrum -> number of semigroups
};

/// Spectra of every semigroup with multiplicity m and F <= f_max; reports
/// the ones that are not intervals. Work is split over `threads` workers and
/// merged in canonical order.
IntervalReport check_interval(std::int64_t m, std::int64_t f_max, Budget& budget, unsigned threads = 1);

struct MsBoundViolation {
  NumericalSemigroup semigroup;
  NumericalSemigroup oversemigroup;
  std::size_t mset_size = 0;
};

struct MsBoundReport {
  std::int64_t multiplicity = 0;
  std::int64_t f_max = 0;
  std::size_t semigroups = 0;      // those with #SG = m - 1
  std::size_t pairs_checked = 0;   // (S, T) pairs with T irreducible
  std::size_t max_mset_size = 0;
  std::vector<MsBoundViolation> violations;
};

/// For every S with multiplicity m, F <= f_max and m - 1 special gaps, and
/// every irreducible T containing S, checks 2 #M_S(T) <= m.
MsBoundReport check_msbound(std::int64_t m, std::int64_t f_max, Budget& budget, unsigned threads = 1);

}  // namespace nsg
