#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "nsg/budget.hpp"
#include "nsg/decompose.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

/// Which branch of the multiplicity-6 construction produced one cover.
struct M6Choice {
  bool a2_greater = false;      // a_{p2} > a_{p5} (pseudosymmetric T)
  bool prefer_first = false;    // b_{p1} <= a_{p1} - 6 was requested
  bool prefer_fourth = false;   // b_{p4} <= a_{p4} - 6 was requested
  bool tie_dropped_fourth = false;  // both requested, a_{p1} + a_{p4} = a_{p5} + 6
  bool tie_dropped_first = false;
  std::int64_t b1 = 0, b3 = 0, b4 = 0;  // values at residues p1, p3, p4
};

struct M6CoverPair {
  NumericalSemigroup T;        // {2,5} within M_S(T)
  NumericalSemigroup T_prime;  // {1,4} within M_S(T')
  std::size_t sg_count = 0;
  M6Choice choice_T;
  M6Choice choice_T_prime;
};

/// Symmetric T containing S with {1,3} within M_S(T), for m(S) = 4.
/// Ap(S;4) = {0, a1, a2, a3}; T has Apéry set {0, a1, |a3 - a1|, a3}.
NumericalSemigroup m4_cover(const NumericalSemigroup& s);

/// Irreducible T, T' containing S with {2,5} within M_S(T) and {1,4} within
/// M_S(T'), for m(S) = 6. When #SG(S) >= 4 each M set has at most 3
/// elements and avoids 3; when #SG(S) = 5 one of them has exactly 2.
/// In the tie where both b_1 = a_1 - 6 and b_4 = a_4 - 6 are wanted but
/// a_1 + a_4 = a_5 + 6, b_1 = a_1 - 6 is kept unless keep_fourth_on_tie.
M6CoverPair m6_covers(const NumericalSemigroup& s, bool keep_fourth_on_tie = false);

/// From an irredundant decomposition of length 5 (or 4) of S with m(S) = 6,
/// builds one of length 4 (or 3) out of m6_covers.
Decomposition m6_shorten(const NumericalSemigroup& s, const Decomposition& decomposition, Budget& budget);
Decomposition m6_shorten(const NumericalSemigroup& s, const Decomposition& decomposition);

}  // namespace nsg
