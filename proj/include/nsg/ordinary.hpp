#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "nsg/semigroup.hpp"

namespace nsg {

/// F = 2^j (2k + 1).
struct TwoAdicForm {
  std::int64_t F = 0;
  std::int64_t j = 0;
  std::int64_t k = 0;
};

/// Ordinary semigroup {0, m, m + 1, ...}.
NumericalSemigroup H(std::int64_t m);

/// N minus ([1, floor(F/2)] and {F}).
NumericalSemigroup T_irr(std::int64_t F);

TwoAdicForm two_adic(std::int64_t F);

/// (<2^(j+1)> + T(F)) minus {2^j (2k' + 1) : 0 <= k' <= k}. Checks that the
/// result is a semigroup with Frobenius number F, symmetric exactly when
/// j = 0, and that a in (F/2, F] is a member iff a != 2^j mod 2^(j+1).
NumericalSemigroup I_irr(std::int64_t F);

/// floor(log2((m - 1) / 3)) + 2, for m >= 4.
std::int64_t n_min(std::int64_t m);

struct DComponent {
  enum class Kind { I, T };
  Kind kind = Kind::I;
  std::int64_t F = 0;
  NumericalSemigroup semigroup;
};

/// How D(m, ell) differs from D(m, ell - 1) in the I part: the component
/// I(g_ell) is replaced by I(g_ell - 2^(j+1)) or dropped.
struct DStep {
  std::int64_t g = 0;
  std::int64_t j = 0;
  std::optional<std::int64_t> replaced_by;
};

struct DFamily {
  std::int64_t m = 0;
  std::int64_t ell = 0;
  std::vector<DComponent> components;  // I parts by decreasing j, then T(g_1), ..., T(g_ell)
  std::vector<std::int64_t> J_prime;   // decreasing
  std::map<std::int64_t, std::int64_t> F_primes;
  std::optional<DStep> step;  // absent for ell = 0

  std::vector<NumericalSemigroup> semigroups() const;
};

/// The decomposition D_ell of H_m built from 2-adic classes of the special
/// gaps below the ell largest ones, plus T of those ell largest. Verified
/// to be a valid irredundant decomposition. 0 <= ell <= floor(m/2).
DFamily D(std::int64_t m, std::int64_t ell);

/// {length of D(m, ell) : 0 <= ell <= floor(m/2)}.
std::set<std::size_t> d_family_lengths(std::int64_t m);

}  // namespace nsg
