#pragma once

// Set-cover search over special gaps encoded as bit masks (bit t stands for
// the t-th smallest special gap).

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "nsg/budget.hpp"

namespace nsg::detail {

using Mask = std::uint64_t;

inline Mask full_mask(std::size_t n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// Orders masks by their sorted element lists, lexicographically.
bool canonical_less(Mask a, Mask b);

/// Visits every irredundant cover of the n-element universe by the given
/// distinct masks, each exactly once, as a list of indices into masks.
///
/// Branching is on the smallest uncovered element e: the set chosen for e
/// is the first set of the cover (in the given order) containing e, so the
/// earlier sets containing e are excluded below that branch. Branches where
/// a chosen set has no private element left are cut, since adding sets only
/// shrinks private parts.
void for_each_irredundant_cover(std::size_t n, std::span<const Mask> masks, Budget::Meter& meter,
                                const std::function<void(std::span<const std::size_t>)>& visit);

/// Indices of a minimum cover, or empty when the masks do not cover.
std::vector<std::size_t> minimum_cover(std::size_t n, std::span<const Mask> masks, Budget::Meter& meter);

}  // namespace nsg::detail
