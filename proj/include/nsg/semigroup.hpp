#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "nsg/error.hpp"

namespace nsg {

/// Largest value any construction is allowed to touch.
inline constexpr std::int64_t kMaxValue = std::int64_t{1} << 40;

/// A numerical semigroup in canonical Kunz form: the multiplicity m and the
/// Apéry set with respect to m, stored as a_0 = 0, a_1, ..., a_{m-1} with
/// a_i the least element congruent to i modulo m.
///
/// m == 1 encodes the whole of N (no gaps, Frobenius number -1).
/// Values are immutable; every accessor is O(1) except the list views.
class NumericalSemigroup {
 public:
  /// N itself.
  NumericalSemigroup();

  static NumericalSemigroup naturals() { return {}; }

  /// Closure of a set of positive generators. Throws not_cofinite when
  /// their gcd is not 1.
  static NumericalSemigroup from_generators(std::span<const std::int64_t> generators);
  static NumericalSemigroup from_generators(std::initializer_list<std::int64_t> generators) {
    return from_generators(std::span<const std::int64_t>(generators.begin(), generators.size()));
  }

  /// Semigroup with exactly the given gap set. Throws NotClosedError with a
  /// witness pair when the complement is not additively closed.
  static NumericalSemigroup from_gaps(std::span<const std::int64_t> gaps);
  static NumericalSemigroup from_gaps(std::initializer_list<std::int64_t> gaps) {
    return from_gaps(std::span<const std::int64_t>(gaps.begin(), gaps.size()));
  }

  /// Semigroup generated by n and w_1, ..., w_{n-1} (w_i = i mod n), which
  /// must form its Apéry set with respect to n: every w_i + w_j >= w_k for
  /// i + j = k mod n. Throws invalid_argument otherwise. n need not be the
  /// multiplicity of the result.
  static NumericalSemigroup from_apery(std::int64_t n, std::span<const std::int64_t> elements);

  /// Semigroup whose members are exactly {x >= 0 : is_member(x)}, given that
  /// every x >= conductor_bound is a member. The predicate must describe an
  /// additively closed set; only members below conductor_bound + m are
  /// queried and closure is not re-verified.
  static NumericalSemigroup from_membership(std::int64_t conductor_bound,
                                            const std::function<bool(std::int64_t)>& is_member);

  std::int64_t multiplicity() const noexcept { return static_cast<std::int64_t>(kunz_.size()); }

  /// a_1, ..., a_{m-1}.
  std::span<const std::int64_t> apery_vector() const noexcept {
    return std::span<const std::int64_t>(kunz_).subspan(1);
  }

  /// a_{r mod m}; a_0 = 0.
  std::int64_t apery_element(std::int64_t residue) const noexcept;

  bool contains(std::int64_t x) const noexcept;

  std::int64_t frobenius() const noexcept { return frobenius_; }
  std::int64_t conductor() const noexcept { return frobenius_ + 1; }
  std::int64_t genus() const noexcept { return genus_; }
  bool is_naturals() const noexcept { return kunz_.size() == 1; }

  /// Sorted gap list.
  std::vector<std::int64_t> gaps() const;

  /// Minimal system of generators, sorted: m together with the nonzero Apéry
  /// elements that are not a sum of two nonzero Apéry elements.
  std::vector<std::int64_t> minimal_generators() const;

  std::string to_string() const;

  friend bool operator==(const NumericalSemigroup&, const NumericalSemigroup&) = default;
  friend std::strong_ordering operator<=>(const NumericalSemigroup& a, const NumericalSemigroup& b);
  friend NumericalSemigroup intersect(const NumericalSemigroup& s, const NumericalSemigroup& t);

 private:
  explicit NumericalSemigroup(std::vector<std::int64_t> kunz);

  std::vector<std::int64_t> kunz_;
  std::int64_t frobenius_ = -1;
  std::int64_t genus_ = 0;
};

/// Ap(S; n) = {s in S : s - n not in S}, indexed by residue.
struct AperySet {
  std::int64_t modulus = 1;
  std::vector<std::int64_t> elements;  // elements[i] = i (mod modulus), elements[0] = 0

  friend bool operator==(const AperySet&, const AperySet&) = default;
};

/// Throws not_element unless n is a positive element of s.
AperySet apery(const NumericalSemigroup& s, std::int64_t n);

/// a precedes b in the divisibility order of s: b - a lies in s.
bool divides(const NumericalSemigroup& s, std::int64_t a, std::int64_t b) noexcept;

/// Every element of s lies in t.
bool is_subset(const NumericalSemigroup& s, const NumericalSemigroup& t);

NumericalSemigroup intersect(const NumericalSemigroup& s, const NumericalSemigroup& t);

/// Convenience wrappers mirroring the member accessors.
inline std::int64_t frobenius(const NumericalSemigroup& s) { return s.frobenius(); }
inline std::int64_t genus(const NumericalSemigroup& s) { return s.genus(); }
inline std::int64_t multiplicity(const NumericalSemigroup& s) { return s.multiplicity(); }
inline std::vector<std::int64_t> gap_list(const NumericalSemigroup& s) { return s.gaps(); }

}  // namespace nsg

template <>
struct std::hash<nsg::NumericalSemigroup> {
  std::size_t operator()(const nsg::NumericalSemigroup& s) const noexcept;
};
