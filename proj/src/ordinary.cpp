#include "nsg/ordinary.hpp"

#include <algorithm>
#include <bit>

#include "nsg/classify.hpp"
#include "nsg/decompose.hpp"

namespace nsg {
namespace {

void require_positive(std::int64_t F) {
  if (F < 1) fail(ErrorKind::invalid_argument, "Frobenius number must be positive, got " + std::to_string(F));
  if (F > kMaxValue) fail(ErrorKind::overflow, "Frobenius number exceeds 2^40");
}

void require_multiplicity(std::int64_t m) {
  if (m < 4) fail(ErrorKind::out_of_range, "ordinary decompositions need m >= 4, got " + std::to_string(m));
  if (m > kMaxValue) fail(ErrorKind::overflow, "multiplicity exceeds 2^40");
}

std::int64_t valuation(std::int64_t x) { return std::countr_zero(static_cast<std::uint64_t>(x)); }

}  // namespace

NumericalSemigroup H(std::int64_t m) {
  if (m < 1) fail(ErrorKind::invalid_argument, "multiplicity must be positive, got " + std::to_string(m));
  if (m > kMaxValue) fail(ErrorKind::overflow, "multiplicity exceeds 2^40");
  return NumericalSemigroup::from_membership(m, [m](std::int64_t x) { return x == 0 || x >= m; });
}

NumericalSemigroup T_irr(std::int64_t F) {
  require_positive(F);
  return NumericalSemigroup::from_membership(F + 1, [F](std::int64_t x) { return x == 0 || (x > F / 2 && x != F); });
}

TwoAdicForm two_adic(std::int64_t F) {
  require_positive(F);
  const auto j = valuation(F);
  return {F, j, ((F >> j) - 1) / 2};
}

NumericalSemigroup I_irr(std::int64_t F) {
  const auto form = two_adic(F);
  const std::int64_t step = std::int64_t{2} << form.j;  // 2^(j+1)
  const std::int64_t odd_part = std::int64_t{1} << form.j;
  const auto in_t = [F](std::int64_t x) { return x == 0 || (x > F / 2 && x != F); };

  std::vector<std::int64_t> gaps;
  for (std::int64_t x = 1; x <= F; ++x) {
    const bool removed = x % step == odd_part;
    bool member = false;
    for (std::int64_t y = x; y >= 0 && !member && !removed; y -= step) member = in_t(y);
    if (!member) gaps.push_back(x);
  }

  NumericalSemigroup s;
  try {
    s = NumericalSemigroup::from_gaps(gaps);
  } catch (const Error& e) {
    fail(ErrorKind::internal_assertion, "I(" + std::to_string(F) + ") is not a semigroup: " + e.what());
  }
  const auto where = " for I(" + std::to_string(F) + ")";
  ensure(s.frobenius() == F, "Frobenius number is " + std::to_string(s.frobenius()) + where);
  const auto kind = classify(s).kind;
  ensure(kind == (form.j == 0 ? SemigroupKind::symmetric : SemigroupKind::pseudosymmetric),
         "wrong symmetry class " + std::string(to_string(kind)) + where);
  for (std::int64_t a = F / 2 + 1; a <= F; ++a) {
    ensure(s.contains(a) == (a % step != odd_part), "residue criterion fails at " + std::to_string(a) + where);
  }
  return s;
}

std::int64_t n_min(std::int64_t m) {
  if (m <= 3) fail(ErrorKind::undefined, "n_m is undefined for m <= 3");
  const auto q = static_cast<std::uint64_t>((m - 1) / 3);
  return static_cast<std::int64_t>(std::bit_width(q)) - 1 + 2;
}

std::vector<NumericalSemigroup> DFamily::semigroups() const {
  std::vector<NumericalSemigroup> out;
  out.reserve(components.size());
  for (const auto& c : components) out.push_back(c.semigroup);
  return out;
}

DFamily D(std::int64_t m, std::int64_t ell) {
  require_multiplicity(m);
  const auto count = m / 2;
  if (ell < 0 || ell > count) {
    fail(ErrorKind::out_of_range, "ell must lie in [0, " + std::to_string(count) + "], got " + std::to_string(ell));
  }
  // g_1 > g_2 > ... are m - 1, m - 2, ..., ceil(m/2).
  const auto g = [m](std::int64_t i) { return m - i; };

  DFamily family;
  family.m = m;
  family.ell = ell;
  for (std::int64_t i = ell + 1; i <= count; ++i) family.F_primes.try_emplace(valuation(g(i)), g(i));
  for (auto it = family.F_primes.rbegin(); it != family.F_primes.rend(); ++it) {
    family.J_prime.push_back(it->first);
    family.components.push_back({DComponent::Kind::I, it->second, I_irr(it->second)});
  }
  for (std::int64_t i = 1; i <= ell; ++i) family.components.push_back({DComponent::Kind::T, g(i), T_irr(g(i))});

  if (ell > 0) {
    DStep step{g(ell), valuation(g(ell)), std::nullopt};
    const auto next = step.g - (std::int64_t{2} << step.j);
    if (next >= m - count) step.replaced_by = next;
    family.step = step;
  }

  const auto hm = H(m);
  const auto parts = family.semigroups();
  const auto check = is_decomposition(hm, parts);
  ensure(check.verdict == Verdict::valid_irredundant,
         "D(" + std::to_string(m) + ", " + std::to_string(ell) + ") is not an irredundant decomposition: " + check.reason);
  if (ell == 0) {
    for (std::int64_t i = 1; i <= count; ++i) {
      const auto hits = std::count_if(parts.begin(), parts.end(), [&](const auto& c) { return !c.contains(g(i)); });
      ensure(hits == 1, "special gap " + std::to_string(g(i)) + " of H_" + std::to_string(m) + " is a gap of " +
                            std::to_string(hits) + " components of D(m, 0)");
    }
  }
  return family;
}

std::set<std::size_t> d_family_lengths(std::int64_t m) {
  require_multiplicity(m);
  std::set<std::size_t> out;
  std::size_t previous = 0;
  for (std::int64_t ell = 0; ell <= m / 2; ++ell) {
    const auto length = D(m, ell).components.size();
    ensure(ell == 0 || length == previous || length == previous + 1,
           "D-family length jumps from " + std::to_string(previous) + " to " + std::to_string(length));
    out.insert(length);
    previous = length;
  }
  return out;
}

}  // namespace nsg
