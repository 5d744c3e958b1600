#include "nsg/classify.hpp"

#include <algorithm>

namespace nsg {
namespace {

void require_proper(const NumericalSemigroup& s, const char* what) {
  if (s.is_naturals()) fail(ErrorKind::full_semigroup, std::string(what) + " is undefined for N");
}

// Nonzero Apéry residues i whose element is maximal for the divisibility
// order: a_i + a_j > a_{i+j} for every admissible j.
std::vector<std::int64_t> maximal_apery_residues(const NumericalSemigroup& s) {
  const auto m = s.multiplicity();
  std::vector<std::int64_t> out;
  for (std::int64_t i = 1; i < m; ++i) {
    bool maximal = true;
    for (std::int64_t j = 1; j < m && maximal; ++j) {
      const auto k = (i + j) % m;
      maximal = k == 0 || s.apery_element(i) + s.apery_element(j) != s.apery_element(k);
    }
    if (maximal) out.push_back(i);
  }
  return out;
}

}  // namespace

std::string_view to_string(SemigroupKind kind) noexcept {
  switch (kind) {
    case SemigroupKind::symmetric: return "symmetric";
    case SemigroupKind::pseudosymmetric: return "pseudosymmetric";
    case SemigroupKind::reducible: return "reducible";
  }
  return "unknown";
}

std::vector<std::int64_t> pseudo_frobenius(const NumericalSemigroup& s) {
  require_proper(s, "PF");
  std::vector<std::int64_t> out;
  for (auto i : maximal_apery_residues(s)) out.push_back(s.apery_element(i) - s.multiplicity());
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t type(const NumericalSemigroup& s) {
  return static_cast<std::int64_t>(pseudo_frobenius(s).size());
}

std::vector<std::int64_t> special_gaps(const NumericalSemigroup& s) {
  require_proper(s, "SG");
  std::vector<std::int64_t> out;
  for (auto x : pseudo_frobenius(s)) {
    if (s.contains(2 * x)) out.push_back(x);
  }
  return out;
}

bool is_special_gap_by_closure(const NumericalSemigroup& s, std::int64_t x) {
  if (x <= 0 || s.contains(x)) return false;
  // S u {x} is closed iff x + s and 2x land back in S u {x} for every
  // nonzero s in S; beyond the conductor everything is in S already.
  if (!s.contains(2 * x)) return false;
  for (std::int64_t y = 1; y <= s.conductor(); ++y) {
    if (s.contains(y) && !s.contains(x + y)) return false;
  }
  return true;
}

NumericalSemigroup add_special_gap(const NumericalSemigroup& s, std::int64_t x) {
  const auto sg = s.is_naturals() ? std::vector<std::int64_t>{} : special_gaps(s);
  if (!std::binary_search(sg.begin(), sg.end(), x)) {
    fail(ErrorKind::not_special_gap, std::to_string(x) + " is not a special gap of " + s.to_string());
  }
  // x is pseudo-Frobenius, so x + m = a_i for its residue i; lowering a_i to
  // x adjoins exactly x.
  const auto m = s.multiplicity();
  std::vector<std::int64_t> w(s.apery_vector().begin(), s.apery_vector().end());
  w[static_cast<std::size_t>(x % m) - 1] = x;
  return NumericalSemigroup::from_apery(m, w);
}

SemigroupKind kind_by_genus(const NumericalSemigroup& s) {
  if (s.is_naturals()) return SemigroupKind::symmetric;
  const auto f = s.frobenius();
  const auto g = s.genus();
  if (f % 2 != 0 && 2 * g == f + 1) return SemigroupKind::symmetric;
  if (f % 2 == 0 && 2 * g == f + 2) return SemigroupKind::pseudosymmetric;
  return SemigroupKind::reducible;
}

namespace {

std::optional<std::int64_t> pseudosymmetric_residue(const NumericalSemigroup& s) {
  const auto m = s.multiplicity();
  const auto w = s.apery_vector();
  const auto top = *std::max_element(w.begin(), w.end());
  std::optional<std::int64_t> odd_one;
  for (std::int64_t i = 1; i < m; ++i) {
    if (s.contains(top - s.apery_element(i))) continue;
    if (odd_one || 2 * s.apery_element(i) != top + m) return std::nullopt;
    odd_one = i;
  }
  return odd_one;
}

}  // namespace

SemigroupKind kind_by_apery(const NumericalSemigroup& s) {
  if (s.is_naturals()) return SemigroupKind::symmetric;
  const auto w = s.apery_vector();
  const auto top = *std::max_element(w.begin(), w.end());
  if (std::all_of(w.begin(), w.end(), [&](std::int64_t a) { return s.contains(top - a); })) {
    return SemigroupKind::symmetric;
  }
  return pseudosymmetric_residue(s) ? SemigroupKind::pseudosymmetric : SemigroupKind::reducible;
}

IrreducibilityReport classify(const NumericalSemigroup& s) {
  IrreducibilityReport report;
  report.frobenius = s.frobenius();
  report.genus = s.genus();
  report.kind = kind_by_genus(s);
  const auto by_apery = kind_by_apery(s);
  if (report.kind != by_apery) {
    fail(ErrorKind::internal_assertion, "classification routes disagree on " + s.to_string() + ": genus says " +
                                            std::string(to_string(report.kind)) + ", Apery poset says " +
                                            std::string(to_string(by_apery)));
  }
  if (report.kind == SemigroupKind::pseudosymmetric) {
    report.pseudosymmetric_index = pseudosymmetric_residue(s);
  } else if (report.kind == SemigroupKind::reducible) {
    const auto sg = special_gaps(s);
    ensure(sg.size() >= 2, "reducible semigroup " + s.to_string() + " has fewer than two special gaps");
    auto left = add_special_gap(s, sg[0]);
    auto right = add_special_gap(s, sg[1]);
    ensure(intersect(left, right) == s, "reducibility witness does not intersect back to " + s.to_string());
    report.reducible_witness.emplace(std::move(left), std::move(right));
  }
  return report;
}

bool is_irreducible(const NumericalSemigroup& s) { return classify(s).kind != SemigroupKind::reducible; }

}  // namespace nsg
