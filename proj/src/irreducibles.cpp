#include <algorithm>
#include <string>
#include <unordered_set>

#include "nsg/decompose.hpp"

namespace nsg {
namespace {

// Member flags on [0, f]; everything above f is a member.
using MemberRow = std::string;

NumericalSemigroup to_semigroup(const MemberRow& row, std::int64_t f) {
  return NumericalSemigroup::from_membership(f + 1, [&](std::int64_t x) { return x > f || row[x] != 0; });
}

bool is_minimal_generator(const MemberRow& row, std::int64_t g) {
  for (std::int64_t x = 1; 2 * x <= g; ++x) {
    if (row[x] && row[g - x]) return false;
  }
  return true;
}

// Closure after adjoining h, assuming the rest of the row is closed.
bool closed_after_adding(const MemberRow& row, std::int64_t h, std::int64_t f) {
  for (std::int64_t y = 1; h + y <= f; ++y) {
    if (row[y] && !row[h + y]) return false;
  }
  return true;
}

template <class Visit>
void enumerate_irreducibles(std::int64_t f, const NumericalSemigroup* containing, Budget& budget, Visit&& visit) {
  if (f < 1) fail(ErrorKind::invalid_argument, "Frobenius number must be positive, got " + std::to_string(f));
  if (f > kMaxValue) fail(ErrorKind::overflow, "Frobenius number exceeds 2^40");

  std::vector<std::int64_t> required;
  if (containing != nullptr) {
    for (std::int64_t x = f / 2 + 1; x < f; ++x) {
      if (containing->contains(x)) required.push_back(x);
    }
  }
  const auto admissible = [&](const MemberRow& row) {
    return std::all_of(required.begin(), required.end(), [&](std::int64_t x) { return row[x] != 0; });
  };

  MemberRow root(static_cast<std::size_t>(f + 1), 0);
  root[0] = 1;
  for (std::int64_t x = f / 2 + 1; x < f; ++x) root[x] = 1;
  if (!admissible(root)) return;

  auto meter = budget.meter("irreducible enumeration for Frobenius number " + std::to_string(f));
  std::unordered_set<MemberRow> seen{root};
  std::vector<MemberRow> stack{root};
  while (!stack.empty()) {
    const MemberRow row = std::move(stack.back());
    stack.pop_back();
    meter.tick();
    visit(row);
    for (std::int64_t g = f / 2 + 1; g < f; ++g) {
      if (!row[g] || !is_minimal_generator(row, g)) continue;
      MemberRow child = row;
      child[g] = 0;
      child[f - g] = 1;
      if (!closed_after_adding(child, f - g, f) || !admissible(child)) continue;
      if (seen.insert(child).second) stack.push_back(std::move(child));
    }
  }
}

}  // namespace

std::vector<NumericalSemigroup> irreducibles_with_frobenius(std::int64_t f, Budget& budget) {
  std::vector<NumericalSemigroup> out;
  enumerate_irreducibles(f, nullptr, budget, [&](const MemberRow& row) { out.push_back(to_semigroup(row, f)); });
  for (const auto& t : out) {
    ensure(t.frobenius() == f && t.genus() == f / 2 + 1, "swap enumeration left the irreducible family at " + t.to_string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NumericalSemigroup> irreducibles_with_frobenius(std::int64_t f) {
  Budget budget;
  return irreducibles_with_frobenius(f, budget);
}

std::vector<NumericalSemigroup> irreducibles_with_frobenius_containing(std::int64_t f, const NumericalSemigroup& s,
                                                                       Budget& budget) {
  std::vector<NumericalSemigroup> out;
  enumerate_irreducibles(f, &s, budget, [&](const MemberRow& row) {
    for (std::int64_t x = 1; x <= f; ++x) {
      if (!row[x] && s.contains(x)) return;
    }
    out.push_back(to_semigroup(row, f));
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace nsg
