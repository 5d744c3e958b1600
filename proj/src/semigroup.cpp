#include "nsg/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace nsg {
namespace {

std::int64_t floor_mod(std::int64_t x, std::int64_t m) {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

void check_range(std::int64_t x, const char* what) {
  if (x > kMaxValue) {
    fail(ErrorKind::overflow, std::string(what) + " " + std::to_string(x) + " exceeds 2^40");
  }
}

}  // namespace

NumericalSemigroup::NumericalSemigroup() : kunz_{0} {}

NumericalSemigroup::NumericalSemigroup(std::vector<std::int64_t> kunz) : kunz_(std::move(kunz)) {
  const auto m = multiplicity();
  if (m == 1) {
    frobenius_ = -1;
    genus_ = 0;
    return;
  }
  frobenius_ = *std::max_element(kunz_.begin(), kunz_.end()) - m;
  genus_ = 0;
  for (std::int64_t i = 1; i < m; ++i) genus_ += (kunz_[i] - i) / m;
}

NumericalSemigroup NumericalSemigroup::from_membership(
    std::int64_t conductor_bound, const std::function<bool(std::int64_t)>& is_member) {
  check_range(conductor_bound, "conductor bound");
  if (conductor_bound <= 1) return NumericalSemigroup();
  std::int64_t m = conductor_bound;
  for (std::int64_t x = 1; x < conductor_bound; ++x) {
    if (is_member(x)) {
      m = x;
      break;
    }
  }
  std::vector<std::int64_t> kunz(static_cast<std::size_t>(m), 0);
  for (std::int64_t i = 1; i < m; ++i) {
    std::int64_t x = i;
    while (x < conductor_bound && !is_member(x)) x += m;
    kunz[i] = x;
  }
  return NumericalSemigroup(std::move(kunz));
}

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const std::int64_t> generators) {
  if (generators.empty()) fail(ErrorKind::invalid_argument, "generator set is empty");
  std::int64_t g = 0;
  for (auto x : generators) {
    if (x <= 0) fail(ErrorKind::invalid_argument, "generators must be positive, got " + std::to_string(x));
    check_range(x, "generator");
    g = std::gcd(g, x);
  }
  if (g != 1) {
    fail(ErrorKind::not_cofinite, "generators have gcd " + std::to_string(g) + ", not 1");
  }
  std::vector<std::int64_t> gens(generators.begin(), generators.end());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  const std::int64_t m = gens.front();
  if (m == 1) return NumericalSemigroup();

  // Sieve the closure on [0, length) and double the length until a run of m
  // consecutive members shows up; from there on everything is a member.
  std::int64_t length = std::max<std::int64_t>(64, 2 * gens.back() + 1);
  while (true) {
    check_range(length, "sieve length");
    std::vector<char> member(static_cast<std::size_t>(length), 0);
    member[0] = 1;
    std::int64_t run = 0;
    std::int64_t conductor = -1;
    for (std::int64_t x = 1; x < length; ++x) {
      for (auto gen : gens) {
        if (gen > x) break;
        if (member[x - gen]) {
          member[x] = 1;
          break;
        }
      }
      run = member[x] ? run + 1 : 0;
      if (run == m) {
        conductor = x - m + 1;
        break;
      }
    }
    if (conductor >= 0) {
      return from_membership(conductor, [&](std::int64_t x) { return x >= conductor || member[x] != 0; });
    }
    length *= 2;
  }
}

NumericalSemigroup NumericalSemigroup::from_gaps(std::span<const std::int64_t> gaps) {
  std::set<std::int64_t> gap_set;
  for (auto x : gaps) {
    if (x <= 0) fail(ErrorKind::invalid_argument, "gaps must be positive, got " + std::to_string(x));
    check_range(x, "gap");
    gap_set.insert(x);
  }
  if (gap_set.empty()) return NumericalSemigroup();
  const auto is_gap = [&](std::int64_t x) { return gap_set.count(x) != 0; };
  for (auto g : gap_set) {
    for (std::int64_t x = 1; 2 * x <= g; ++x) {
      if (!is_gap(x) && !is_gap(g - x)) throw NotClosedError(x, g - x);
    }
  }
  return from_membership(*gap_set.rbegin() + 1, [&](std::int64_t x) { return !is_gap(x); });
}

NumericalSemigroup NumericalSemigroup::from_apery(std::int64_t n, std::span<const std::int64_t> elements) {
  if (n <= 0) fail(ErrorKind::invalid_argument, "Apery modulus must be positive");
  if (static_cast<std::int64_t>(elements.size()) != n - 1) {
    fail(ErrorKind::invalid_argument, "expected " + std::to_string(n - 1) + " Apery elements, got " +
                                          std::to_string(elements.size()));
  }
  check_range(n, "Apery modulus");
  std::vector<std::int64_t> w(static_cast<std::size_t>(n), 0);
  for (std::int64_t i = 1; i < n; ++i) {
    const auto x = elements[i - 1];
    if (x <= 0 || floor_mod(x, n) != i) {
      fail(ErrorKind::invalid_argument,
           "Apery element " + std::to_string(x) + " is not a positive value congruent to " + std::to_string(i) +
               " mod " + std::to_string(n));
    }
    check_range(x, "Apery element");
    w[i] = x;
  }
  for (std::int64_t i = 1; i < n; ++i) {
    for (std::int64_t j = i; j < n; ++j) {
      const auto k = (i + j) % n;
      if (k != 0 && w[i] + w[j] < w[k]) {
        fail(ErrorKind::invalid_argument, "not an Apery set: w_" + std::to_string(i) + " + w_" + std::to_string(j) +
                                              " < w_" + std::to_string(k));
      }
    }
  }
  if (std::all_of(w.begin() + 1, w.end(), [n](std::int64_t x) { return x > n; })) {
    return NumericalSemigroup(std::move(w));
  }
  const auto top = *std::max_element(w.begin(), w.end());
  return from_membership(std::max<std::int64_t>(top - n + 1, 0),
                         [&](std::int64_t x) { return x >= w[x % n]; });
}

std::int64_t NumericalSemigroup::apery_element(std::int64_t residue) const noexcept {
  return kunz_[static_cast<std::size_t>(floor_mod(residue, multiplicity()))];
}

bool NumericalSemigroup::contains(std::int64_t x) const noexcept {
  if (x < 0) return false;
  return x >= kunz_[static_cast<std::size_t>(x % multiplicity())];
}

std::vector<std::int64_t> NumericalSemigroup::gaps() const {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(genus_));
  const auto m = multiplicity();
  for (std::int64_t i = 1; i < m; ++i) {
    for (std::int64_t x = i; x < kunz_[i]; x += m) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::int64_t> NumericalSemigroup::minimal_generators() const {
  const auto m = multiplicity();
  std::vector<std::int64_t> out{m};
  for (std::int64_t i = 1; i < m; ++i) {
    bool decomposable = false;
    for (std::int64_t j = 1; j < m && !decomposable; ++j) {
      const auto k = floor_mod(i - j, m);
      decomposable = k != 0 && kunz_[j] + kunz_[k] == kunz_[i];
    }
    if (!decomposable) out.push_back(kunz_[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string NumericalSemigroup::to_string() const {
  std::ostringstream os;
  os << '<';
  bool first = true;
  for (auto g : minimal_generators()) {
    os << (first ? "" : ",") << g;
    first = false;
  }
  os << '>';
  return os.str();
}

std::strong_ordering operator<=>(const NumericalSemigroup& a, const NumericalSemigroup& b) {
  if (auto c = a.multiplicity() <=> b.multiplicity(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.kunz_.begin(), a.kunz_.end(), b.kunz_.begin(), b.kunz_.end());
}

AperySet apery(const NumericalSemigroup& s, std::int64_t n) {
  if (n <= 0 || !s.contains(n)) {
    fail(ErrorKind::not_element, std::to_string(n) + " is not a positive element of " + s.to_string());
  }
  AperySet out{n, std::vector<std::int64_t>(static_cast<std::size_t>(n), -1)};
  if (n == s.multiplicity()) {
    out.elements[0] = 0;
    std::copy(s.apery_vector().begin(), s.apery_vector().end(), out.elements.begin() + 1);
    return out;
  }
  std::int64_t found = 0;
  for (std::int64_t x = 0; found < n; ++x) {
    auto& slot = out.elements[static_cast<std::size_t>(x % n)];
    if (slot < 0 && s.contains(x)) {
      slot = x;
      ++found;
    }
  }
  return out;
}

bool divides(const NumericalSemigroup& s, std::int64_t a, std::int64_t b) noexcept {
  std::int64_t diff = 0;
  if (__builtin_sub_overflow(b, a, &diff)) return b > a;
  return s.contains(diff);
}

bool is_subset(const NumericalSemigroup& s, const NumericalSemigroup& t) {
  // Apéry inclusion criterion with respect to m(S): b_i <= a_i, i.e. each
  // a_i lies in T, once m(S) itself does.
  if (!t.contains(s.multiplicity())) return false;
  for (auto a : s.apery_vector()) {
    if (!t.contains(a)) return false;
  }
  return true;
}

NumericalSemigroup intersect(const NumericalSemigroup& s, const NumericalSemigroup& t) {
  if (s.multiplicity() == t.multiplicity()) {
    // Coordinatewise maximum of two Kunz vectors is again a Kunz vector.
    std::vector<std::int64_t> w(s.kunz_.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = std::max(s.kunz_[i], t.kunz_[i]);
    return NumericalSemigroup(std::move(w));
  }
  return NumericalSemigroup::from_membership(std::max(s.conductor(), t.conductor()),
                                             [&](std::int64_t x) { return s.contains(x) && t.contains(x); });
}

}  // namespace nsg

std::size_t std::hash<nsg::NumericalSemigroup>::operator()(const nsg::NumericalSemigroup& s) const noexcept {
  std::size_t h = static_cast<std::size_t>(s.multiplicity()) * 0x9E3779B97F4A7C15ull;
  for (auto a : s.apery_vector()) {
    h ^= static_cast<std::size_t>(a) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
  }
  return h;
}
