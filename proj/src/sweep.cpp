#include "nsg/sweep.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

#include "nsg/classify.hpp"

namespace nsg {
namespace {

class KunzSearch {
 public:
  KunzSearch(std::int64_t m, std::int64_t f_max) : m_(m), top_(f_max + m), a_(static_cast<std::size_t>(m), 0) {}

  std::vector<NumericalSemigroup> run() {
    if (m_ == 1) return {NumericalSemigroup()};
    assign(1);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  bool consistent(std::int64_t i) const {
    for (std::int64_t j = 1; j <= i; ++j) {
      for (std::int64_t k = j; k <= i; ++k) {
        const auto l = (j + k) % m_;
        if (l == 0 || l > i || (j != i && k != i && l != i)) continue;
        if (a_[j] + a_[k] < a_[l]) return false;
      }
    }
    return true;
  }

  void assign(std::int64_t i) {
    if (i == m_) {
      found_.push_back(NumericalSemigroup::from_apery(m_, std::span<const std::int64_t>(a_).subspan(1)));
      return;
    }
    for (std::int64_t v = m_ + i; v <= top_; v += m_) {
      a_[i] = v;
      if (consistent(i)) assign(i + 1);
    }
  }

  std::int64_t m_;
  std::int64_t top_;
  std::vector<std::int64_t> a_;
  std::vector<NumericalSemigroup> found_;
};

// Runs work(i) for every i in [0, n) on up to `threads` workers; the first
// exception thrown by any worker is rethrown.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& work) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) work(i);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < threads; ++w) {
      workers.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < n; i += threads) work(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

std::vector<NumericalSemigroup> all_irreducible_oversemigroups(const NumericalSemigroup& s, Budget& budget) {
  std::vector<NumericalSemigroup> out;
  if (s.genus() <= kOversemigroupGenusLimit) {
    for (auto& t : oversemigroups(s, budget)) {
      if (kind_by_genus(t) != SemigroupKind::reducible) out.push_back(std::move(t));
    }
    return out;
  }
  out.push_back(NumericalSemigroup::naturals());
  for (auto f : s.gaps()) {
    for (auto& t : irreducibles_with_frobenius_containing(f, s, budget)) out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

void require_sweep_args(std::int64_t m, std::int64_t f_max) {
  if (m < 2) fail(ErrorKind::invalid_argument, "sweep multiplicity must be at least 2");
  if (f_max < m - 1) fail(ErrorKind::invalid_argument, "Frobenius bound must be at least m - 1");
}

}  // namespace

std::vector<NumericalSemigroup> semigroups_with_multiplicity(std::int64_t m, std::int64_t f_max) {
  if (m < 1) fail(ErrorKind::invalid_argument, "multiplicity must be positive");
  if (f_max + m > kMaxValue) fail(ErrorKind::overflow, "Frobenius bound exceeds 2^40");
  return KunzSearch(m, f_max).run();
}

std::vector<NumericalSemigroup> semigroups_up_to_genus(std::int64_t max_genus) {
  std::vector<NumericalSemigroup> out{NumericalSemigroup()};
  std::vector<NumericalSemigroup> layer{NumericalSemigroup()};
  for (std::int64_t g = 1; g <= max_genus; ++g) {
    std::vector<NumericalSemigroup> next;
    for (const auto& s : layer) {
      for (auto gen : s.minimal_generators()) {
        if (gen <= s.frobenius()) continue;
        next.push_back(NumericalSemigroup::from_membership(
            gen + 1, [&](std::int64_t x) { return x != gen && s.contains(x); }));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

IntervalReport check_interval(std::int64_t m, std::int64_t f_max, Budget& budget, unsigned threads) {
  require_sweep_args(m, f_max);
  const auto family = semigroups_with_multiplicity(m, f_max);
  std::vector<std::vector<std::size_t>> spectra(family.size());
  parallel_for(family.size(), threads, [&](std::size_t i) { spectra[i] = length_spectrum(family[i], budget).lengths; });

  IntervalReport report;
  report.multiplicity = m;
  report.f_max = f_max;
  report.semigroups = family.size();
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& lengths = spectra[i];
    ++report.census[lengths];
    if (!lengths.empty() && lengths.back() - lengths.front() + 1 != lengths.size()) {
      report.counterexamples.emplace_back(family[i], lengths);
    }
  }
  return report;
}

MsBoundReport check_msbound(std::int64_t m, std::int64_t f_max, Budget& budget, unsigned threads) {
  require_sweep_args(m, f_max);
  std::vector<NumericalSemigroup> family;
  for (auto& s : semigroups_with_multiplicity(m, f_max)) {
    if (static_cast<std::int64_t>(special_gaps(s).size()) == m - 1) family.push_back(std::move(s));
  }

  struct Partial {
    std::size_t pairs = 0;
    std::size_t widest = 0;
    std::vector<MsBoundViolation> violations;
  };
  std::vector<Partial> partials(family.size());
  parallel_for(family.size(), threads, [&](std::size_t i) {
    const auto& s = family[i];
    auto& part = partials[i];
    for (auto& t : all_irreducible_oversemigroups(s, budget)) {
      const auto size = m_set(s, t).size();
      ++part.pairs;
      part.widest = std::max(part.widest, size);
      if (2 * static_cast<std::int64_t>(size) > m) part.violations.push_back({s, std::move(t), size});
    }
  });

  MsBoundReport report;
  report.multiplicity = m;
  report.f_max = f_max;
  report.semigroups = family.size();
  for (auto& part : partials) {
    report.pairs_checked += part.pairs;
    report.max_mset_size = std::max(report.max_mset_size, part.widest);
    for (auto& v : part.violations) report.violations.push_back(std::move(v));
  }
  return report;
}

}  // namespace nsg
