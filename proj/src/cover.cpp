#include "cover.hpp"

#include <algorithm>
#include <bit>

namespace nsg::detail {

bool canonical_less(Mask a, Mask b) {
  while (a != 0 && b != 0) {
    const int la = std::countr_zero(a);
    const int lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

namespace {

std::vector<std::vector<std::size_t>> index_by_element(std::size_t n, std::span<const Mask> masks,
                                                       std::span<const std::size_t> subset) {
  std::vector<std::vector<std::size_t>> containing(n);
  for (auto c : subset) {
    for (Mask x = masks[c]; x != 0; x &= x - 1) containing[std::countr_zero(x)].push_back(c);
  }
  return containing;
}

class IrredundantCovers {
 public:
  IrredundantCovers(std::size_t n, std::span<const Mask> masks, Budget::Meter& meter,
                    const std::function<void(std::span<const std::size_t>)>& visit)
      : full_(full_mask(n)), masks_(masks), meter_(meter), visit_(visit), forbidden_(masks.size(), 0) {
    std::vector<std::size_t> all(masks.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    containing_ = index_by_element(n, masks, all);
  }

  void run() { search(0, 0); }

 private:
  void search(Mask covered, Mask once) {
    meter_.tick();
    if (covered == full_) {
      visit_(chosen_);
      return;
    }
    const auto e = static_cast<std::size_t>(std::countr_zero(~covered & full_));
    std::vector<std::size_t> excluded_here;
    for (auto c : containing_[e]) {
      if (forbidden_[c]) continue;
      const Mask x = masks_[c];
      const Mask next_once = (once & ~x) | (x & ~covered);
      bool every_private = true;
      for (auto d : chosen_) {
        if ((masks_[d] & next_once) == 0) {
          every_private = false;
          break;
        }
      }
      if (every_private) {
        chosen_.push_back(c);
        search(covered | x, next_once);
        chosen_.pop_back();
      }
      forbidden_[c] = 1;
      excluded_here.push_back(c);
    }
    for (auto c : excluded_here) forbidden_[c] = 0;
  }

  Mask full_;
  std::span<const Mask> masks_;
  Budget::Meter& meter_;
  const std::function<void(std::span<const std::size_t>)>& visit_;
  std::vector<char> forbidden_;
  std::vector<std::vector<std::size_t>> containing_;
  std::vector<std::size_t> chosen_;
};

class MinimumCover {
 public:
  MinimumCover(std::size_t n, std::span<const Mask> masks, Budget::Meter& meter)
      : n_(n), full_(full_mask(n)), masks_(masks), meter_(meter) {
    // Only inclusion-maximal masks matter for a minimum cover.
    for (std::size_t i = 0; i < masks.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < masks.size() && !dominated; ++j) {
        dominated = j != i && (masks[i] & ~masks[j]) == 0 && masks[i] != masks[j];
      }
      if (!dominated) maximal_.push_back(i);
    }
    containing_ = index_by_element(n, masks, maximal_);
  }

  std::vector<std::size_t> run() {
    Mask reach = 0;
    for (auto x : masks_) reach |= x;
    if (full_ == 0 || (reach & full_) != full_) return {};
    for (std::size_t k = 1;; ++k) {
      if (search(0, k)) return chosen_;
    }
  }

 private:
  // The k largest restrictions of maximal masks to the uncovered set must
  // reach its size.
  bool reachable(Mask uncovered, std::size_t slots) {
    const auto need = static_cast<std::size_t>(std::popcount(uncovered));
    std::vector<int> best(slots, 0);
    for (auto c : maximal_) {
      int w = std::popcount(masks_[c] & uncovered);
      for (auto& b : best) {
        if (w > b) std::swap(w, b);
      }
    }
    std::size_t total = 0;
    for (auto b : best) total += static_cast<std::size_t>(b);
    return total >= need;
  }

  bool search(Mask covered, std::size_t slots) {
    meter_.tick();
    const Mask uncovered = full_ & ~covered;
    if (uncovered == 0) return true;
    if (slots == 0 || !reachable(uncovered, slots)) return false;

    // Branch on the uncovered element lying in the fewest maximal masks.
    std::size_t e = n_;
    for (Mask x = uncovered; x != 0; x &= x - 1) {
      const auto i = static_cast<std::size_t>(std::countr_zero(x));
      if (e == n_ || containing_[i].size() < containing_[e].size()) e = i;
    }
    std::vector<std::size_t> order(containing_[e]);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return std::popcount(masks_[a] & uncovered) > std::popcount(masks_[b] & uncovered);
    });
    for (auto c : order) {
      chosen_.push_back(c);
      if (search(covered | masks_[c], slots - 1)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  std::size_t n_;
  Mask full_;
  std::span<const Mask> masks_;
  Budget::Meter& meter_;
  std::vector<std::size_t> maximal_;
  std::vector<std::vector<std::size_t>> containing_;
  std::vector<std::size_t> chosen_;
};

}  // namespace

void for_each_irredundant_cover(std::size_t n, std::span<const Mask> masks, Budget::Meter& meter,
                                const std::function<void(std::span<const std::size_t>)>& visit) {
  if (n == 0) return;
  IrredundantCovers(n, masks, meter, visit).run();
}

std::vector<std::size_t> minimum_cover(std::size_t n, std::span<const Mask> masks, Budget::Meter& meter) {
  return MinimumCover(n, masks, meter).run();
}

}  // namespace nsg::detail
