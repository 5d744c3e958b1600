#pragma once

#include <atomic>
#include <cstdint>
#include <string>

namespace nsg {

inline constexpr std::uint64_t kDefaultBudget = 5'000'000;

/// Node-count limit shared by the enumeration routines.
///
/// Each enumeration opens its own Meter; a meter throws
/// ErrorKind::budget_exceeded once it has been charged more than limit()
/// nodes. Spent nodes are accumulated across meters (atomically, so a
/// Budget can be shared by sweep workers) for reporting.
class Budget {
 public:
  explicit Budget(std::uint64_t limit = kDefaultBudget) : limit_(limit) {}
  Budget(const Budget&) = delete;
  Budget& operator=(const Budget&) = delete;

  class Meter {
   public:
    Meter(Budget& owner, std::string what) : owner_(&owner), what_(std::move(what)) {}
    Meter(const Meter&) = delete;
    Meter& operator=(const Meter&) = delete;
    ~Meter() { owner_->spent_.fetch_add(used_, std::memory_order_relaxed); }

    void tick(std::uint64_t nodes = 1);
    std::uint64_t used() const noexcept { return used_; }

   private:
    Budget* owner_;
    std::string what_;
    std::uint64_t used_ = 0;
  };

  Meter meter(std::string what) { return Meter(*this, std::move(what)); }

  std::uint64_t limit() const noexcept { return limit_; }
  std::uint64_t spent() const noexcept { return spent_.load(std::memory_order_relaxed); }

 private:
  std::uint64_t limit_;
  std::atomic<std::uint64_t> spent_{0};
};

}  // namespace nsg
