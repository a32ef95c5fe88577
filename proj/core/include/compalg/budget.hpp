#pragma once

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>

#include "compalg/error.hpp"

namespace compalg {

/// Wall-clock allowance for the exhaustive harnesses. Expiry raises
/// BudgetExceeded rather than truncating a result.
class Budget {
 public:
  using Clock = std::chrono::steady_clock;

  Budget() = default;
  explicit Budget(std::chrono::milliseconds allowance)
      : deadline_(Clock::now() + allowance) {}

  static Budget unlimited() { return Budget(); }

  /// COMPALG_BUDGET_MS when set, otherwise `fallback_ms` (0 = unlimited).
  static Budget from_env(std::int64_t fallback_ms) {
    std::int64_t ms = fallback_ms;
    if (const char* env = std::getenv("COMPALG_BUDGET_MS")) {
      char* end = nullptr;
      long long v = std::strtoll(env, &end, 10);
      if (end != env && v >= 0) ms = v;
    }
    if (ms <= 0) return unlimited();
    return Budget(std::chrono::milliseconds(ms));
  }

  [[nodiscard]] bool expired() const {
    return deadline_ && Clock::now() > *deadline_;
  }

  void check(const std::string& what) const {
    if (expired()) fail(Errc::BudgetExceeded, "time budget exhausted during " + what);
  }

 private:
  std::optional<Clock::time_point> deadline_;
};

}  // namespace compalg
