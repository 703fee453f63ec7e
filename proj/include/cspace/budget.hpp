// Step budgets: every potentially long-running computation charges reduction
// steps against a shared counter and throws instead of hanging.
#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>

namespace cspace {

struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Budget {
  public:
    static constexpr std::int64_t kDefaultLimit = 1'000'000;

    explicit Budget(std::int64_t limit = kDefaultLimit)
        : limit_(limit), used_(std::make_shared<std::int64_t>(0)) {}

    void charge(std::int64_t n = 1) {
        *used_ += n;
        if (*used_ > limit_)
            throw budget_error("computation budget exceeded (" + std::to_string(limit_) +
                               " reduction steps); the problem is infeasible at this budget");
    }

    std::int64_t used() const { return *used_; }
    std::int64_t limit() const { return limit_; }

  private:
    std::int64_t limit_;
    std::shared_ptr<std::int64_t> used_;  // shared across copies handed to subcomputations
};

}  // namespace cspace
