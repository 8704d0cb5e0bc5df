#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace frobalg {

// Thrown when a computation exceeds the active budget. Never accompanied by
// a partial (and therefore possibly wrong) answer.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Budget {
  std::uint64_t max_steps = 1'000'000;  // reduction steps plus processed pairs
  std::int64_t max_degree = std::numeric_limits<std::int64_t>::max();

  static Budget unlimited() {
    return {std::numeric_limits<std::uint64_t>::max(), std::numeric_limits<std::int64_t>::max()};
  }
};

// Installs a budget for the current thread for the lifetime of the scope.
// Scopes nest; the innermost one is charged, and its usage is added to the
// enclosing scope when it ends. Without any scope computations are unmetered.
class BudgetScope {
 public:
  explicit BudgetScope(Budget budget);
  ~BudgetScope();
  BudgetScope(const BudgetScope&) = delete;
  BudgetScope& operator=(const BudgetScope&) = delete;

  std::uint64_t used() const { return used_; }
  const Budget& budget() const { return budget_; }

 private:
  friend void charge_steps(std::uint64_t);
  friend void check_degree(std::int64_t);
  friend std::uint64_t budget_used();

  Budget budget_;
  std::uint64_t used_ = 0;
  BudgetScope* parent_;
};

void charge_steps(std::uint64_t n);
void check_degree(std::int64_t degree);
// Steps charged to the innermost scope so far (0 without a scope).
std::uint64_t budget_used();

}  // namespace frobalg
