#include "frobalg/budget.hpp"

namespace frobalg {

namespace {
thread_local BudgetScope* current_scope = nullptr;
}

BudgetScope::BudgetScope(Budget budget) : budget_(budget), parent_(current_scope) {
  current_scope = this;
}

BudgetScope::~BudgetScope() {
  current_scope = parent_;
  if (parent_ != nullptr) parent_->used_ += used_;
}

void charge_steps(std::uint64_t n) {
  BudgetScope* scope = current_scope;
  if (scope == nullptr) return;
  scope->used_ += n;
  if (scope->used_ > scope->budget_.max_steps)
    throw BudgetExceeded("step budget of " + std::to_string(scope->budget_.max_steps) +
                         " exceeded");
}

void check_degree(std::int64_t degree) {
  BudgetScope* scope = current_scope;
  if (scope != nullptr && degree > scope->budget_.max_degree)
    throw BudgetExceeded("degree cap of " + std::to_string(scope->budget_.max_degree) +
                         " exceeded");
}

std::uint64_t budget_used() { return current_scope == nullptr ? 0 : current_scope->used_; }

}  // namespace frobalg
