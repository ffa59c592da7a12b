#ifndef LEFDEC_BUDGETS_HPP
#define LEFDEC_BUDGETS_HPP

#include <cstdint>

namespace lefdec {

/// Resource limits shared by the compute modules. The defaults keep the
/// standard suites interactive; raise max_operator_dim for large sweeps.
struct Budgets {
  std::int64_t max_operator_dim = 5000;
  int max_closure_waves = 64;
  int idempotent_retries = 8;
};

}  // namespace lefdec

#endif
