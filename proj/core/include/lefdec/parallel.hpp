#ifndef LEFDEC_PARALLEL_HPP
#define LEFDEC_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace lefdec {

/// Process-wide worker-thread count. 0 means "hardware concurrency".
/// Resolution order: explicit set_thread_count, LEFDEC_THREADS env var,
/// hardware concurrency.
void set_thread_count(int n);
int thread_count();

/// Runs fn(i) for i in [0, n). Work is chunked across threads; fn must only
/// write to per-index slots so results are independent of the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace lefdec

#endif
