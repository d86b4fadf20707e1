#ifndef SKNN_THREADS_HPP
#define SKNN_THREADS_HPP

#include <cstddef>
#include <functional>

namespace sknn {

/**
 * Worker count used by parallel_for: an explicit request wins, otherwise
 * the SKNN_THREADS environment variable, otherwise 1. Never exceeds the
 * hardware concurrency.
 */
std::size_t effective_threads(std::size_t requested = 0);

/**
 * Runs fn(i) for i in [0, n). Each index writes only its own outputs, so
 * results are identical for every thread count; reductions are done by
 * the caller in index order.
 */
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn, std::size_t threads = 0);

}  // namespace sknn

#endif  // SKNN_THREADS_HPP
