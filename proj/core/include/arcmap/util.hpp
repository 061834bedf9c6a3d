#ifndef ARCMAP_UTIL_HPP
#define ARCMAP_UTIL_HPP

#include <cstddef>
#include <functional>
#include <string>

namespace arcmap {

/// Number of worker threads to use (hardware concurrency capped by the
/// ARCMAP_THREADS environment variable, minimum 1).
int worker_thread_count();

/// Runs fn(begin, end) over [0, count) split across worker threads.
/// Falls back to a single serial call when only one thread is available.
void parallel_for(std::size_t count,
                  const std::function<void(std::size_t, std::size_t)>& fn);

/// Formats a double with 15 significant digits in scientific notation.
/// Used for all CSV/report output so results are byte-reproducible.
std::string format_sig15(double x);

}  // namespace arcmap

#endif
