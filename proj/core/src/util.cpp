#include "arcmap/util.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <thread>
#include <vector>

namespace arcmap {

int worker_thread_count() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (const char* env = std::getenv("ARCMAP_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1) n = std::min(n, cap);
  }
  return n;
}

void parallel_for(std::size_t count,
                  const std::function<void(std::size_t, std::size_t)>& fn) {
  int nthreads = worker_thread_count();
  if (nthreads <= 1 || count < 2048) {
    fn(0, count);
    return;
  }
  std::size_t chunk = (count + nthreads - 1) / nthreads;
  std::vector<std::thread> pool;
  for (std::size_t begin = 0; begin < count; begin += chunk) {
    std::size_t end = std::min(begin + chunk, count);
    pool.emplace_back(fn, begin, end);
  }
  for (auto& t : pool) t.join();
}

std::string format_sig15(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.14e", x);
  return buf;
}

}  // namespace arcmap
