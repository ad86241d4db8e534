#ifndef ORBITCAT_PARALLEL_HPP
#define ORBITCAT_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace orbitcat
{

// Worker cap. Defaults to ORBITCAT_THREADS, else the hardware count.
int thread_count();
void set_thread_count(int n); // n <= 0 restores the default

// Runs f(i) for i in [0, n) on up to thread_count() workers. The first
// exception thrown by a task is rethrown after all workers stop.
template <class Fn> void parallel_for(std::size_t n, Fn &&f)
{
  std::size_t const workers =
      std::min<std::size_t>(static_cast<std::size_t>(thread_count()), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i)
      f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        f(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error)
          error = std::current_exception();
        next = n;
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < workers; ++t)
    pool.emplace_back(work);
  for (auto &t : pool)
    t.join();
  if (error)
    std::rethrow_exception(error);
}

} // namespace orbitcat

#endif // ORBITCAT_PARALLEL_HPP
