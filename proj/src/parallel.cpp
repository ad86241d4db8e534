#include "orbitcat/parallel.hpp"

#include <cstdlib>
#include <string>

namespace orbitcat
{

namespace
{

std::atomic<int> override_threads{0};

int default_threads()
{
  if (char const *env = std::getenv("ORBITCAT_THREADS")) {
    try {
      int n = std::stoi(env);
      if (n > 0)
        return n;
    } catch (...) {
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

} // namespace

int thread_count()
{
  int n = override_threads.load();
  return n > 0 ? n : default_threads();
}

void set_thread_count(int n) { override_threads = n > 0 ? n : 0; }

} // namespace orbitcat
