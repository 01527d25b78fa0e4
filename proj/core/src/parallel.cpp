#include "kinflow/parallel.hpp"

namespace kinflow {

namespace {
int g_threads = 0;
}

int thread_count() {
  if (g_threads > 0) return g_threads;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void set_thread_count(int n) { g_threads = n; }

}  // namespace kinflow
