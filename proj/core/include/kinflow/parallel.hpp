#ifndef KINFLOW_PARALLEL_HPP
#define KINFLOW_PARALLEL_HPP

#include <algorithm>
#include <thread>
#include <vector>

namespace kinflow {

int thread_count();
void set_thread_count(int n);  // n <= 0 restores the hardware default

// Static range split across worker threads. Chunk boundaries depend only on
// the range and thread count, and all writes are disjoint per index, so
// results are independent of scheduling.
template <class F>
void parallel_for(int begin, int end, F&& body) {
  int n = end - begin;
  int nt = std::min(thread_count(), n);
  if (nt <= 1) {
    for (int i = begin; i < end; ++i) body(i);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(nt);
  int chunk = (n + nt - 1) / nt;
  for (int t = 0; t < nt; ++t) {
    int lo = begin + t * chunk;
    int hi = std::min(end, lo + chunk);
    if (lo >= hi) break;
    workers.emplace_back([lo, hi, &body] {
      for (int i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& w : workers) w.join();
}

}  // namespace kinflow

#endif
