#include "symcone/parallel.hpp"

#include <algorithm>
#include <thread>
#include <vector>

namespace symcone {

int effective_threads(int max_threads) {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw <= 0) hw = 1;
  return max_threads <= 0 ? hw : std::min(max_threads, hw);
}

void parallel_for(int n, int max_threads, const std::function<void(int)>& fn) {
  const int workers = std::min(effective_threads(max_threads), std::max(n, 1));
  if (workers <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int i = w; i < n; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace symcone
