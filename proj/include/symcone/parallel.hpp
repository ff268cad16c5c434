#pragma once

#include <functional>

namespace symcone {

/// Runs fn(i) for i in [0, n) across up to max_threads workers with a static
/// block partition. fn must write only to per-index slots; results are then
/// independent of the thread count. max_threads <= 0 uses the hardware count.
void parallel_for(int n, int max_threads, const std::function<void(int)>& fn);

/// Effective worker count used by parallel_for for the given request.
int effective_threads(int max_threads);

}  // namespace symcone
