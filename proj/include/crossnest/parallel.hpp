#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace crossnest {

// Worker cap for the chunked reductions below.  CROSSNEST_THREADS=k limits
// (or raises, up to 16) the number of threads; unset means single-threaded,
// keeping default behaviour fully sequential.
inline unsigned worker_count() {
  const char* env = std::getenv("CROSSNEST_THREADS");
  if (env == nullptr) return 1;
  long v = std::strtol(env, nullptr, 10);
  if (v < 1) return 1;
  if (v > 16) return 16;
  return static_cast<unsigned>(v);
}

// Splits [0, count) into one contiguous chunk per worker and merges partial
// results in chunk order, so the result is identical at any thread count.
template <class R>
R chunk_reduce(std::size_t count, const std::function<R(std::size_t, std::size_t)>& run,
               const std::function<void(R&, R&&)>& merge, R init) {
  unsigned workers = worker_count();
  if (workers <= 1 || count < 2 * workers) {
    R whole = run(0, count);
    merge(init, std::move(whole));
    return init;
  }
  std::vector<R> parts(workers);
  std::vector<std::thread> threads;
  std::size_t per = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t lo = std::min(count, w * per);
    std::size_t hi = std::min(count, lo + per);
    threads.emplace_back([&, w, lo, hi] { parts[w] = run(lo, hi); });
  }
  for (auto& t : threads) t.join();
  for (auto& p : parts) merge(init, std::move(p));
  return init;
}

}  // namespace crossnest
