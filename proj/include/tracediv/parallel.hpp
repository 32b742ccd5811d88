#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace tracediv {

// Worker count resolution: explicit request wins, else TRACEDIV_WORKERS, else 1.
int resolve_workers(int requested);

// Runs fn(chunk_index, begin, end) over contiguous chunks of [0, count).
// Results must be merged by the caller in chunk order so the outcome is
// independent of the worker count.
template <typename Fn>
void run_chunks(size_t count, int workers, Fn&& fn) {
  if (count == 0) return;
  const size_t w = std::min<size_t>(static_cast<size_t>(workers < 1 ? 1 : workers), count);
  if (w <= 1) {
    fn(0, size_t{0}, count);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(w);
  const size_t base = count / w, extra = count % w;
  size_t begin = 0;
  for (size_t i = 0; i < w; ++i) {
    const size_t end = begin + base + (i < extra ? 1 : 0);
    threads.emplace_back([&fn, i, begin, end] { fn(i, begin, end); });
    begin = end;
  }
  for (auto& t : threads) t.join();
}

}  // namespace tracediv
