#include "trialab/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace trialab {

int worker_count() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  int count = hw;
  if (const char* env = std::getenv("TRIALAB_THREADS")) {
    char* end = nullptr;
    long cap = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || cap < 1)
      count = 1;  // unparsable or non-positive: fall back to serial
    else
      count = static_cast<int>(std::min<long>(cap, 64));
  }
  return count;
}

std::size_t chunk_count(std::size_t total) {
  return std::min<std::size_t>(static_cast<std::size_t>(worker_count()), std::max<std::size_t>(total, 1));
}

void parallel_chunks(std::size_t total,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
  if (total == 0) return;
  const std::size_t chunks = chunk_count(total);
  if (chunks == 1) {
    fn(0, 0, total);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(chunks);
  const std::size_t base = total / chunks, extra = total % chunks;
  std::size_t begin = 0;
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t len = base + (c < extra ? 1 : 0);
    const std::size_t end = begin + len;
    threads.emplace_back([&fn, c, begin, end] { fn(c, begin, end); });
    begin = end;
  }
  for (auto& t : threads) t.join();
}

}  // namespace trialab
