#include "polytorus/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

namespace polytorus {

std::size_t workerCount() {
  std::size_t n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("POLYTORUS_THREADS")) {
    try {
      const long cap = std::stol(env);
      if (cap >= 1) n = std::min(n, static_cast<std::size_t>(cap));
    } catch (const std::exception&) {
      // unparsable value: keep the hardware default
    }
  }
  return n;
}

void forEachChunk(std::size_t total, std::size_t chunkSize,
                  const std::function<void(std::size_t, std::size_t, std::size_t)>& body) {
  if (total == 0 || chunkSize == 0) return;
  const std::size_t chunks = (total + chunkSize - 1) / chunkSize;
  const std::size_t workers = std::min(workerCount(), chunks);

  auto run = [&](std::size_t chunk) {
    const std::size_t begin = chunk * chunkSize;
    body(chunk, begin, std::min(total, begin + chunkSize));
  };

  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) run(c);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failureMutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t c = next++; c < chunks; c = next++) {
          try {
            run(c);
          } catch (...) {
            std::lock_guard lock(failureMutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace polytorus
