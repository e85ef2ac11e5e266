#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace polytorus {

/// Worker threads used by grid and Monte Carlo loops: hardware concurrency,
/// capped by the POLYTORUS_THREADS environment variable when it is set.
std::size_t workerCount();

/// Runs body(chunk, begin, end) for every chunk of [0, total) of fixed size
/// `chunkSize`. Chunk boundaries depend only on (total, chunkSize), never on
/// the number of workers, so per-chunk results reduced in chunk order are
/// bit-identical for any thread count.
void forEachChunk(std::size_t total, std::size_t chunkSize,
                  const std::function<void(std::size_t, std::size_t, std::size_t)>& body);

/// Per-chunk map followed by an in-order reduction.
template <class T, class Map>
std::vector<T> mapChunks(std::size_t total, std::size_t chunkSize, Map&& map) {
  const std::size_t chunks = chunkSize == 0 ? 0 : (total + chunkSize - 1) / chunkSize;
  std::vector<T> out(chunks);
  forEachChunk(total, chunkSize, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    out[chunk] = map(chunk, begin, end);
  });
  return out;
}

}  // namespace polytorus
