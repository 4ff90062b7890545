#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace jacrank {

/// Execution knobs shared by every enumeration kernel.
struct RunConfig {
  unsigned threads = 1;
  std::uint64_t max_terms = 1'000'000'000;  // summation-term budget
};

/// Thread count from JACRANK_THREADS, or 1.
inline unsigned threads_from_env() {
  if (const char* env = std::getenv("JACRANK_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

/// Splits [0, n) into contiguous blocks, runs `body(begin, end)` on each, and
/// returns the partial results in block order. The reduction is left to the
/// caller so that it is performed in a fixed order regardless of scheduling.
template <class Partial, class Body>
std::vector<Partial> parallel_blocks(std::uint64_t n, unsigned threads, Body body) {
  unsigned workers = std::max(1u, threads);
  if (n < workers) workers = static_cast<unsigned>(std::max<std::uint64_t>(n, 1));
  std::vector<Partial> partials(workers);
  if (workers == 1) {
    partials[0] = body(std::uint64_t{0}, n);
    return partials;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    std::uint64_t begin = n * w / workers;
    std::uint64_t end = n * (w + 1) / workers;
    pool.emplace_back([&, w, begin, end] {
      try {
        partials[w] = body(begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return partials;
}

}  // namespace jacrank
