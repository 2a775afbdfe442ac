#include "crossvol/parallel.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <thread>
#include <vector>

namespace crossvol {

std::size_t thread_count() {
  if (const char* env = std::getenv("CROSSVOL_THREADS"); env != nullptr && *env != '\0') {
    std::size_t value = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec == std::errc() && ptr == end && value > 0) return value;
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

std::size_t parallel_chunks(std::size_t n,
                            const std::function<void(std::size_t, std::size_t, std::size_t)>& body,
                            std::size_t max_chunks) {
  if (n == 0) return 0;
  std::size_t chunks = std::min(n, thread_count());
  if (max_chunks > 0) chunks = std::min(chunks, max_chunks);
  const std::size_t base = n / chunks;
  const std::size_t extra = n % chunks;
  auto bounds = [&](std::size_t c) {
    const std::size_t begin = c * base + std::min(c, extra);
    return std::pair{begin, begin + base + (c < extra ? 1 : 0)};
  };
  if (chunks == 1) {
    body(0, 0, n);
    return 1;
  }
  std::vector<std::exception_ptr> errors(chunks);
  {
    std::vector<std::jthread> workers;
    workers.reserve(chunks - 1);
    for (std::size_t c = 1; c < chunks; ++c) {
      auto [b, e] = bounds(c);
      workers.emplace_back([&body, &errors, c, b, e] {
        try {
          body(c, b, e);
        } catch (...) {
          errors[c] = std::current_exception();
        }
      });
    }
    auto [b0, e0] = bounds(0);
    try {
      body(0, b0, e0);
    } catch (...) {
      errors[0] = std::current_exception();
    }
  }
  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
  return chunks;
}

}  // namespace crossvol
