#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace swekit {

/// Runs fn(k) for k in [0, n) over `threads` contiguous chunks. Each index is
/// visited exactly once, so results written per index do not depend on the
/// thread count.
template <typename Fn>
void parallel_for(std::ptrdiff_t n, int threads, Fn&& fn)
{
  const std::ptrdiff_t workers = std::clamp<std::ptrdiff_t>(threads, 1, std::max<std::ptrdiff_t>(n, 1));
  if (workers == 1) {
    for (std::ptrdiff_t k = 0; k < n; ++k) fn(k);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  const std::ptrdiff_t chunk = (n + workers - 1) / workers;
  for (std::ptrdiff_t w = 0; w < workers; ++w) {
    const std::ptrdiff_t begin = w * chunk;
    const std::ptrdiff_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([begin, end, &fn] {
      for (std::ptrdiff_t k = begin; k < end; ++k) fn(k);
    });
  }
}

}  // namespace swekit
