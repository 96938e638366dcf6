#pragma once

#include <atomic>
#include <thread>
#include <vector>

#include <Eigen/Core>

namespace rpdo {

namespace detail {
inline std::atomic<int>& thread_count_storage() {
  static std::atomic<int> v{0};
  return v;
}
}  // namespace detail

// Process-wide worker count. 0 = hardware concurrency.
inline void set_thread_count(int n) { detail::thread_count_storage() = n; }

inline int thread_count() {
  const int v = detail::thread_count_storage();
  if (v > 0) return v;
  const unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

// Chunked parallel loop over [0, n). The body must only write to
// index-owned state; reductions are done by the caller over a buffer,
// serially, so results do not depend on the thread count.
template <typename Fn>
void parallel_for(Eigen::Index n, Fn&& body) {
  const Eigen::Index workers =
      std::min<Eigen::Index>(static_cast<Eigen::Index>(thread_count()), n);
  if (workers <= 1 || n < 2) {
    for (Eigen::Index i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<Eigen::Index> next{0};
  const Eigen::Index chunk = std::max<Eigen::Index>(1, n / (4 * workers));
  auto run = [&] {
    for (;;) {
      const Eigen::Index i0 = next.fetch_add(chunk);
      if (i0 >= n) break;
      const Eigen::Index i1 = std::min(n, i0 + chunk);
      for (Eigen::Index i = i0; i < i1; ++i) body(i);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers - 1));
  for (Eigen::Index t = 1; t < workers; ++t) pool.emplace_back(run);
  run();
  for (auto& th : pool) th.join();
}

}  // namespace rpdo
