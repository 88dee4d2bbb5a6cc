// SPDX-License-Identifier: Apache-2.0
//
// risim - physics-based simulator for RIS-assisted wireless links
// Copyright (c) 2026 risim contributors

#include "core/parallel.hpp"

#include <atomic>
#include <thread>
#include <vector>

namespace risim {

namespace {
std::atomic<int> g_workers{1};
}  // namespace

void set_worker_count(int n) { g_workers.store(n < 1 ? 1 : n); }

int worker_count() { return g_workers.load(); }

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const int workers = worker_count();
  if (workers == 1 || n < 256) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const std::size_t k = static_cast<std::size_t>(workers);
  std::vector<std::thread> pool;
  pool.reserve(k - 1);
  auto run_block = [&fn, n, k](std::size_t w) {
    const std::size_t lo = n * w / k;
    const std::size_t hi = n * (w + 1) / k;
    for (std::size_t i = lo; i < hi; ++i) fn(i);
  };
  for (std::size_t w = 1; w < k; ++w) pool.emplace_back(run_block, w);
  run_block(0);
  for (auto& t : pool) t.join();
}

}  // namespace risim
