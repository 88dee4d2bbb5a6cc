// SPDX-License-Identifier: Apache-2.0
//
// risim - physics-based simulator for RIS-assisted wireless links
// Copyright (c) 2026 risim contributors

#pragma once

#include <cstddef>
#include <functional>

namespace risim {

// Process-wide worker count for element-parallel loops (clamped to >= 1).
void set_worker_count(int n);
int worker_count();

// Runs fn(i) for i in [0, n) split into contiguous blocks across workers.
// fn must only write state owned by index i, so results do not depend on the
// worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace risim
