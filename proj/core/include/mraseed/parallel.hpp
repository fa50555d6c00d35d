// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>

namespace mraseed {

// Worker count: hardware concurrency, capped by MRA_SEED_THREADS when set.
unsigned worker_count();

// Runs body(i) for i in [0, n). Each index is handled exactly once; callers
// write results into per-index slots, so output does not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace mraseed
