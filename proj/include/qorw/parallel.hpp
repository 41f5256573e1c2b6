#pragma once

#include <functional>

namespace qorw {

// Worker cap: QORW_THREADS if set, else hardware concurrency.
int worker_count();

// Static chunked parallel loop over [0, n). Each index writes only its own
// output slot, so results are identical for any worker count.
void parallel_for(int n, const std::function<void(int)>& body);

}  // namespace qorw
