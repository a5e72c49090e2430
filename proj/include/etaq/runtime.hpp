#pragma once

#include <cstddef>

namespace etaq::runtime {

/// Worker count for parallel scans: ETAQ_THREADS if set and positive,
/// otherwise the hardware concurrency (at least 1).
unsigned thread_count();

} // namespace etaq::runtime
