#include "etaq/runtime.hpp"

#include <cstdlib>
#include <string>
#include <thread>

namespace etaq::runtime {

unsigned thread_count() {
    if (const char* env = std::getenv("ETAQ_THREADS")) {
        try {
            long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (...) {
            // fall through to the default on malformed input
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1u;
}

} // namespace etaq::runtime
