#include "synodyne/parallel.hpp"

#include <omp.h>

#include <atomic>
#include <cstdlib>

namespace synodyne {

namespace {
std::atomic<int> g_cap{0};
}

void set_worker_cap(int n) { g_cap.store(n > 0 ? n : 0); }

int worker_count() {
    int n = omp_get_max_threads();
    if (const char* env = std::getenv("SYNODYNE_THREADS")) {
        char* end = nullptr;
        const long parsed = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && parsed > 0 && parsed < 1 << 16)
            n = std::min(n, static_cast<int>(parsed));
    }
    if (const int cap = g_cap.load(); cap > 0) n = std::min(n, cap);
    return n > 0 ? n : 1;
}

}  // namespace synodyne
