#include "so5/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace so5 {

int worker_count() {
#ifdef _OPENMP
    int def = omp_get_max_threads();
#else
    int def = 1;
#endif
    const char* env = std::getenv("WITTEN_THREADS");
    if (env == nullptr || *env == '\0') return def;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) return def;
    if (v > 256) v = 256;  // oversubscription beyond this is never useful
    return static_cast<int>(v);
}

}  // namespace so5
