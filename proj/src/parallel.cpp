#include "atiyah/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace atiyah {

void set_parallelism_width(int threads) {
#ifdef _OPENMP
    if (threads > 0)
        omp_set_num_threads(threads);
#else
    (void)threads;
#endif
}

int parallelism_width() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace atiyah
