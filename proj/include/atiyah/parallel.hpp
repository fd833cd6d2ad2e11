#pragma once

namespace atiyah {

/// Sets the worker count for the OpenMP kernels (skew-symmetrisation, delta
/// matrix columns, permutation sums). 0 keeps the runtime default. No-op in
/// builds without OpenMP.
void set_parallelism_width(int threads);

int parallelism_width();

} // namespace atiyah
