#pragma once

#include "atiyah/rational.hpp"

#include <cstddef>
#include <vector>

namespace atiyah {

struct LinearSolution {
    bool feasible = false;
    std::vector<Rational> x; // one entry per column; free variables are 0
    size_t rank = 0;
    size_t kernel_dim = 0;
};

/// Exact Gaussian elimination with deterministic pivoting: columns are
/// processed left to right and the pivot is the smallest-index unused row
/// with a nonzero entry. Free variables are set to 0.
LinearSolution solve_linear_system(std::vector<std::vector<Rational>> a,
                                   std::vector<Rational> b);

} // namespace atiyah
