#include "atiyah/linalg.hpp"

#include <stdexcept>

namespace atiyah {

LinearSolution solve_linear_system(std::vector<std::vector<Rational>> a,
                                   std::vector<Rational> b) {
    const size_t rows = a.size();
    if (b.size() != rows)
        throw std::invalid_argument("solve_linear_system: rhs size mismatch");
    const size_t cols = rows == 0 ? 0 : a[0].size();

    std::vector<size_t> pivot_row; // pivot_row[j] = row of pivot in column pivot_col[j]
    std::vector<size_t> pivot_col;
    size_t next_row = 0;
    for (size_t c = 0; c < cols && next_row < rows; ++c) {
        size_t pr = next_row;
        while (pr < rows && a[pr][c].is_zero())
            ++pr;
        if (pr == rows)
            continue;
        std::swap(a[pr], a[next_row]);
        std::swap(b[pr], b[next_row]);
        const Rational inv = a[next_row][c].inverse();
        for (size_t r = next_row + 1; r < rows; ++r) {
            if (a[r][c].is_zero())
                continue;
            Rational f = a[r][c] * inv;
            a[r][c] = Rational(0);
            for (size_t cc = c + 1; cc < cols; ++cc)
                if (!a[next_row][cc].is_zero())
                    a[r][cc] -= f * a[next_row][cc];
            b[r] -= f * b[next_row];
        }
        pivot_row.push_back(next_row);
        pivot_col.push_back(c);
        ++next_row;
    }

    LinearSolution out;
    out.rank = pivot_row.size();
    out.kernel_dim = cols - out.rank;
    for (size_t r = next_row; r < rows; ++r)
        if (!b[r].is_zero())
            return out; // infeasible

    out.feasible = true;
    out.x.assign(cols, Rational(0));
    for (size_t j = pivot_row.size(); j-- > 0;) {
        size_t r = pivot_row[j];
        size_t c = pivot_col[j];
        Rational acc = b[r];
        for (size_t cc = c + 1; cc < cols; ++cc)
            if (!a[r][cc].is_zero() && !out.x[cc].is_zero())
                acc -= a[r][cc] * out.x[cc];
        out.x[c] = acc / a[r][c];
    }
    return out;
}

} // namespace atiyah
