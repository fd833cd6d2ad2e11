#pragma once

#include "atiyah/cech.hpp"

#include <cstddef>
#include <optional>

namespace atiyah {

/// All canonical nonzero cyclic trace classes of words of length q over the
/// letters B_1..B_p, in deterministic lexicographic order.
struct TraceBasis {
    unsigned p = 0;
    unsigned q = 0;
    std::vector<Word> elements;

    size_t size() const { return elements.size(); }
    /// Index of a canonical representative, nullopt when absent.
    std::optional<size_t> index_of(const Word &canonical) const;
};

TraceBasis enumerate_trace_basis(unsigned p, unsigned q);

/// Coordinates of a pure trace polynomial in the basis. Throws when a term
/// lies outside the basis (wrong letters or length).
std::vector<Rational> coordinates(const TraceBasis &basis, const TracePolynomial &v);
TracePolynomial from_coordinates(const TraceBasis &basis, const std::vector<Rational> &x);

/// The Cech differential as an exact sparse matrix between trace bases.
struct DeltaMatrix {
    TraceBasis domain;   // (p, q)
    TraceBasis codomain; // (p+1, q)
    // columns[j] = sparse column of delta(domain.elements[j]), (row, coeff)
    std::vector<std::vector<std::pair<size_t, Rational>>> columns;
};

DeltaMatrix build_delta_matrix(unsigned p, unsigned q);
DeltaMatrix build_delta_matrix_serial(unsigned p, unsigned q);

} // namespace atiyah
