#pragma once

#include "atiyah/trace.hpp"

namespace atiyah {

/// A Cech p-cochain of q-forms in generic-entry representation: one trace
/// polynomial in B_1..B_p standing for the entry at a generic index tuple
/// (alpha_0,...,alpha_p), written in the alpha_0-trivialisation with
/// B_i = omega_{alpha_0 alpha_i}. No t, dt or abelian generators are allowed
/// and every trace word has length exactly q.
struct CechCochain {
    unsigned p = 0;
    unsigned q = 0;
    TracePolynomial value;

    CechCochain() = default;
    CechCochain(unsigned p, unsigned q, TracePolynomial value);

    bool is_zero() const { return value.is_zero(); }

    friend bool operator==(const CechCochain &a, const CechCochain &b) {
        return a.p == b.p && a.q == b.q && a.value == b.value;
    }
    friend bool operator!=(const CechCochain &a, const CechCochain &b) { return !(a == b); }
};

/// Cech differential via index-substitution:
///   (delta f)_{a_0..a_{p+1}} = sum_m (-1)^m (face-m substitution of f).
/// Face 0 re-expresses omega_{a_1 a_{j+1}} in the alpha_0-basis through the
/// additive cocycle rule, so B_j <- B_{j+1} - B_1; face m >= 1 renames
/// B_j <- B_j (j < m), B_j <- B_{j+1} (j >= m).
CechCochain cech_delta(const CechCochain &c);

/// (1/(p+1)!) sum over sigma in S_{p+1} of sgn(sigma) times the
/// sigma-reindexed cochain, where omega_{a_i a_j} -> omega_{a_sigma(i) a_sigma(j)}
/// and omega_{a_a a_b} re-expressed as B_b - B_a (B_0 = 0).
CechCochain skew_symmetrise(const CechCochain &c);
/// Serial reference implementation of skew_symmetrise.
CechCochain skew_symmetrise_serial(const CechCochain &c);

/// Reindexing by one permutation sigma of {0..p} (no averaging, no sign).
CechCochain apply_index_permutation(const CechCochain &c, const std::vector<unsigned> &sigma);

int permutation_sign(const std::vector<unsigned> &perm);

/// The (k,k) cochain tr(prod_{i=1..k} (B_i - B_{i-1})) with B_0 = 0.
CechCochain atiyah_cocycle(unsigned k);

} // namespace atiyah
