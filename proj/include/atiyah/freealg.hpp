#pragma once

#include "atiyah/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace atiyah {

/// Exact linear combination of plain (non-cyclic, non-traced) words in free
/// variables x_0..x_k. No relations: words compare by literal equality.
class FreeWordPolynomial {
  public:
    using Monomial = std::vector<unsigned>;

    FreeWordPolynomial() = default;
    static FreeWordPolynomial one() {
        FreeWordPolynomial f;
        f.terms_[{}] = Rational(1);
        return f;
    }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rational> &terms() const { return terms_; }

    void add_term(const Monomial &m, const Rational &c);
    Rational coefficient_of(const Monomial &m) const;

    /// Right-multiplication by (x_i - x_j); a negative j means the second
    /// summand is absent (x_j = 0).
    FreeWordPolynomial times_difference(unsigned i, int j) const;
    /// The involution swapping x_a and x_b in every word.
    FreeWordPolynomial swap_variables(unsigned a, unsigned b) const;

    friend FreeWordPolynomial operator+(const FreeWordPolynomial &x,
                                        const FreeWordPolynomial &y);
    friend FreeWordPolynomial operator-(const FreeWordPolynomial &x,
                                        const FreeWordPolynomial &y);
    friend bool operator==(const FreeWordPolynomial &x, const FreeWordPolynomial &y) {
        return x.terms_ == y.terms_;
    }
    friend bool operator!=(const FreeWordPolynomial &x, const FreeWordPolynomial &y) {
        return !(x == y);
    }

    std::string to_string() const;

  private:
    std::map<Monomial, Rational> terms_;
};

/// A = sum over eta in S_{k+1} of sgn(eta) prod_{i=1..k} (x_{eta(i)} - x_{eta(0)}).
FreeWordPolynomial permutation_sum_base(unsigned k);
FreeWordPolynomial permutation_sum_base_serial(unsigned k);
/// B = sum over eta in S_{k+1} of sgn(eta) prod_{i=1..k} (x_{eta(i)} - x_{eta(i-1)}).
FreeWordPolynomial permutation_sum_chain(unsigned k);
FreeWordPolynomial permutation_sum_chain_serial(unsigned k);

/// A == B as free-word polynomials.
bool permutation_identity_check(unsigned k);

/// Dimension of the intersection of the (-1)-eigenspaces of all transposition
/// swaps, inside the span of degree-k words in x_0..x_k that contain exactly
/// k distinct variables (so omit exactly one).
unsigned skew_eigenspace_dimension(unsigned k);

} // namespace atiyah
