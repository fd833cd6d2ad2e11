#pragma once

#include "atiyah/lift.hpp"

namespace atiyah {

/// Barycentric connection form omega-bar_p = sum_{i=1..p} t_i B_i.
FormPolynomial barycentric_connection_form(unsigned p);

/// Barycentric curvature kappa_p = d(omega-bar_p) + omega-bar_p^2; zero at p=0.
/// At p = 1 this is -B_1 dt_1 - (t_1 - t_1^2) B_1^2.
FormPolynomial barycentric_curvature(unsigned p);

/// eps_k * kappa_p^k with eps_k = (-1)^{k(k-1)/2} and the trace applied.
TracePolynomial simplicial_atiyah_power(unsigned k, unsigned p);

/// Exact integral of prod t_i^{a_i} over the standard p-simplex:
/// (prod a_i!) / (p + sum a_i)!. Memoized on (p, sorted exponents); the
/// iterated-integral oracle for this closed form lives in the test suite.
Rational monomial_simplex_integral(unsigned p, const std::vector<unsigned> &exponents);

/// Fibre integration over the p-simplex of a homogeneous total-degree-r form:
/// extracts the type (r-p, p) part, keeps only terms whose dt-wedge is exactly
/// dt_1...dt_p, and multiplies by the orientation factor (-1)^{(r-p)p} times
/// the simplex integral of the t-monomial. Returns the bare trace polynomial.
TracePolynomial fibre_integrate_terms(const TracePolynomial &f, unsigned p, unsigned r);

/// fibre_integrate_terms wrapped as the (p, r-p) Cech cochain; rejects values
/// whose words carry abelian generators (those stay on the report path of the
/// P^1 example).
CechCochain fibre_integrate_level(const TracePolynomial &f, unsigned p, unsigned r);

/// Assembles the tuple of fibre integrals of the k-th simplicial class:
/// component p runs over 1..k at bidegree (p, 2k-p). The (0, 2k) component
/// vanishes identically since every sum at level 0 is empty.
LiftTuple simplicial_atiyah_cochain(unsigned k);

/// The P^1 example: the skyscraper sheaf at 0 resolved over the cover
/// {P^1 - inf, P^1 - 0}, with theta = dz/z an abelian closed generator.
/// Connection forms at simplicial level 1 are 0 and t_1 * theta.
struct GreenExample {
    FormPolynomial connection0, connection1;
    FormPolynomial curvature0, curvature1;
    TracePolynomial integral0, integral1; // fibre integrals over the 1-simplex
    TracePolynomial total0, total1;       // total classes: 1 and 1 + theta
    TracePolynomial char_literal;         // alternating sum total0 - total1
    TracePolynomial char_magnitude;       // theta
    bool higher_powers_vanish = false;    // squares of both curvatures are 0
};

GreenExample green_p1_example();

} // namespace atiyah
