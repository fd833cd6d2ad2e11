#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "atiyah/compare.hpp"
#include "atiyah/simplicial.hpp"

using namespace atiyah;

namespace {

Letter B(unsigned i) { return Letter::omega(i); }
TracePolynomial tr1(Rational c, Word w) { return TracePolynomial::trace_monomial(c, std::move(w)); }

// Independent oracle for the simplex integrals: iterated one-dimensional
// polynomial integration. Each stage is the convolution
//   G_i(s) = int_0^s t^{a_i} G_{i-1}(s - t) dt,
// which maps the monomial g s^m to g * sum_j C(m,j) (-1)^j / (a+j+1) * s^{m+a+1};
// the integral over the simplex is G_p(1).
Rational binomial(unsigned n, unsigned r) {
    return Rational(BigInt::factorial(n),
                    BigInt::factorial(r) * BigInt::factorial(n - r));
}

Rational iterated_integral_oracle(unsigned p, const std::vector<unsigned> &a) {
    REQUIRE(a.size() == p);
    Rational coeff(1);
    unsigned degree = 0; // G_0(s) = 1
    for (unsigned i = 0; i < p; ++i) {
        Rational stage(0);
        for (unsigned j = 0; j <= degree; ++j) {
            Rational term = binomial(degree, j) / Rational(static_cast<long long>(a[i] + j + 1));
            if (j % 2 == 1)
                term = -term;
            stage += term;
        }
        coeff = coeff * stage;
        degree = degree + a[i] + 1;
    }
    return coeff;
}

} // namespace

TEST_CASE("barycentric curvature at small levels") {
    CHECK(barycentric_curvature(0).is_zero());

    auto B1 = FormPolynomial::omega(1);
    auto B2 = FormPolynomial::omega(2);
    auto t1 = FormPolynomial::t(1);
    auto t2 = FormPolynomial::t(2);
    CHECK(barycentric_curvature(1) ==
          -(B1 * FormPolynomial::dt(1)) - (t1 * B1 * B1) + (t1 * t1 * B1 * B1));

    // p = 2: -sum B_i dt_i - sum t_i B_i^2 + sum_{i,j} t_j t_i B_j B_i, eight terms
    FormPolynomial expected = -(B1 * FormPolynomial::dt(1)) - (B2 * FormPolynomial::dt(2)) -
                              (t1 * B1 * B1) - (t2 * B2 * B2) + (t1 * t1 * B1 * B1) +
                              (t2 * t2 * B2 * B2) + (t1 * t2 * B1 * B2) +
                              (t1 * t2 * B2 * B1);
    CHECK(barycentric_curvature(2) == expected);
    CHECK(barycentric_curvature(2).terms().size() == 8);
}

TEST_CASE("simplicial atiyah powers") {
    // k=1, p=1: the B^2 term dies under the trace
    CHECK(simplicial_atiyah_power(1, 1) ==
          TracePolynomial::term(Rational(-1), {}, {B(1)}, {1}));

    // k=2, p=2, type (2,2): (tr(B1B2) - tr(B2B1)) dt1 dt2 = 2 tr(B1B2) dt1 dt2
    TracePolynomial part22 = type_component(simplicial_atiyah_power(2, 2), 2, 2);
    CHECK(part22 == TracePolynomial::term(Rational(2), {}, {B(1), B(2)}, {1, 2}));

    CHECK(simplicial_atiyah_power(2, 0).is_zero());

    // closedness of the traced powers, k <= 3, p <= 3
    for (unsigned k = 1; k <= 3; ++k)
        for (unsigned p = 0; p <= 3; ++p) {
            CAPTURE(k);
            CAPTURE(p);
            CHECK(differential(simplicial_atiyah_power(k, p)).is_zero());
        }
}

TEST_CASE("simplex integrals: closed form, memo symmetry, named values") {
    CHECK(monomial_simplex_integral(2, {1, 0}) == Rational(1, 6));
    CHECK(monomial_simplex_integral(2, {0, 1}) == Rational(1, 6));
    CHECK(monomial_simplex_integral(2, {2, 0}) == Rational(1, 12));
    CHECK(monomial_simplex_integral(2, {1, 1}) == Rational(1, 24));
    CHECK(monomial_simplex_integral(1, {0}) == Rational(1));
    CHECK(monomial_simplex_integral(2, {0, 0}) == Rational(1, 2));
    CHECK(monomial_simplex_integral(3, {0, 0, 0}) == Rational(1, 6));
    CHECK_THROWS_AS(monomial_simplex_integral(2, {1}), std::invalid_argument);
}

TEST_CASE("closed form equals the iterated-integral oracle, p <= 4, sum a <= 6") {
    for (unsigned p = 1; p <= 4; ++p) {
        std::vector<unsigned> a(p, 0);
        // odometer over all exponent vectors with sum <= 6
        while (true) {
            unsigned total = 0;
            for (unsigned e : a)
                total += e;
            if (total <= 6) {
                CAPTURE(p);
                CAPTURE(total);
                CHECK(monomial_simplex_integral(p, a) == iterated_integral_oracle(p, a));
            }
            size_t pos = 0;
            while (pos < p && a[pos] == 6)
                a[pos++] = 0;
            if (pos == p)
                break;
            ++a[pos];
        }
    }
}

TEST_CASE("fibre integration of the explicit levels") {
    // k=1, p=1 -> tr(B1)
    CHECK(fibre_integrate_level(simplicial_atiyah_power(1, 1), 1, 2).value ==
          tr1(Rational(1), {B(1)}));
    // k=2, p=1 -> 1/3 tr(B1^3) via int 2(t - t^2) dt
    CHECK(fibre_integrate_level(simplicial_atiyah_power(2, 1), 1, 4).value ==
          tr1(Rational(1, 3), Word(3, B(1))));
    // k=3, p=1 -> -1/10 tr(B1^5)
    CHECK(fibre_integrate_level(simplicial_atiyah_power(3, 1), 1, 6).value ==
          tr1(Rational(-1, 10), Word(5, B(1))));
    // level 0 of anything vanishes: every sum is empty
    CHECK(fibre_integrate_terms(simplicial_atiyah_power(2, 0), 0, 4).is_zero());
}

TEST_CASE("fibre integration drops wrong types and incomplete wedges; linear") {
    // type (2,1) at p=2 is not (r-p, p) for r=4: dt-set {1} misses dt_2
    TracePolynomial f = TracePolynomial::term(Rational(1), {}, {B(1), B(1), B(1)}, {1});
    CHECK(fibre_integrate_terms(f, 2, 4).is_zero());
    // inhomogeneous input is rejected
    TracePolynomial g = f + TracePolynomial::term(Rational(1), {}, {B(1)}, {1});
    CHECK_THROWS_AS(fibre_integrate_terms(g, 2, 4), std::invalid_argument);
    // linearity over exact scalars
    TracePolynomial h = TracePolynomial::term(Rational(1), {{1, 1}}, {B(1), B(2)}, {1, 2});
    CHECK(fibre_integrate_terms(Rational(7, 3) * h, 2, 4) ==
          Rational(7, 3) * fibre_integrate_terms(h, 2, 4));
    // abelian letters cannot enter a Cech cochain
    TracePolynomial m =
        TracePolynomial::term(Rational(1), {}, {Letter::abelian("theta")}, {1});
    CHECK_THROWS_AS(fibre_integrate_level(m, 1, 2), std::invalid_argument);
}

TEST_CASE("simplicial tuple k=2: (1/3 tr(A^3), tr(w01 w12)) on the nose") {
    LiftTuple t = simplicial_atiyah_cochain(2);
    CHECK(t.component(1).value == tr1(Rational(1, 3), Word(3, B(1))));
    CHECK(t.component(2).value == tr1(Rational(1), {B(1), B(2)}));
    // tr(w01 w12) = tr(B1(B2-B1)) collapses to tr(B1B2)
    FormPolynomial w01 = FormPolynomial::omega(1);
    FormPolynomial w12 = FormPolynomial::omega(2) - w01;
    CHECK(t.component(2).value == trace_of(w01 * w12));
}

TEST_CASE("simplicial tuple k=3: the computed components") {
    LiftTuple t = simplicial_atiyah_cochain(3);
    CHECK(t.component(1).value == tr1(Rational(-1, 10), Word(5, B(1))));

    // p=2: -1/4 tr((w01 w12)^2) - 1/2 tr(w01^3 w12) - 1/2 tr(w01 w12^3); the
    // +1/2 tr(w01^2 w12^2) term of the direct lift is absent and only appears
    // after skew-symmetrisation
    FormPolynomial w01 = FormPolynomial::omega(1);
    FormPolynomial w12 = FormPolynomial::omega(2) - w01;
    TracePolynomial expected2 = trace_of(Rational(-1, 4) * (w01 * w12 * w01 * w12) +
                                         Rational(-1, 2) * (w01 * w01 * w01 * w12) +
                                         Rational(-1, 2) * (w01 * w12 * w12 * w12));
    CHECK(t.component(2).value == expected2);
    // canonical B-letter coordinates of the same value
    CHECK(t.component(2).value == tr1(Rational(1, 4), {B(1), B(2), B(1), B(2)}) +
                                      tr1(Rational(-1, 2), {B(1), B(1), B(1), B(2)}) +
                                      tr1(Rational(-1, 2), {B(1), B(2), B(2), B(2)}));
    // the missing term skew-symmetrises to zero, so Alt matches the direct lift
    TracePolynomial missing = trace_of(Rational(1, 2) * (w01 * w01 * w12 * w12));
    CHECK(skew_symmetrise(CechCochain(2, 4, missing)).is_zero());
    CHECK(skew_symmetrise(CechCochain(2, 4, t.component(2).value + missing)) ==
          skew_symmetrise(t.component(2)));

    // p=3: 1/2 tr(w01 w12 w23 - w01 w23 w12)
    FormPolynomial w23 = FormPolynomial::omega(3) - FormPolynomial::omega(2);
    CHECK(t.component(3).value == trace_of(Rational(1, 2) * (w01 * w12 * w23)) -
                                      trace_of(Rational(1, 2) * (w01 * w23 * w12)));
    CHECK(t.component(3).value ==
          tr1(Rational(1, 2), {B(1), B(2), B(3)}) - tr1(Rational(1, 2), {B(1), B(3), B(2)}));
}

TEST_CASE("green example on P^1") {
    GreenExample g = green_p1_example();
    FormPolynomial theta = FormPolynomial::abelian("theta");
    CHECK(g.connection0.is_zero());
    CHECK(g.connection1 == FormPolynomial::t(1) * theta);
    CHECK(g.curvature0.is_zero());
    // +- theta dt1: magnitude fixed, sign from the word-before-dt layout
    CHECK(g.curvature1 == -(theta * FormPolynomial::dt(1)));
    CHECK(g.integral0.is_zero());
    CHECK(g.integral1 == tr1(Rational(1), {Letter::abelian("theta")}));
    CHECK(g.higher_powers_vanish);
    TracePolynomial one = tr1(Rational(1), {});
    CHECK(g.total0 == one);
    CHECK(g.total1 == one + g.integral1);
    CHECK(g.char_literal == -g.char_magnitude);
    CHECK(g.char_magnitude == tr1(Rational(1), {Letter::abelian("theta")}));
}

TEST_CASE("pruned cochain assembly equals fibre integration of the full power") {
    for (unsigned k = 1; k <= 4; ++k) {
        LiftTuple t = simplicial_atiyah_cochain(k);
        for (unsigned p = 1; p <= k; ++p) {
            CAPTURE(k);
            CAPTURE(p);
            CHECK(t.component(p) ==
                  fibre_integrate_level(simplicial_atiyah_power(k, p), p, 2 * k));
        }
    }
}

TEST_CASE("stretch: the k=4 top components agree after skew-symmetrisation") {
    CechCochain top = fibre_integrate_level(simplicial_atiyah_power(4, 4), 4, 8);
    CHECK(skew_symmetrise(top) == skew_symmetrise(atiyah_cocycle(4)));
}

TEST_CASE("agreement of the two pipelines") {
    AgreementReport r1 = agreement_check(1);
    CHECK(r1.top_equal_after_alt);
    CHECK(r1.rows[0].relation == ComponentRelation::EqualExactly);

    AgreementReport r2 = agreement_check(2);
    CHECK(r2.top_equal_after_alt);
    CHECK(r2.rows[0].relation == ComponentRelation::EqualExactly);
    CHECK(r2.rows[1].relation == ComponentRelation::EqualExactly);

    AgreementReport r3 = agreement_check(3);
    CHECK(r3.top_equal_after_alt);
    CHECK(r3.all_components_agree);
    CHECK(r3.rows[0].relation == ComponentRelation::EqualExactly);
    CHECK(r3.rows[1].relation == ComponentRelation::EqualAfterAlt);
    CHECK(r3.rows[2].relation == ComponentRelation::EqualAfterAlt);
}
