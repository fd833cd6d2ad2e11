#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "atiyah/simplicial.hpp"
#include "atiyah/trace.hpp"

#include <random>

using namespace atiyah;

namespace {

Letter B(unsigned i) { return Letter::omega(i); }

FormPolynomial random_form(std::mt19937 &rng, unsigned letters, unsigned max_terms) {
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<unsigned> idx(1, letters);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<unsigned> len(0, 3);
    std::uniform_int_distribution<unsigned> nterms(1, max_terms);
    FormPolynomial out;
    unsigned n = nterms(rng);
    for (unsigned t = 0; t < n; ++t) {
        TMono tm;
        if (coin(rng))
            tm.emplace_back(idx(rng), 1 + static_cast<unsigned>(coin(rng)));
        Word w;
        unsigned L = len(rng);
        for (unsigned i = 0; i < L; ++i)
            w.push_back(B(idx(rng)));
        DtSet dt;
        if (coin(rng))
            dt.push_back(idx(rng));
        if (coin(rng)) {
            unsigned j = idx(rng);
            if (std::find(dt.begin(), dt.end(), j) == dt.end())
                dt.push_back(j);
        }
        std::sort(dt.begin(), dt.end());
        out += FormPolynomial::term(Rational(coeff(rng)), tm, w, dt);
    }
    return out;
}

} // namespace

TEST_CASE("word normalization: abelian letters are central and square to zero") {
    Letter th = Letter::abelian("theta");
    auto n1 = normalize_word({th, B(1)});
    REQUIRE(n1.has_value());
    CHECK(n1->first == Word({B(1), th}));
    CHECK(n1->second == -1);
    CHECK(!normalize_word({th, B(1), th}).has_value()); // theta^2 = 0
    auto n2 = normalize_word({B(1), B(2)});
    CHECK(n2->first == Word({B(1), B(2)}));
    CHECK(n2->second == 1);
    // two distinct abelian names sort by name with the Koszul sign
    Letter et = Letter::abelian("eta");
    auto n3 = normalize_word({th, et});
    REQUIRE(n3.has_value());
    CHECK(n3->first == Word({et, th}));
    CHECK(n3->second == -1);
}

TEST_CASE("trace word canonicalization") {
    // even power of a single letter vanishes
    CHECK(!normalize_trace_word(Word(4, B(1))).has_value());
    for (unsigned k = 1; k <= 5; ++k)
        CHECK(!normalize_trace_word(Word(2 * k, B(1))).has_value());
    // odd powers survive
    CHECK(normalize_trace_word(Word(5, B(1))).has_value());

    // one rotation of a length-2 word gives (-1)^{2-1}
    auto r = normalize_trace_word({B(2), B(1)});
    REQUIRE(r.has_value());
    CHECK(r->letters == Word({B(1), B(2)}));
    CHECK(r->sign == -1);

    // rotation by two composes two sign-(-1) rotations
    auto r2 = normalize_trace_word({B(1), B(2), B(1), B(2)});
    REQUIRE(r2.has_value());
    CHECK(r2->letters == Word({B(1), B(2), B(1), B(2)}));
    CHECK(r2->sign == 1);

    // empty word is the unit trace word
    auto ru = normalize_trace_word({});
    REQUIRE(ru.has_value());
    CHECK(ru->letters.empty());
    CHECK(ru->sign == 1);
}

TEST_CASE("trace canonicalization is idempotent and restates the cyclic law") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<unsigned> idx(1, 3);
    std::uniform_int_distribution<unsigned> len(1, 7);
    for (int iter = 0; iter < 3000; ++iter) {
        Word w;
        unsigned L = len(rng);
        for (unsigned i = 0; i < L; ++i)
            w.push_back(B(idx(rng)));
        auto nf = normalize_trace_word(w);
        // cyclic law as stored data: tr(w) + (-1)^{|w|} tr(rotate(w)) = 0
        Word rot = w;
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        auto nfr = normalize_trace_word(rot);
        CHECK(nf.has_value() == nfr.has_value());
        if (nf) {
            int rel = (L - 1) % 2 == 0 ? 1 : -1; // tr(w) = rel * tr(rot)
            CHECK(nf->letters == nfr->letters);
            CHECK(nf->sign == rel * nfr->sign);
            // idempotence
            auto again = normalize_trace_word(nf->letters);
            REQUIRE(again.has_value());
            CHECK(again->letters == nf->letters);
            CHECK(again->sign == 1);
        }
    }
}

TEST_CASE("multiplication: Koszul signs, wedge annihilation, t-exponents") {
    auto B1 = FormPolynomial::omega(1);
    auto B2 = FormPolynomial::omega(2);
    auto t1 = FormPolynomial::t(1);
    auto dt1 = FormPolynomial::dt(1);
    auto dt2 = FormPolynomial::dt(2);

    CHECK((B1 * dt1) * (B2 * dt2) == -(B1 * B2 * dt1 * dt2));
    CHECK(t1 * t1 == FormPolynomial::term(Rational(1), {{1, 2}}, {}, {}));
    CHECK((dt1 * dt1).is_zero());
    // moving a dt past a degree-1 word letter flips the sign
    CHECK(dt1 * B1 == -(B1 * dt1));
    CHECK(dt1 * t1 == t1 * dt1);
    CHECK(dt2 * dt1 == -(dt1 * dt2));
}

TEST_CASE("term builders apply the wedge reordering sign") {
    auto dt1 = FormPolynomial::dt(1);
    auto dt2 = FormPolynomial::dt(2);
    auto dt3 = FormPolynomial::dt(3);
    CHECK(FormPolynomial::term(Rational(1), {}, {}, {2, 1}) == -(dt1 * dt2));
    CHECK(FormPolynomial::term(Rational(1), {}, {}, {3, 1, 2}) == dt1 * dt2 * dt3);
    CHECK(FormPolynomial::term(Rational(1), {}, {}, {1, 1}).is_zero());
    CHECK(TracePolynomial::term(Rational(1), {}, {B(1)}, {2, 1}) ==
          -TracePolynomial::term(Rational(1), {}, {B(1)}, {1, 2}));
}

TEST_CASE("multiplication is associative and unital (randomized)") {
    std::mt19937 rng(777);
    auto one = FormPolynomial::scalar(Rational(1));
    for (int iter = 0; iter < 60; ++iter) {
        auto a = random_form(rng, 3, 3);
        auto b = random_form(rng, 3, 3);
        auto c = random_form(rng, 3, 3);
        CHECK((a * b) * c == a * (b * c));
        CHECK(one * a == a);
        CHECK(a * one == a);
    }
}

TEST_CASE("differential: generator rules and the Koszul sign") {
    auto B1 = FormPolynomial::omega(1);
    auto t1 = FormPolynomial::t(1);
    auto dt1 = FormPolynomial::dt(1);

    CHECK(differential(B1) == -(B1 * B1));
    CHECK(differential(t1) == dt1);
    CHECK(differential(dt1).is_zero());
    CHECK(differential(FormPolynomial::abelian("theta")).is_zero());
    CHECK(differential(t1 * B1) == -(t1 * B1 * B1) - B1 * dt1);
    CHECK(differential(differential(t1 * B1)).is_zero());
}

TEST_CASE("d.d = 0 on random form polynomials") {
    std::mt19937 rng(123321);
    for (int iter = 0; iter < 120; ++iter) {
        auto f = random_form(rng, 3, 5);
        CAPTURE(iter);
        CHECK(differential(differential(f)).is_zero());
    }
}

TEST_CASE("type decomposition") {
    auto k1 = barycentric_curvature(1);
    auto B1 = FormPolynomial::omega(1);
    CHECK(type_component(k1, 1, 1) == -(B1 * FormPolynomial::dt(1)));
    CHECK(type_component(k1, 0, 2).is_zero());
    CHECK(type_component(barycentric_curvature(0), 2, 0).is_zero());
    auto f = FormPolynomial::t(1) * B1 * B1;
    CHECK(type_component(f, 2, 0) == f);

    // the type components partition the polynomial
    std::mt19937 rng(555);
    for (int iter = 0; iter < 40; ++iter) {
        auto g = random_form(rng, 3, 5);
        FormPolynomial sum;
        for (unsigned x = 0; x <= 6; ++x)
            for (unsigned d = 0; d <= 6; ++d)
                sum += type_component(g, x, d);
        CHECK(sum == g);
    }
}

TEST_CASE("Bianchi identity for the barycentric curvature, p <= 4") {
    for (unsigned p = 0; p <= 4; ++p) {
        auto w = barycentric_connection_form(p);
        auto kappa = barycentric_curvature(p);
        CAPTURE(p);
        CHECK((differential(kappa) + w * kappa - kappa * w).is_zero());
    }
}

TEST_CASE("trace differential agrees with tracing the form differential") {
    std::mt19937 rng(9001);
    for (int iter = 0; iter < 80; ++iter) {
        auto f = random_form(rng, 3, 5);
        CHECK(differential(trace_of(f)) == trace_of(differential(f)));
        CHECK(differential(differential(trace_of(f))).is_zero());
    }
}
