#include "atiyah/simplicial.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace atiyah {

FormPolynomial barycentric_connection_form(unsigned p) {
    FormPolynomial out;
    for (unsigned i = 1; i <= p; ++i)
        out += FormPolynomial::t(i) * FormPolynomial::omega(i);
    return out;
}

FormPolynomial barycentric_curvature(unsigned p) {
    FormPolynomial w = barycentric_connection_form(p);
    return differential(w) + w * w;
}

TracePolynomial simplicial_atiyah_power(unsigned k, unsigned p) {
    if (k < 1)
        throw std::invalid_argument("simplicial_atiyah_power: k must be >= 1");
    FormPolynomial kappa = barycentric_curvature(p);
    FormPolynomial power = FormPolynomial::scalar(Rational(1));
    for (unsigned i = 0; i < k; ++i)
        power *= kappa;
    // eps_k = (-1)^{k(k-1)/2}
    if ((k * (k - 1) / 2) % 2 == 1)
        power = -power;
    return trace_of(power);
}

namespace {
std::mutex g_integral_mutex;
std::map<std::pair<unsigned, std::vector<unsigned>>, Rational> g_integral_table;
} // namespace

Rational monomial_simplex_integral(unsigned p, const std::vector<unsigned> &exponents) {
    if (exponents.size() != p)
        throw std::invalid_argument("monomial_simplex_integral: need one exponent per t_i");
    // integral only depends on the multiset of exponents
    std::vector<unsigned> key = exponents;
    std::sort(key.begin(), key.end());
    {
        std::lock_guard<std::mutex> lock(g_integral_mutex);
        auto it = g_integral_table.find({p, key});
        if (it != g_integral_table.end())
            return it->second;
    }
    BigInt num(1);
    unsigned total = p;
    for (unsigned a : key) {
        num *= BigInt::factorial(a);
        total += a;
    }
    Rational value(num, BigInt::factorial(total));
    std::lock_guard<std::mutex> lock(g_integral_mutex);
    g_integral_table.emplace(std::make_pair(p, std::move(key)), value);
    return value;
}

TracePolynomial fibre_integrate_terms(const TracePolynomial &f, unsigned p, unsigned r) {
    std::vector<TraceTerm> raw;
    for (const auto &tm : f.terms()) {
        if (tm.xdeg() + tm.ddeg() != r)
            throw std::invalid_argument("fibre_integrate_terms: input not homogeneous of degree r");
        if (tm.xdeg() != r - p || tm.ddeg() != p)
            continue; // only the type (r-p, p) part survives
        for (auto &[idx, e] : tm.t)
            if (idx > p)
                throw std::invalid_argument("fibre_integrate_terms: t index exceeds level");
        // a p-fold dt-wedge over indices <= p must be exactly dt_1...dt_p;
        // anything else integrates to zero
        bool full = tm.dt.size() == p;
        for (unsigned i = 0; full && i < p; ++i)
            full = tm.dt[i] == i + 1;
        if (!full)
            continue;
        std::vector<unsigned> a(p, 0);
        for (auto &[idx, e] : tm.t)
            a[idx - 1] = e;
        Rational c = tm.coeff * monomial_simplex_integral(p, a);
        if (((r - p) * p) % 2 == 1)
            c = -c;
        raw.push_back(TraceTerm{std::move(c), {}, tm.word, {}});
    }
    return TracePolynomial::collect(std::move(raw));
}

CechCochain fibre_integrate_level(const TracePolynomial &f, unsigned p, unsigned r) {
    TracePolynomial v = fibre_integrate_terms(f, p, r);
    // the CechCochain constructor rejects abelian letters and degree mismatches
    return CechCochain(p, r - p, std::move(v));
}

namespace {

// The type-(2k-p, p) component of kappa_p^k without expanding the full power:
// the dt-degree is nondecreasing and grows by at most 1 per curvature factor,
// so terms that already exceed p or can no longer reach it are pruned after
// every multiplication. Only this component contributes to the level-p fibre
// integral.
FormPolynomial curvature_power_component(unsigned k, unsigned p) {
    FormPolynomial kappa = barycentric_curvature(p);
    FormPolynomial acc = FormPolynomial::scalar(Rational(1));
    for (unsigned j = 1; j <= k; ++j) {
        acc = acc * kappa;
        const unsigned remaining = k - j;
        std::vector<FormTerm> keep;
        keep.reserve(acc.terms().size());
        for (const auto &tm : acc.terms())
            if (tm.ddeg() <= p && tm.ddeg() + remaining >= p)
                keep.push_back(tm);
        acc = FormPolynomial::collect(std::move(keep));
    }
    return type_component(acc, 2 * k - p, p);
}

} // namespace

LiftTuple simplicial_atiyah_cochain(unsigned k) {
    if (k < 1)
        throw std::invalid_argument("simplicial_atiyah_cochain: k must be >= 1");
    LiftTuple out;
    out.k = k;
    out.components.reserve(k);
    for (unsigned p = 1; p <= k; ++p) {
        FormPolynomial component = curvature_power_component(k, p);
        if ((k * (k - 1) / 2) % 2 == 1)
            component = -component;
        out.components.push_back(fibre_integrate_level(trace_of(component), p, 2 * k));
    }
    return out;
}

GreenExample green_p1_example() {
    GreenExample g;
    const FormPolynomial theta = FormPolynomial::abelian("theta");
    g.connection0 = FormPolynomial::zero();
    g.connection1 = FormPolynomial::t(1) * theta;
    g.curvature0 = differential(g.connection0) + g.connection0 * g.connection0;
    g.curvature1 = differential(g.connection1) + g.connection1 * g.connection1;
    g.integral0 = fibre_integrate_terms(trace_of(g.curvature0), 1, 2);
    g.integral1 = fibre_integrate_terms(trace_of(g.curvature1), 1, 2);
    g.higher_powers_vanish =
        (g.curvature0 * g.curvature0).is_zero() && (g.curvature1 * g.curvature1).is_zero();

    TracePolynomial one = TracePolynomial::trace_monomial(Rational(1), {});
    g.total0 = one + g.integral0;
    g.total1 = one + g.integral1;
    g.char_literal = g.total0 - g.total1;
    g.char_magnitude = TracePolynomial::trace_monomial(Rational(1), {Letter::abelian("theta")});
    return g;
}

} // namespace atiyah
