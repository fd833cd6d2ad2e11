#include "atiyah/lift.hpp"

#include "atiyah/linalg.hpp"

#include <stdexcept>

namespace atiyah {

std::optional<CechCochain> solve_lift_step(const CechCochain &target, unsigned p,
                                           LiftStep *info) {
    if (target.p != p + 1)
        throw std::invalid_argument("solve_lift_step: target must have Cech degree p+1");
    DeltaMatrix dm = build_delta_matrix(p, target.q);
    std::vector<Rational> rhs = coordinates(dm.codomain, target.value);

    std::vector<std::vector<Rational>> dense(
        dm.codomain.size(), std::vector<Rational>(dm.domain.size(), Rational(0)));
    for (size_t j = 0; j < dm.columns.size(); ++j)
        for (const auto &[row, coeff] : dm.columns[j])
            dense[row][j] = coeff;

    LinearSolution sol = solve_linear_system(std::move(dense), std::move(rhs));
    if (info) {
        info->p = p;
        info->q = target.q;
        info->domain_dim = dm.domain.size();
        info->codomain_dim = dm.codomain.size();
        info->rank = sol.rank;
        info->kernel_dim = sol.kernel_dim;
    }
    if (!sol.feasible)
        return std::nullopt;
    return CechCochain(p, target.q, from_coordinates(dm.domain, sol.x));
}

LiftResult lift_exponential_atiyah(unsigned k) {
    if (k < 1)
        throw std::invalid_argument("lift_exponential_atiyah: k must be >= 1");
    LiftResult out;
    out.tuple.k = k;
    out.tuple.components.assign(k, CechCochain());
    out.tuple.component(k) = atiyah_cocycle(k);
    for (unsigned i = k; i >= 2; --i) {
        const CechCochain &ci = out.tuple.component(i);
        TracePolynomial rhs = differential(ci.value);
        if (staircase_sign(i) < 0)
            rhs = -rhs;
        CechCochain target(i, ci.q + 1, std::move(rhs));
        LiftStep step;
        auto c = solve_lift_step(target, i - 1, &step);
        out.steps.push_back(step);
        if (!c)
            throw std::runtime_error("lift_exponential_atiyah: staircase infeasible at i=" +
                                     std::to_string(i));
        out.tuple.component(i - 1) = std::move(*c);
    }
    if (!differential(out.tuple.component(1).value).is_zero())
        throw std::runtime_error("lift_exponential_atiyah: d(c_1) != 0");
    return out;
}

VerifyReport verify_total_closed(const LiftTuple &t) {
    VerifyReport rep;
    if (t.k == 0 || t.components.size() != t.k)
        return rep;
    rep.top_delta_closed = cech_delta(t.component(t.k)).is_zero();
    rep.bottom_d_closed = differential(t.component(1).value).is_zero();
    bool all_convention = true;
    bool all_some = true;
    for (unsigned i = 2; i <= t.k; ++i) {
        SquareCheck sq;
        sq.i = i;
        TracePolynomial lhs = cech_delta(t.component(i - 1)).value;
        TracePolynomial d_ci = differential(t.component(i).value);
        TracePolynomial conv = staircase_sign(i) < 0 ? -d_ci : d_ci;
        if (lhs == conv) {
            sq.closes_with_convention = true;
            sq.closes_with_some_sign = true;
            sq.observed_sign = staircase_sign(i);
        } else if (lhs == -conv) {
            sq.closes_with_some_sign = true;
            sq.observed_sign = -staircase_sign(i);
            sq.residual = (lhs - conv).to_string();
        } else {
            sq.residual = (lhs - conv).to_string();
        }
        all_convention = all_convention && sq.closes_with_convention;
        all_some = all_some && sq.closes_with_some_sign;
        rep.squares.push_back(std::move(sq));
    }
    rep.closed = rep.top_delta_closed && rep.bottom_d_closed && all_convention;
    rep.closed_up_to_square_signs = rep.top_delta_closed && rep.bottom_d_closed && all_some;
    return rep;
}

// ---------------------------------------------------------------------------
// Reference solutions

namespace {

FormPolynomial fp_pow(const FormPolynomial &f, unsigned n) {
    FormPolynomial out = FormPolynomial::scalar(Rational(1));
    for (unsigned i = 0; i < n; ++i)
        out *= f;
    return out;
}

} // namespace

CechCochain k3_reference_rho() {
    FormPolynomial a = FormPolynomial::omega(1);
    FormPolynomial x = FormPolynomial::omega(2) - a;
    FormPolynomial p = Rational(-1, 4) * fp_pow(a * x, 2) +
                       Rational(1, 2) * (fp_pow(a, 2) * fp_pow(x, 2)) +
                       Rational(-1, 2) * (fp_pow(a, 3) * x) +
                       Rational(-1, 2) * (a * fp_pow(x, 3));
    return CechCochain(2, 4, trace_of(p));
}

namespace {

// coeff_a5ba: coefficient of A^5(B-A) in P^(2,6) (tabulated 5, forced 1);
// coeff_ababa: coefficient of A(B-A)^2(C-A)(B-A) in P^(3,5) (tabulated -5,
// forced -1).
LiftTuple k4_table(const Rational &coeff_a5ba, const Rational &coeff_ababa) {
    const FormPolynomial a = FormPolynomial::omega(1);
    const FormPolynomial b = FormPolynomial::omega(2);
    const FormPolynomial c = FormPolynomial::omega(3);
    const FormPolynomial d = FormPolynomial::omega(4);
    const FormPolynomial ba = b - a;
    const FormPolynomial ca = c - a;

    FormPolynomial p44 = a * ba * (c - b) * (d - c);

    FormPolynomial p35 =
        Rational(13, 5) * fp_pow(a, 5) + Rational(13) * (fp_pow(a, 4) * ba) +
        Rational(5) * (fp_pow(a, 3) * fp_pow(ba, 2)) +
        Rational(5) * (fp_pow(a, 3) * ba * ca) + Rational(3) * (fp_pow(a, 3) * ca * ba) +
        Rational(4) * (fp_pow(a, 2) * ba * a * ba) +
        Rational(4) * (fp_pow(a, 2) * ba * a * ca) +
        Rational(3) * (fp_pow(a, 2) * fp_pow(ba, 3)) -
        fp_pow(a, 2) * fp_pow(ba, 2) * ca +
        Rational(5) * (fp_pow(a, 2) * ba * fp_pow(ca, 2)) +
        Rational(5) * (fp_pow(a, 2) * ca * a * ba) +
        Rational(2) * (fp_pow(a, 2) * ca * fp_pow(ba, 2)) +
        fp_pow(a, 2) * ca * ba * ca + Rational(3) * (fp_pow(a, 2) * fp_pow(ca, 2) * ba) -
        a * ba * a * ca * ba + Rational(5) * (a * ba * a * fp_pow(ca, 2)) +
        coeff_ababa * (a * fp_pow(ba, 2) * ca * ba) +
        Rational(5) * (a * ba * ca * a * ca) + Rational(5) * (a * ba * fp_pow(ca, 3)) +
        Rational(4) * (fp_pow(a * ca, 2) * ba) - Rational(2) * (a * ca * fp_pow(ba, 3)) +
        Rational(4) * (a * ca * fp_pow(ba, 2) * ca) + a * fp_pow(ca * ba, 2) +
        Rational(2) * (a * fp_pow(ca, 2) * fp_pow(ba, 2)) +
        a * fp_pow(ca, 2) * ba * ca + Rational(3) * (a * fp_pow(ca, 3) * ba);

    FormPolynomial p26 =
        coeff_a5ba * (fp_pow(a, 5) * ba) - Rational(4) * (fp_pow(a, 4) * fp_pow(ba, 2)) +
        fp_pow(a, 3) * ba * a * ba + fp_pow(a, 3) * fp_pow(ba, 3) -
        Rational(5) * (fp_pow(a, 2) * ba * a * fp_pow(ba, 2)) -
        Rational(4) * (fp_pow(a, 2) * fp_pow(ba, 2) * a * ba) -
        Rational(4) * (fp_pow(a, 2) * fp_pow(ba, 4)) +
        Rational(1, 3) * fp_pow(a * ba, 3) + a * ba * a * fp_pow(ba, 3) +
        a * fp_pow(ba, 5);

    LiftTuple t;
    t.k = 4;
    t.components = {
        CechCochain(1, 7, trace_of(Rational(-1, 35) * fp_pow(a, 7))),
        CechCochain(2, 6, trace_of(Rational(1, 5) * p26)),
        CechCochain(3, 5, trace_of(Rational(1, 5) * p35)),
        CechCochain(4, 4, trace_of(p44)),
    };
    return t;
}

} // namespace

LiftTuple k4_reference_lift() { return k4_table(Rational(5), Rational(-5)); }

LiftTuple k4_reference_lift_corrected() { return k4_table(Rational(1), Rational(-1)); }

} // namespace atiyah
