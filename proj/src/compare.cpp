#include "atiyah/compare.hpp"

#include <stdexcept>

namespace atiyah {

AgreementReport agreement_check(unsigned k) {
    if (k < 1)
        throw std::invalid_argument("agreement_check: k must be >= 1");
    LiftTuple manual = lift_exponential_atiyah(k).tuple;
    LiftTuple simplicial = simplicial_atiyah_cochain(k);

    AgreementReport rep;
    rep.k = k;
    rep.all_components_agree = true;
    for (unsigned p = 1; p <= k; ++p) {
        AgreementReport::Row row;
        row.p = p;
        const CechCochain &m = manual.component(p);
        const CechCochain &s = simplicial.component(p);
        if (m == s) {
            row.relation = ComponentRelation::EqualExactly;
        } else if (skew_symmetrise(m) == skew_symmetrise(s)) {
            row.relation = ComponentRelation::EqualAfterAlt;
        } else {
            row.relation = ComponentRelation::Different;
            rep.all_components_agree = false;
        }
        rep.rows.push_back(row);
    }
    rep.top_equal_after_alt = rep.rows.back().relation != ComponentRelation::Different;
    return rep;
}

std::vector<LeadingCoefficientRow> leading_coefficient_check(unsigned kmax) {
    std::vector<LeadingCoefficientRow> out;
    for (unsigned k = 1; k <= kmax; ++k) {
        LeadingCoefficientRow row;
        row.k = k;
        row.formula = Rational(BigInt::factorial(k - 1) * BigInt::factorial(k),
                               BigInt::factorial(2 * k - 1));
        Word a_odd(2 * k - 1, Letter::omega(1));
        row.manual_coeff =
            lift_exponential_atiyah(k).tuple.component(1).value.coefficient_of(a_odd);
        row.simplicial_coeff =
            simplicial_atiyah_cochain(k).component(1).value.coefficient_of(a_odd);
        row.magnitudes_match = row.manual_coeff.abs() == row.formula &&
                               row.simplicial_coeff.abs() == row.formula;
        out.push_back(std::move(row));
    }
    return out;
}

const char *relation_name(ComponentRelation r) {
    switch (r) {
    case ComponentRelation::EqualExactly:
        return "equal exactly";
    case ComponentRelation::EqualAfterAlt:
        return "equal after skew-symmetrisation";
    default:
        return "DIFFERENT";
    }
}

} // namespace atiyah
