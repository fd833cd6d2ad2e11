#pragma once

#include "atiyah/lift.hpp"
#include "atiyah/simplicial.hpp"

namespace atiyah {

enum class ComponentRelation { EqualExactly, EqualAfterAlt, Different };

/// Componentwise comparison of the two pipelines for one class index k:
/// the direct bicomplex lift against the fibre-integrated simplicial class.
struct AgreementReport {
    unsigned k = 0;
    /// The (k,k) components agree after skew-symmetrisation (the theorem).
    bool top_equal_after_alt = false;
    /// Every component agrees at least after skew-symmetrisation.
    bool all_components_agree = false;

    struct Row {
        unsigned p = 0;
        ComponentRelation relation = ComponentRelation::Different;
    };
    std::vector<Row> rows; // p = 1..k
};

AgreementReport agreement_check(unsigned k);

/// The Cech-degree-1 coefficient law: |coefficient of tr(A^{2k-1})| equals
/// (k-1)! k! / (2k-1)! in both pipelines (1, 1/3, 1/10, 1/35, ...).
struct LeadingCoefficientRow {
    unsigned k = 0;
    Rational formula;
    Rational manual_coeff;
    Rational simplicial_coeff;
    bool magnitudes_match = false;
};

std::vector<LeadingCoefficientRow> leading_coefficient_check(unsigned kmax);

const char *relation_name(ComponentRelation r);

} // namespace atiyah
