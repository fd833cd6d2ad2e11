#pragma once

#include "atiyah/form.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace atiyah {

/// Canonical representative of a cyclic-equivalence class of a word of
/// degree-1 generators under the signed trace law
///     tr(A_1 A_2 ... A_m) = (-1)^(m-1) tr(A_2 ... A_m A_1).
/// `sign` relates the input to the representative: tr(input) = sign * tr(letters).
struct TraceWord {
    Word letters;
    int sign = 1;
};

/// Returns the canonical signed rotation, or nullopt (Zero) when the
/// rotations force tr(w) = -tr(w); this is what makes tr(A^{2k}) = 0.
/// The empty word canonicalizes to the unit trace word (the formal scalar 1).
std::optional<TraceWord> normalize_trace_word(const Word &letters);

/// One summand of a trace polynomial: coeff * t-monomial * tr(word) * dt-wedge,
/// with `word` already the canonical cyclic representative.
struct TraceTerm {
    Rational coeff;
    TMono t;
    Word word;
    DtSet dt;

    unsigned xdeg() const { return static_cast<unsigned>(word.size()); }
    unsigned ddeg() const { return static_cast<unsigned>(dt.size()); }
};

/// Exact linear combination of traced monomials, canonically merged (rotation
/// signs folded into coefficients). Every term carries exactly one trace word;
/// products of traces never arise in this engine.
class TracePolynomial {
  public:
    TracePolynomial() = default;

    static TracePolynomial zero() { return {}; }
    /// coeff * tr(word); canonicalizes, may be zero.
    static TracePolynomial trace_monomial(Rational coeff, Word word);
    static TracePolynomial term(Rational coeff, TMono t, Word word, DtSet dt);
    static TracePolynomial collect(std::vector<TraceTerm> raw);

    bool is_zero() const { return terms_.empty(); }
    const std::vector<TraceTerm> &terms() const { return terms_; }

    friend TracePolynomial operator+(const TracePolynomial &a, const TracePolynomial &b);
    friend TracePolynomial operator-(const TracePolynomial &a, const TracePolynomial &b);
    friend TracePolynomial operator*(const Rational &c, const TracePolynomial &f);
    TracePolynomial operator-() const;
    TracePolynomial &operator+=(const TracePolynomial &b) { return *this = *this + b; }
    TracePolynomial &operator-=(const TracePolynomial &b) { return *this = *this - b; }

    friend bool operator==(const TracePolynomial &a, const TracePolynomial &b);
    friend bool operator!=(const TracePolynomial &a, const TracePolynomial &b) {
        return !(a == b);
    }

    /// Coefficient of the class of `word` (canonicalized first; zero class
    /// yields 0). Ignores t/dt parts: only valid on pure trace polynomials.
    Rational coefficient_of(const Word &word) const;

    std::string to_string() const;

  private:
    std::vector<TraceTerm> terms_;
};

/// Applies tr termwise to a FormPolynomial.
TracePolynomial trace_of(const FormPolynomial &f);

/// Differential on traced forms: trace-Leibniz in the word (d(B) = -B^2,
/// d(abelian) = 0) plus the Delta-part with the Koszul sign (-1)^{|word|}.
TracePolynomial differential(const TracePolynomial &f);

TracePolynomial type_component(const TracePolynomial &f, unsigned xdeg, unsigned ddeg);

/// A letter substitution target: an exact linear combination of letters.
using LetterCombination = std::vector<std::pair<Rational, Letter>>;

/// Algebra-map substitution followed by re-canonicalization: every letter of
/// every trace word is replaced by its image and the products expanded.
TracePolynomial substitute_letters(
    const TracePolynomial &f,
    const std::function<const LetterCombination &(const Letter &)> &image);

} // namespace atiyah
