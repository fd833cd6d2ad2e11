#pragma once

#include "atiyah/rational.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace atiyah {

/// A degree-1 endomorphism-valued generator appearing in words.
///
///   omega(i)       B_i = omega_{alpha_0 alpha_i}, a holomorphic 1-form valued
///                  endomorphism; d(B_i) = -B_i^2, index i >= 1 (B_0 = 0 is
///                  eliminated identically and never materialized).
///   abelian(name)  a central, closed, square-zero scalar 1-form (theta).
///
/// Ordering: omegas by index, every omega before every abelian, abelians by
/// name. This ordering fixes all canonical forms and must stay stable.
class Letter {
  public:
    static Letter omega(unsigned index);
    static Letter abelian(std::string_view name);

    bool is_omega() const { return code_ > 0; }
    bool is_abelian() const { return code_ < 0; }
    unsigned omega_index() const;
    const std::string &abelian_name() const;

    friend bool operator==(const Letter &a, const Letter &b) { return a.code_ == b.code_; }
    friend bool operator!=(const Letter &a, const Letter &b) { return a.code_ != b.code_; }
    friend bool operator<(const Letter &a, const Letter &b);

  private:
    explicit Letter(std::int32_t code) : code_(code) {}
    std::int32_t code_ = 0; // >0: omega index; <0: -(abelian id)-1
};

using Word = std::vector<Letter>;

bool word_less(const Word &a, const Word &b);

/// Moves abelian letters to the tail (sorted by name), keeping the relative
/// order of the omega letters; each transposition of two degree-1 letters
/// contributes a factor -1. Returns nullopt when the word vanishes (a
/// square-zero abelian generator occurs twice).
std::optional<std::pair<Word, int>> normalize_word(const Word &w);

/// t-monomial: sorted (index, exponent) pairs, exponents > 0, indices >= 1.
using TMono = std::vector<std::pair<unsigned, unsigned>>;
/// dt-wedge: strictly ascending indices.
using DtSet = std::vector<unsigned>;

TMono tmono_mul(const TMono &a, const TMono &b);
/// Wedge of two dt-sets; nullopt when an index repeats, otherwise the merged
/// ascending set and the reordering sign.
std::optional<std::pair<DtSet, int>> dt_merge(const DtSet &a, const DtSet &b);

/// One canonical monomial: coeff * (t-monomial) * (word) * (dt-wedge).
/// Any reordering during multiplication contributes the Koszul sign.
struct FormTerm {
    Rational coeff;
    TMono t;
    Word word;
    DtSet dt;

    unsigned xdeg() const { return static_cast<unsigned>(word.size()); }
    unsigned ddeg() const { return static_cast<unsigned>(dt.size()); }
};

/// Key ordering used for canonical term merging and deterministic output.
bool term_key_less(const FormTerm &a, const FormTerm &b);

/// Finite sum of canonically merged FormTerms; zero coefficients pruned.
/// Equality is structural equality of canonical forms.
class FormPolynomial {
  public:
    FormPolynomial() = default;

    static FormPolynomial zero() { return {}; }
    static FormPolynomial scalar(Rational c);
    static FormPolynomial omega(unsigned index);
    static FormPolynomial t(unsigned index);
    static FormPolynomial dt(unsigned index);
    static FormPolynomial abelian(std::string_view name);
    /// Builds one term from raw pieces and canonicalizes it.
    static FormPolynomial term(Rational coeff, TMono t, Word word, DtSet dt);

    bool is_zero() const { return terms_.empty(); }
    const std::vector<FormTerm> &terms() const { return terms_; }

    friend FormPolynomial operator+(const FormPolynomial &a, const FormPolynomial &b);
    friend FormPolynomial operator-(const FormPolynomial &a, const FormPolynomial &b);
    friend FormPolynomial operator*(const FormPolynomial &a, const FormPolynomial &b);
    friend FormPolynomial operator*(const Rational &c, const FormPolynomial &f);
    FormPolynomial operator-() const;

    FormPolynomial &operator+=(const FormPolynomial &b) { return *this = *this + b; }
    FormPolynomial &operator-=(const FormPolynomial &b) { return *this = *this - b; }
    FormPolynomial &operator*=(const FormPolynomial &b) { return *this = *this * b; }

    friend bool operator==(const FormPolynomial &a, const FormPolynomial &b);
    friend bool operator!=(const FormPolynomial &a, const FormPolynomial &b) {
        return !(a == b);
    }

    /// Collect a raw term list into canonical form (normalizes words, merges
    /// equal keys, prunes zeros).
    static FormPolynomial collect(std::vector<FormTerm> raw);

    std::string to_string() const;

  private:
    std::vector<FormTerm> terms_; // sorted by term_key_less, coeffs nonzero
};

/// Graded differential: d(B_i) = -B_i^2, d(t_i) = dt_i, d(dt_i) = 0,
/// d(abelian) = 0, extended by the Koszul/Leibniz rule; the Delta-part picks
/// up the sign (-1)^(X-degree of the word).
FormPolynomial differential(const FormPolynomial &f);

/// Sub-sum of terms of exactly type (xdeg, ddeg); summing over all types
/// returns the original polynomial.
FormPolynomial type_component(const FormPolynomial &f, unsigned xdeg, unsigned ddeg);

std::string letter_to_string(const Letter &l);
std::string word_to_string(const Word &w);

} // namespace atiyah
