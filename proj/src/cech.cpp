#include "atiyah/cech.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace atiyah {

CechCochain::CechCochain(unsigned p_, unsigned q_, TracePolynomial v)
    : p(p_), q(q_), value(std::move(v)) {
    for (const auto &tm : value.terms()) {
        if (!tm.t.empty() || !tm.dt.empty())
            throw std::invalid_argument("CechCochain: t/dt generators not allowed");
        if (tm.word.size() != q)
            throw std::invalid_argument("CechCochain: word length differs from form degree");
        for (const auto &l : tm.word) {
            if (!l.is_omega())
                throw std::invalid_argument("CechCochain: abelian generators not allowed");
            if (l.omega_index() > p)
                throw std::invalid_argument("CechCochain: generator index exceeds Cech degree");
        }
    }
}

namespace {

// Substitution table for letters B_1..B_n; index 0 unused.
struct SubstTable {
    std::vector<LetterCombination> images;

    const LetterCombination &operator()(const Letter &l) const {
        if (!l.is_omega())
            throw std::invalid_argument("substitution defined on omega letters only");
        return images.at(l.omega_index());
    }
};

TracePolynomial apply_table(const TracePolynomial &v, const SubstTable &table) {
    return substitute_letters(
        v, [&table](const Letter &l) -> const LetterCombination & { return table(l); });
}

} // namespace

CechCochain cech_delta(const CechCochain &c) {
    TracePolynomial out;
    for (unsigned m = 0; m <= c.p + 1; ++m) {
        SubstTable table;
        table.images.resize(c.p + 1);
        for (unsigned j = 1; j <= c.p; ++j) {
            LetterCombination img;
            if (m == 0) {
                img.emplace_back(Rational(1), Letter::omega(j + 1));
                img.emplace_back(Rational(-1), Letter::omega(1));
            } else if (j < m) {
                img.emplace_back(Rational(1), Letter::omega(j));
            } else {
                img.emplace_back(Rational(1), Letter::omega(j + 1));
            }
            table.images[j] = std::move(img);
        }
        TracePolynomial face = apply_table(c.value, table);
        if (m % 2 == 0)
            out += face;
        else
            out -= face;
    }
    return CechCochain(c.p + 1, c.q, std::move(out));
}

int permutation_sign(const std::vector<unsigned> &perm) {
    long inv = 0;
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j])
                ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

namespace {

SubstTable reindex_table(unsigned p, const std::vector<unsigned> &sigma) {
    // B_i = omega_{a_0 a_i} -> omega_{a_sigma(0) a_sigma(i)} = B_sigma(i) - B_sigma(0)
    SubstTable table;
    table.images.resize(p + 1);
    for (unsigned i = 1; i <= p; ++i) {
        LetterCombination img;
        if (sigma[i] != 0)
            img.emplace_back(Rational(1), Letter::omega(sigma[i]));
        if (sigma[0] != 0)
            img.emplace_back(Rational(-1), Letter::omega(sigma[0]));
        table.images[i] = std::move(img);
    }
    return table;
}

std::vector<std::vector<unsigned>> all_permutations(unsigned n) {
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    std::vector<std::vector<unsigned>> out;
    do {
        out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

} // namespace

CechCochain apply_index_permutation(const CechCochain &c, const std::vector<unsigned> &sigma) {
    if (sigma.size() != c.p + 1)
        throw std::invalid_argument("apply_index_permutation: permutation size must be p+1");
    return CechCochain(c.p, c.q, apply_table(c.value, reindex_table(c.p, sigma)));
}

CechCochain skew_symmetrise_serial(const CechCochain &c) {
    TracePolynomial sum;
    const auto perms = all_permutations(c.p + 1);
    for (const auto &sigma : perms) {
        TracePolynomial piece = apply_table(c.value, reindex_table(c.p, sigma));
        if (permutation_sign(sigma) > 0)
            sum += piece;
        else
            sum -= piece;
    }
    Rational factor = Rational(BigInt(1), BigInt::factorial(c.p + 1));
    return CechCochain(c.p, c.q, factor * sum);
}

CechCochain skew_symmetrise(const CechCochain &c) {
    const auto perms = all_permutations(c.p + 1);
    TracePolynomial sum;
#ifdef _OPENMP
#pragma omp parallel
    {
        TracePolynomial local;
#pragma omp for nowait schedule(static)
        for (long idx = 0; idx < static_cast<long>(perms.size()); ++idx) {
            const auto &sigma = perms[static_cast<size_t>(idx)];
            TracePolynomial piece = apply_table(c.value, reindex_table(c.p, sigma));
            if (permutation_sign(sigma) > 0)
                local += piece;
            else
                local -= piece;
        }
#pragma omp critical(atiyah_skew_merge)
        sum += local;
    }
#else
    for (const auto &sigma : perms) {
        TracePolynomial piece = apply_table(c.value, reindex_table(c.p, sigma));
        if (permutation_sign(sigma) > 0)
            sum += piece;
        else
            sum -= piece;
    }
#endif
    Rational factor = Rational(BigInt(1), BigInt::factorial(c.p + 1));
    return CechCochain(c.p, c.q, factor * sum);
}

CechCochain atiyah_cocycle(unsigned k) {
    if (k == 0)
        throw std::invalid_argument("atiyah_cocycle: k must be >= 1");
    FormPolynomial prod = FormPolynomial::scalar(Rational(1));
    for (unsigned i = 1; i <= k; ++i) {
        FormPolynomial factor = FormPolynomial::omega(i);
        if (i > 1)
            factor -= FormPolynomial::omega(i - 1);
        prod *= factor;
    }
    return CechCochain(k, k, trace_of(prod));
}

} // namespace atiyah
