#include "atiyah/freealg.hpp"

#include "atiyah/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace atiyah {

void FreeWordPolynomial::add_term(const Monomial &m, const Rational &c) {
    if (c.is_zero())
        return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Rational FreeWordPolynomial::coefficient_of(const Monomial &m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

FreeWordPolynomial FreeWordPolynomial::times_difference(unsigned i, int j) const {
    FreeWordPolynomial out;
    for (const auto &[m, c] : terms_) {
        Monomial mi = m;
        mi.push_back(i);
        out.add_term(mi, c);
        if (j >= 0) {
            Monomial mj = m;
            mj.push_back(static_cast<unsigned>(j));
            out.add_term(mj, -c);
        }
    }
    return out;
}

FreeWordPolynomial FreeWordPolynomial::swap_variables(unsigned a, unsigned b) const {
    FreeWordPolynomial out;
    for (const auto &[m, c] : terms_) {
        Monomial w = m;
        for (auto &v : w) {
            if (v == a)
                v = b;
            else if (v == b)
                v = a;
        }
        out.add_term(w, c);
    }
    return out;
}

FreeWordPolynomial operator+(const FreeWordPolynomial &x, const FreeWordPolynomial &y) {
    FreeWordPolynomial out = x;
    for (const auto &[m, c] : y.terms_)
        out.add_term(m, c);
    return out;
}

FreeWordPolynomial operator-(const FreeWordPolynomial &x, const FreeWordPolynomial &y) {
    FreeWordPolynomial out = x;
    for (const auto &[m, c] : y.terms_)
        out.add_term(m, -c);
    return out;
}

std::string FreeWordPolynomial::to_string() const {
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto &[m, c] : terms_) {
        if (!out.empty())
            out += " + ";
        out += c.to_string();
        for (unsigned v : m)
            out += " x" + std::to_string(v);
    }
    return out;
}

// ---------------------------------------------------------------------------
// permutation sums

namespace {

std::vector<std::vector<unsigned>> symmetric_group(unsigned n) {
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    std::vector<std::vector<unsigned>> out;
    do {
        out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

int sign_of(const std::vector<unsigned> &perm) {
    long inv = 0;
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j])
                ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

// One eta-summand of A (chain = false) or B (chain = true).
FreeWordPolynomial eta_product(const std::vector<unsigned> &eta, unsigned k, bool chain) {
    FreeWordPolynomial f = FreeWordPolynomial::one();
    for (unsigned i = 1; i <= k; ++i) {
        unsigned sub = chain ? eta[i - 1] : eta[0];
        f = f.times_difference(eta[i], static_cast<int>(sub));
    }
    if (sign_of(eta) < 0)
        return FreeWordPolynomial() - f;
    return f;
}

FreeWordPolynomial permutation_sum_serial(unsigned k, bool chain) {
    FreeWordPolynomial sum;
    for (const auto &eta : symmetric_group(k + 1))
        sum = sum + eta_product(eta, k, chain);
    return sum;
}

FreeWordPolynomial permutation_sum_parallel(unsigned k, bool chain) {
    const auto perms = symmetric_group(k + 1);
    FreeWordPolynomial sum;
#ifdef _OPENMP
#pragma omp parallel
    {
        FreeWordPolynomial local;
#pragma omp for nowait schedule(static)
        for (long i = 0; i < static_cast<long>(perms.size()); ++i)
            local = local + eta_product(perms[static_cast<size_t>(i)], k, chain);
#pragma omp critical(atiyah_perm_merge)
        sum = sum + local;
    }
#else
    sum = permutation_sum_serial(k, chain);
#endif
    return sum;
}

} // namespace

FreeWordPolynomial permutation_sum_base_serial(unsigned k) {
    return permutation_sum_serial(k, false);
}
FreeWordPolynomial permutation_sum_chain_serial(unsigned k) {
    return permutation_sum_serial(k, true);
}
FreeWordPolynomial permutation_sum_base(unsigned k) { return permutation_sum_parallel(k, false); }
FreeWordPolynomial permutation_sum_chain(unsigned k) { return permutation_sum_parallel(k, true); }

bool permutation_identity_check(unsigned k) {
    if (k < 1)
        throw std::invalid_argument("permutation_identity_check: k must be >= 1");
    return permutation_sum_base(k) == permutation_sum_chain(k);
}

// ---------------------------------------------------------------------------
// eigenspace dimension

unsigned skew_eigenspace_dimension(unsigned k) {
    if (k < 1)
        throw std::invalid_argument("skew_eigenspace_dimension: k must be >= 1");
    // basis: words of length k over {0..k} that are permutations of {0..k}
    // minus one variable
    std::vector<std::vector<unsigned>> words;
    std::vector<unsigned> vars(k + 1);
    std::iota(vars.begin(), vars.end(), 0u);
    for (unsigned omit = 0; omit <= k; ++omit) {
        std::vector<unsigned> w;
        for (unsigned v : vars)
            if (v != omit)
                w.push_back(v);
        std::sort(w.begin(), w.end());
        do {
            words.push_back(w);
        } while (std::next_permutation(w.begin(), w.end()));
    }
    std::sort(words.begin(), words.end());
    auto index_of = [&](const std::vector<unsigned> &w) {
        return static_cast<size_t>(
            std::lower_bound(words.begin(), words.end(), w) - words.begin());
    };

    // constraints: v[w] + v[sigma w] = 0 for every transposition sigma
    std::vector<std::vector<Rational>> rows;
    for (unsigned a = 0; a <= k; ++a) {
        for (unsigned b = a + 1; b <= k; ++b) {
            for (size_t i = 0; i < words.size(); ++i) {
                std::vector<unsigned> sw = words[i];
                for (auto &v : sw) {
                    if (v == a)
                        v = b;
                    else if (v == b)
                        v = a;
                }
                size_t j = index_of(sw);
                if (j < i)
                    continue; // each unordered pair once
                std::vector<Rational> row(words.size(), Rational(0));
                row[i] += Rational(1);
                row[j] += Rational(1);
                rows.push_back(std::move(row));
            }
        }
    }
    std::vector<Rational> rhs(rows.size(), Rational(0));
    LinearSolution sol = solve_linear_system(std::move(rows), std::move(rhs));
    return static_cast<unsigned>(sol.kernel_dim);
}

} // namespace atiyah
