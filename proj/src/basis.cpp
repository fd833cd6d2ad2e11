#include "atiyah/basis.hpp"

#include <algorithm>
#include <stdexcept>

namespace atiyah {

std::optional<size_t> TraceBasis::index_of(const Word &canonical) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), canonical, word_less);
    if (it == elements.end() || *it != canonical)
        return std::nullopt;
    return static_cast<size_t>(it - elements.begin());
}

TraceBasis enumerate_trace_basis(unsigned p, unsigned q) {
    if (p < 1 || q < 1)
        throw std::invalid_argument("enumerate_trace_basis: p, q must be >= 1");
    TraceBasis out;
    out.p = p;
    out.q = q;
    // odometer over all p^q words in lex order; a word is kept iff it is its
    // own canonical representative (each nonzero class has exactly one)
    std::vector<unsigned> idx(q, 1);
    while (true) {
        Word w;
        w.reserve(q);
        for (unsigned i : idx)
            w.push_back(Letter::omega(i));
        auto nf = normalize_trace_word(w);
        if (nf && nf->letters == w)
            out.elements.push_back(std::move(w));
        size_t pos = q;
        while (pos > 0 && idx[pos - 1] == p) {
            idx[pos - 1] = 1;
            --pos;
        }
        if (pos == 0)
            break;
        ++idx[pos - 1];
    }
    return out;
}

std::vector<Rational> coordinates(const TraceBasis &basis, const TracePolynomial &v) {
    std::vector<Rational> out(basis.size(), Rational(0));
    for (const auto &tm : v.terms()) {
        if (!tm.t.empty() || !tm.dt.empty())
            throw std::invalid_argument("coordinates: t/dt terms not representable");
        auto idx = basis.index_of(tm.word);
        if (!idx)
            throw std::invalid_argument("coordinates: term outside basis: " +
                                        word_to_string(tm.word));
        out[*idx] = tm.coeff;
    }
    return out;
}

TracePolynomial from_coordinates(const TraceBasis &basis, const std::vector<Rational> &x) {
    if (x.size() != basis.size())
        throw std::invalid_argument("from_coordinates: size mismatch");
    std::vector<TraceTerm> raw;
    for (size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero())
            raw.push_back(TraceTerm{x[i], {}, basis.elements[i], {}});
    return TracePolynomial::collect(std::move(raw));
}

namespace {

std::vector<std::pair<size_t, Rational>> delta_column(const TraceBasis &domain,
                                                      const TraceBasis &codomain,
                                                      size_t j) {
    CechCochain e(domain.p, domain.q,
                  TracePolynomial::trace_monomial(Rational(1), domain.elements[j]));
    CechCochain de = cech_delta(e);
    std::vector<std::pair<size_t, Rational>> col;
    for (const auto &tm : de.value.terms()) {
        auto idx = codomain.index_of(tm.word);
        if (!idx)
            throw std::logic_error("delta_column: image term outside codomain basis");
        col.emplace_back(*idx, tm.coeff);
    }
    std::sort(col.begin(), col.end(),
              [](const auto &a, const auto &b) { return a.first < b.first; });
    return col;
}

} // namespace

DeltaMatrix build_delta_matrix_serial(unsigned p, unsigned q) {
    DeltaMatrix out;
    out.domain = enumerate_trace_basis(p, q);
    out.codomain = enumerate_trace_basis(p + 1, q);
    out.columns.resize(out.domain.size());
    for (size_t j = 0; j < out.domain.size(); ++j)
        out.columns[j] = delta_column(out.domain, out.codomain, j);
    return out;
}

DeltaMatrix build_delta_matrix(unsigned p, unsigned q) {
    DeltaMatrix out;
    out.domain = enumerate_trace_basis(p, q);
    out.codomain = enumerate_trace_basis(p + 1, q);
    out.columns.resize(out.domain.size());
    const long n = static_cast<long>(out.domain.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long j = 0; j < n; ++j)
        out.columns[static_cast<size_t>(j)] =
            delta_column(out.domain, out.codomain, static_cast<size_t>(j));
    return out;
}

} // namespace atiyah
