#include "atiyah/trace.hpp"

#include <algorithm>
#include <stdexcept>

namespace atiyah {

std::optional<TraceWord> normalize_trace_word(const Word &letters) {
    auto nf0 = normalize_word(letters);
    if (!nf0)
        return std::nullopt;
    const Word w0 = std::move(nf0->first);
    const int s0 = nf0->second;
    const size_t m = w0.size();
    if (m == 0)
        return TraceWord{{}, s0};

    // tr(w0) = (-1)^{(m-1)r} tr(rot_r(w0)); each rotation is re-normalized so
    // abelian letters stay parked at the tail.
    Word best;
    int best_sign = 0;
    bool have = false;
    const int rot_step = (m - 1) % 2 == 0 ? 1 : -1;
    int rot_sign = 1;
    Word rot = w0;
    for (size_t r = 0; r < m; ++r) {
        if (r > 0) {
            std::rotate(rot.begin(), rot.begin() + 1, rot.end());
            rot_sign *= rot_step;
        }
        auto nf = normalize_word(rot);
        if (!nf)
            continue; // cannot happen for nonzero w0, kept for safety
        int total = s0 * rot_sign * nf->second;
        if (!have || word_less(nf->first, best)) {
            best = std::move(nf->first);
            best_sign = total;
            have = true;
        } else if (!word_less(best, nf->first)) {
            if (total != best_sign)
                return std::nullopt; // tr(w) = -tr(w)
        }
    }
    return TraceWord{std::move(best), best_sign};
}

// ---------------------------------------------------------------------------
// TracePolynomial

namespace {
bool trace_key_less(const TraceTerm &a, const TraceTerm &b) {
    if (a.word.size() != b.word.size())
        return a.word.size() < b.word.size();
    if (word_less(a.word, b.word))
        return true;
    if (word_less(b.word, a.word))
        return false;
    if (a.t != b.t)
        return a.t < b.t;
    return a.dt < b.dt;
}
bool trace_key_equal(const TraceTerm &a, const TraceTerm &b) {
    return a.word == b.word && a.t == b.t && a.dt == b.dt;
}
} // namespace

TracePolynomial TracePolynomial::collect(std::vector<TraceTerm> raw) {
    std::vector<TraceTerm> canon;
    canon.reserve(raw.size());
    for (auto &tm : raw) {
        if (tm.coeff.is_zero())
            continue;
        auto nf = normalize_trace_word(tm.word);
        if (!nf)
            continue;
        if (nf->sign < 0)
            tm.coeff = -tm.coeff;
        tm.word = std::move(nf->letters);
        TMono t;
        for (auto &[idx, e] : tm.t)
            if (e > 0)
                t.emplace_back(idx, e);
        std::sort(t.begin(), t.end());
        tm.t = std::move(t);
        canon.push_back(std::move(tm));
    }
    std::sort(canon.begin(), canon.end(), trace_key_less);
    TracePolynomial out;
    for (auto &tm : canon) {
        if (!out.terms_.empty() && trace_key_equal(out.terms_.back(), tm))
            out.terms_.back().coeff += tm.coeff;
        else
            out.terms_.push_back(std::move(tm));
    }
    std::erase_if(out.terms_, [](const TraceTerm &t) { return t.coeff.is_zero(); });
    return out;
}

TracePolynomial TracePolynomial::trace_monomial(Rational coeff, Word word) {
    return collect({TraceTerm{std::move(coeff), {}, std::move(word), {}}});
}

TracePolynomial TracePolynomial::term(Rational coeff, TMono t, Word word, DtSet dt) {
    // reordering the dt-wedge into ascending order carries the Koszul sign
    long inversions = 0;
    for (size_t i = 0; i < dt.size(); ++i)
        for (size_t j = i + 1; j < dt.size(); ++j) {
            if (dt[i] == dt[j])
                return zero();
            if (dt[i] > dt[j])
                ++inversions;
        }
    std::sort(dt.begin(), dt.end());
    if (inversions % 2 == 1)
        coeff = -coeff;
    return collect({TraceTerm{std::move(coeff), std::move(t), std::move(word), std::move(dt)}});
}

TracePolynomial operator+(const TracePolynomial &a, const TracePolynomial &b) {
    std::vector<TraceTerm> raw = a.terms_;
    raw.insert(raw.end(), b.terms_.begin(), b.terms_.end());
    return TracePolynomial::collect(std::move(raw));
}

TracePolynomial TracePolynomial::operator-() const {
    TracePolynomial out = *this;
    for (auto &t : out.terms_)
        t.coeff = -t.coeff;
    return out;
}

TracePolynomial operator-(const TracePolynomial &a, const TracePolynomial &b) {
    return a + (-b);
}

TracePolynomial operator*(const Rational &c, const TracePolynomial &f) {
    if (c.is_zero())
        return TracePolynomial::zero();
    TracePolynomial out = f;
    for (auto &t : out.terms_)
        t.coeff *= c;
    return out;
}

bool operator==(const TracePolynomial &a, const TracePolynomial &b) {
    if (a.terms_.size() != b.terms_.size())
        return false;
    for (size_t i = 0; i < a.terms_.size(); ++i) {
        const auto &x = a.terms_[i];
        const auto &y = b.terms_[i];
        if (!(x.coeff == y.coeff) || !trace_key_equal(x, y))
            return false;
    }
    return true;
}

Rational TracePolynomial::coefficient_of(const Word &word) const {
    auto nf = normalize_trace_word(word);
    if (!nf)
        return Rational(0);
    for (const auto &tm : terms_) {
        if (!tm.t.empty() || !tm.dt.empty())
            continue;
        if (tm.word == nf->letters)
            return nf->sign < 0 ? -tm.coeff : tm.coeff;
    }
    return Rational(0);
}

TracePolynomial trace_of(const FormPolynomial &f) {
    std::vector<TraceTerm> raw;
    raw.reserve(f.terms().size());
    for (const auto &tm : f.terms())
        raw.push_back(TraceTerm{tm.coeff, tm.t, tm.word, tm.dt});
    return TracePolynomial::collect(std::move(raw));
}

TracePolynomial differential(const TracePolynomial &f) {
    std::vector<TraceTerm> raw;
    for (const auto &tm : f.terms()) {
        for (size_t j = 0; j < tm.word.size(); ++j) {
            if (!tm.word[j].is_omega())
                continue;
            Word w;
            w.reserve(tm.word.size() + 1);
            w.insert(w.end(), tm.word.begin(), tm.word.begin() + j);
            w.push_back(tm.word[j]);
            w.push_back(tm.word[j]);
            w.insert(w.end(), tm.word.begin() + j + 1, tm.word.end());
            Rational c = tm.coeff;
            if (j % 2 == 0)
                c = -c;
            raw.push_back(TraceTerm{std::move(c), tm.t, std::move(w), tm.dt});
        }
        int wsign = tm.word.size() % 2 == 0 ? 1 : -1;
        for (size_t i = 0; i < tm.t.size(); ++i) {
            auto [idx, e] = tm.t[i];
            auto dt = dt_merge({idx}, tm.dt);
            if (!dt)
                continue;
            TMono t = tm.t;
            if (e == 1)
                t.erase(t.begin() + static_cast<long>(i));
            else
                t[i].second = e - 1;
            Rational c = tm.coeff * Rational(static_cast<long long>(e));
            if (wsign * dt->second < 0)
                c = -c;
            raw.push_back(TraceTerm{std::move(c), std::move(t), tm.word, std::move(dt->first)});
        }
    }
    return TracePolynomial::collect(std::move(raw));
}

TracePolynomial type_component(const TracePolynomial &f, unsigned xdeg, unsigned ddeg) {
    std::vector<TraceTerm> raw;
    for (const auto &tm : f.terms())
        if (tm.xdeg() == xdeg && tm.ddeg() == ddeg)
            raw.push_back(tm);
    return TracePolynomial::collect(std::move(raw));
}

TracePolynomial substitute_letters(
    const TracePolynomial &f,
    const std::function<const LetterCombination &(const Letter &)> &image) {
    std::vector<TraceTerm> raw;
    for (const auto &tm : f.terms()) {
        // expand the product of letter images left to right
        std::vector<std::pair<Rational, Word>> partial{{tm.coeff, {}}};
        for (const auto &letter : tm.word) {
            const LetterCombination &img = image(letter);
            std::vector<std::pair<Rational, Word>> next;
            next.reserve(partial.size() * img.size());
            for (const auto &[c, w] : partial) {
                for (const auto &[ic, il] : img) {
                    Word w2 = w;
                    w2.push_back(il);
                    next.emplace_back(c * ic, std::move(w2));
                }
            }
            partial = std::move(next);
            if (partial.empty())
                break;
        }
        for (auto &[c, w] : partial)
            raw.push_back(TraceTerm{std::move(c), tm.t, std::move(w), tm.dt});
    }
    return TracePolynomial::collect(std::move(raw));
}

std::string TracePolynomial::to_string() const {
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto &tm : terms_) {
        std::vector<std::string> factors;
        for (auto &[idx, e] : tm.t) {
            std::string f = "t" + std::to_string(idx);
            if (e > 1)
                f += "^" + std::to_string(e);
            factors.push_back(std::move(f));
        }
        if (!tm.word.empty()) {
            // words of purely abelian (central scalar) letters print bare;
            // the empty trace word is the formal scalar 1
            bool all_abelian = std::all_of(tm.word.begin(), tm.word.end(),
                                           [](const Letter &l) { return l.is_abelian(); });
            factors.push_back(all_abelian ? word_to_string(tm.word)
                                          : "tr(" + word_to_string(tm.word) + ")");
        }
        for (unsigned i : tm.dt)
            factors.push_back("dt" + std::to_string(i));

        std::string piece;
        for (const auto &f : factors)
            piece += (piece.empty() ? "" : " ") + f;

        Rational c = tm.coeff;
        std::string sign = out.empty() ? "" : " + ";
        if (c.sign() < 0) {
            sign = out.empty() ? "-" : " - ";
            c = -c;
        }
        out += sign;
        if (piece.empty())
            out += c.to_string();
        else if (!(c == Rational(1)))
            out += c.to_string() + " " + piece;
        else
            out += piece;
    }
    return out;
}

} // namespace atiyah
