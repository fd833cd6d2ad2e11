#include "atiyah/form.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <stdexcept>

namespace atiyah {

// ---------------------------------------------------------------------------
// Letter

namespace {

// Interned abelian generator names. Append-only; ids are per-process and all
// ordering goes through the name strings, so canonical forms do not depend on
// intern order. A deque keeps references stable across concurrent appends.
std::mutex g_abelian_mutex;
std::deque<std::string> &abelian_names() {
    static std::deque<std::string> names;
    return names;
}

std::int32_t intern_abelian(std::string_view name) {
    std::lock_guard<std::mutex> lock(g_abelian_mutex);
    auto &names = abelian_names();
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name)
            return static_cast<std::int32_t>(i);
    names.emplace_back(name);
    return static_cast<std::int32_t>(names.size() - 1);
}

const std::string &abelian_name_of(std::int32_t id) {
    std::lock_guard<std::mutex> lock(g_abelian_mutex);
    return abelian_names()[static_cast<size_t>(id)];
}

} // namespace

Letter Letter::omega(unsigned index) {
    if (index == 0)
        throw std::invalid_argument("Letter::omega: index 0 is eliminated (B_0 = 0)");
    return Letter(static_cast<std::int32_t>(index));
}

Letter Letter::abelian(std::string_view name) {
    if (name.empty())
        throw std::invalid_argument("Letter::abelian: empty name");
    return Letter(-intern_abelian(name) - 1);
}

unsigned Letter::omega_index() const { return static_cast<unsigned>(code_); }

const std::string &Letter::abelian_name() const { return abelian_name_of(-code_ - 1); }

bool operator<(const Letter &a, const Letter &b) {
    if (a.is_omega() != b.is_omega())
        return a.is_omega(); // omegas before abelians
    if (a.is_omega())
        return a.code_ < b.code_;
    if (a.code_ == b.code_)
        return false;
    return a.abelian_name() < b.abelian_name();
}

bool word_less(const Word &a, const Word &b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const Letter &x, const Letter &y) { return x < y; });
}

std::optional<std::pair<Word, int>> normalize_word(const Word &w) {
    bool sorted = true;
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i].is_abelian() && (w[i + 1].is_omega() || w[i + 1] < w[i] || w[i] == w[i + 1])) {
            sorted = false;
            break;
        }
    if (sorted) {
        // check square-zero on adjacent equal abelians
        for (size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i].is_abelian() && w[i] == w[i + 1])
                return std::nullopt;
        return std::make_pair(w, 1);
    }
    // target: omegas in original order, abelians sorted by name at the tail
    std::vector<size_t> src;
    src.reserve(w.size());
    for (size_t i = 0; i < w.size(); ++i)
        if (w[i].is_omega())
            src.push_back(i);
    std::vector<size_t> ab;
    for (size_t i = 0; i < w.size(); ++i)
        if (w[i].is_abelian())
            ab.push_back(i);
    std::stable_sort(ab.begin(), ab.end(),
                     [&](size_t x, size_t y) { return w[x] < w[y]; });
    for (size_t i = 0; i + 1 < ab.size(); ++i)
        if (w[ab[i]] == w[ab[i + 1]])
            return std::nullopt; // square-zero abelian generator
    src.insert(src.end(), ab.begin(), ab.end());

    long inversions = 0;
    for (size_t i = 0; i < src.size(); ++i)
        for (size_t j = i + 1; j < src.size(); ++j)
            if (src[i] > src[j])
                ++inversions;
    Word out;
    out.reserve(w.size());
    for (size_t i : src)
        out.push_back(w[i]);
    return std::make_pair(std::move(out), inversions % 2 == 0 ? 1 : -1);
}

// ---------------------------------------------------------------------------
// t-monomials and dt-wedges

TMono tmono_mul(const TMono &a, const TMono &b) {
    TMono out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first))
            out.push_back(a[i++]);
        else if (i == a.size() || b[j].first < a[i].first)
            out.push_back(b[j++]);
        else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    return out;
}

std::optional<std::pair<DtSet, int>> dt_merge(const DtSet &a, const DtSet &b) {
    DtSet out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    long inversions = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size())
            out.push_back(a[i++]);
        else if (i == a.size())
            out.push_back(b[j++]);
        else if (a[i] < b[j])
            out.push_back(a[i++]);
        else if (b[j] < a[i]) {
            // b[j] hops over the remaining elements of a
            inversions += static_cast<long>(a.size() - i);
            out.push_back(b[j++]);
        } else
            return std::nullopt; // dt_i ^ dt_i = 0
    }
    return std::make_pair(std::move(out), inversions % 2 == 0 ? 1 : -1);
}

// ---------------------------------------------------------------------------
// FormPolynomial

bool term_key_less(const FormTerm &a, const FormTerm &b) {
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

namespace {
bool term_key_equal(const FormTerm &a, const FormTerm &b) {
    return a.word == b.word && a.t == b.t && a.dt == b.dt;
}
} // namespace

FormPolynomial FormPolynomial::collect(std::vector<FormTerm> raw) {
    std::vector<FormTerm> canon;
    canon.reserve(raw.size());
    for (auto &tm : raw) {
        if (tm.coeff.is_zero())
            continue;
        auto nf = normalize_word(tm.word);
        if (!nf)
            continue;
        if (nf->second < 0)
            tm.coeff = -tm.coeff;
        tm.word = std::move(nf->first);
        // drop zero exponents, enforce sorted t
        TMono t;
        for (auto &[idx, e] : tm.t)
            if (e > 0)
                t.emplace_back(idx, e);
        std::sort(t.begin(), t.end());
        tm.t = std::move(t);
        canon.push_back(std::move(tm));
    }
    std::sort(canon.begin(), canon.end(), term_key_less);
    FormPolynomial out;
    for (auto &tm : canon) {
        if (!out.terms_.empty() && term_key_equal(out.terms_.back(), tm))
            out.terms_.back().coeff += tm.coeff;
        else
            out.terms_.push_back(std::move(tm));
    }
    std::erase_if(out.terms_, [](const FormTerm &t) { return t.coeff.is_zero(); });
    return out;
}

FormPolynomial FormPolynomial::scalar(Rational c) {
    return collect({FormTerm{std::move(c), {}, {}, {}}});
}

FormPolynomial FormPolynomial::omega(unsigned index) {
    return collect({FormTerm{Rational(1), {}, {Letter::omega(index)}, {}}});
}

FormPolynomial FormPolynomial::t(unsigned index) {
    if (index == 0)
        throw std::invalid_argument("t_0 is eliminated (t_0 = 1 - sum t_i)");
    return collect({FormTerm{Rational(1), {{index, 1}}, {}, {}}});
}

FormPolynomial FormPolynomial::dt(unsigned index) {
    if (index == 0)
        throw std::invalid_argument("dt_0 is eliminated");
    return collect({FormTerm{Rational(1), {}, {}, {index}}});
}

FormPolynomial FormPolynomial::abelian(std::string_view name) {
    return collect({FormTerm{Rational(1), {}, {Letter::abelian(name)}, {}}});
}

FormPolynomial FormPolynomial::term(Rational coeff, TMono t, Word word, DtSet dt) {
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
    return collect({FormTerm{std::move(coeff), std::move(t), std::move(word), std::move(dt)}});
}

FormPolynomial operator+(const FormPolynomial &a, const FormPolynomial &b) {
    std::vector<FormTerm> raw = a.terms_;
    raw.insert(raw.end(), b.terms_.begin(), b.terms_.end());
    return FormPolynomial::collect(std::move(raw));
}

FormPolynomial FormPolynomial::operator-() const {
    FormPolynomial out = *this;
    for (auto &t : out.terms_)
        t.coeff = -t.coeff;
    return out;
}

FormPolynomial operator-(const FormPolynomial &a, const FormPolynomial &b) {
    return a + (-b);
}

FormPolynomial operator*(const Rational &c, const FormPolynomial &f) {
    if (c.is_zero())
        return FormPolynomial::zero();
    FormPolynomial out = f;
    for (auto &t : out.terms_)
        t.coeff *= c;
    return out;
}

FormPolynomial operator*(const FormPolynomial &a, const FormPolynomial &b) {
    std::vector<FormTerm> raw;
    raw.reserve(a.terms_.size() * b.terms_.size());
    for (const auto &x : a.terms_) {
        for (const auto &y : b.terms_) {
            // x.dt must hop over y.word: one Koszul sign per (dt, letter) pair
            int sign = (x.dt.size() * y.word.size()) % 2 == 0 ? 1 : -1;
            auto dt = dt_merge(x.dt, y.dt);
            if (!dt)
                continue;
            sign *= dt->second;
            Word w = x.word;
            w.insert(w.end(), y.word.begin(), y.word.end());
            Rational c = x.coeff * y.coeff;
            if (sign < 0)
                c = -c;
            raw.push_back(FormTerm{std::move(c), tmono_mul(x.t, y.t), std::move(w),
                                   std::move(dt->first)});
        }
    }
    return FormPolynomial::collect(std::move(raw));
}

bool operator==(const FormPolynomial &a, const FormPolynomial &b) {
    if (a.terms_.size() != b.terms_.size())
        return false;
    for (size_t i = 0; i < a.terms_.size(); ++i) {
        const auto &x = a.terms_[i];
        const auto &y = b.terms_[i];
        if (!(x.coeff == y.coeff) || !term_key_equal(x, y))
            return false;
    }
    return true;
}

FormPolynomial differential(const FormPolynomial &f) {
    std::vector<FormTerm> raw;
    for (const auto &tm : f.terms()) {
        // X-part: Leibniz over the word, d(B) = -B^2, d(abelian) = 0
        for (size_t j = 0; j < tm.word.size(); ++j) {
            if (!tm.word[j].is_omega())
                continue;
            Word w;
            w.reserve(tm.word.size() + 1);
            w.insert(w.end(), tm.word.begin(), tm.word.begin() + j);
            w.push_back(tm.word[j]);
            w.push_back(tm.word[j]);
            w.insert(w.end(), tm.word.begin() + j + 1, tm.word.end());
            // (-1)^j from passing d over j letters, times -1 from d(B) = -B^2
            Rational c = tm.coeff;
            if (j % 2 == 0)
                c = -c;
            raw.push_back(FormTerm{std::move(c), tm.t, std::move(w), tm.dt});
        }
        // Delta-part: (-1)^{|word|} * sum_i a_i t^{a - e_i} dt_i ^ dt_S
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
            raw.push_back(FormTerm{std::move(c), std::move(t), tm.word, std::move(dt->first)});
        }
    }
    return FormPolynomial::collect(std::move(raw));
}

FormPolynomial type_component(const FormPolynomial &f, unsigned xdeg, unsigned ddeg) {
    std::vector<FormTerm> raw;
    for (const auto &tm : f.terms())
        if (tm.xdeg() == xdeg && tm.ddeg() == ddeg)
            raw.push_back(tm);
    return FormPolynomial::collect(std::move(raw));
}

// ---------------------------------------------------------------------------
// printing

std::string letter_to_string(const Letter &l) {
    if (l.is_omega())
        return "B" + std::to_string(l.omega_index());
    return l.abelian_name();
}

std::string word_to_string(const Word &w) {
    if (w.empty())
        return "1";
    std::string out;
    for (size_t i = 0; i < w.size();) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i])
            ++j;
        if (!out.empty())
            out += " ";
        out += letter_to_string(w[i]);
        if (j - i > 1)
            out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

std::string FormPolynomial::to_string() const {
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto &tm : terms_) {
        std::string piece;
        for (auto &[idx, e] : tm.t) {
            piece += "t" + std::to_string(idx);
            if (e > 1)
                piece += "^" + std::to_string(e);
            piece += " ";
        }
        if (!tm.word.empty())
            piece += word_to_string(tm.word) + " ";
        for (unsigned i : tm.dt)
            piece += "dt" + std::to_string(i) + " ";
        if (!piece.empty())
            piece.pop_back();
        if (piece.empty())
            piece = "1";

        Rational c = tm.coeff;
        std::string sign = out.empty() ? "" : " + ";
        if (c.sign() < 0) {
            sign = out.empty() ? "-" : " - ";
            c = -c;
        }
        out += sign;
        if (!(c == Rational(1)) || piece == "1")
            out += c.to_string() + (piece == "1" ? "" : " ");
        if (piece != "1")
            out += piece;
    }
    return out;
}

} // namespace atiyah
