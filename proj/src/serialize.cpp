#include "atiyah/serialize.hpp"

#include <json.hpp>

#include <stdexcept>

namespace atiyah {

using json = nlohmann::ordered_json;

namespace {

json term_to_json(const TraceTerm &tm) {
    json j;
    j["coeff"] = tm.coeff.to_fraction_string();
    json t = json::array();
    for (auto &[idx, e] : tm.t)
        t.push_back(json::array({idx, e}));
    j["t"] = std::move(t);
    json dt = json::array();
    for (unsigned i : tm.dt)
        dt.push_back(i);
    j["dt"] = std::move(dt);
    json word = json::array();
    for (const auto &l : tm.word) {
        if (l.is_omega())
            word.push_back(l.omega_index());
        else
            word.push_back(l.abelian_name());
    }
    j["word"] = std::move(word);
    return j;
}

json terms_to_json(const TracePolynomial &v) {
    json terms = json::array();
    for (const auto &tm : v.terms())
        terms.push_back(term_to_json(tm));
    return terms;
}

TraceTerm term_from_json(const json &j) {
    TraceTerm tm;
    tm.coeff = Rational::from_string(j.at("coeff").get<std::string>());
    for (const auto &pair : j.at("t"))
        tm.t.emplace_back(pair.at(0).get<unsigned>(), pair.at(1).get<unsigned>());
    for (const auto &i : j.at("dt"))
        tm.dt.push_back(i.get<unsigned>());
    for (const auto &g : j.at("word")) {
        if (g.is_string())
            tm.word.push_back(Letter::abelian(g.get<std::string>()));
        else
            tm.word.push_back(Letter::omega(g.get<unsigned>()));
    }
    return tm;
}

TracePolynomial terms_from_json(const json &terms) {
    TracePolynomial out;
    for (const auto &j : terms) {
        TraceTerm tm = term_from_json(j);
        out += TracePolynomial::term(std::move(tm.coeff), std::move(tm.t), std::move(tm.word),
                                     std::move(tm.dt));
    }
    return out;
}

} // namespace

std::string trace_polynomial_to_json_terms(const TracePolynomial &v) {
    return terms_to_json(v).dump();
}

std::string lift_tuple_to_json(const LiftTuple &t) {
    json j;
    j["k"] = t.k;
    json comps = json::array();
    for (const auto &c : t.components) {
        json jc;
        jc["p"] = c.p;
        jc["q"] = c.q;
        jc["terms"] = terms_to_json(c.value);
        comps.push_back(std::move(jc));
    }
    j["components"] = std::move(comps);
    j["sign_convention"] = kSignConvention;
    return j.dump();
}

LiftTuple lift_tuple_from_json(const std::string &text) {
    json j = json::parse(text);
    LiftTuple t;
    t.k = j.at("k").get<unsigned>();
    if (j.at("sign_convention").get<std::string>() != kSignConvention)
        throw std::invalid_argument("lift_tuple_from_json: unknown sign convention");
    for (const auto &jc : j.at("components")) {
        unsigned p = jc.at("p").get<unsigned>();
        unsigned q = jc.at("q").get<unsigned>();
        t.components.emplace_back(p, q, terms_from_json(jc.at("terms")));
    }
    if (t.components.size() != t.k)
        throw std::invalid_argument("lift_tuple_from_json: component count differs from k");
    for (unsigned p = 1; p <= t.k; ++p)
        if (t.component(p).p != p || t.component(p).q != 2 * t.k - p)
            throw std::invalid_argument("lift_tuple_from_json: bad component bidegree");
    return t;
}

namespace {

std::string rational_to_latex(const Rational &r) {
    if (r.den().is_one())
        return r.num().to_string();
    std::string num = r.num().to_string();
    bool neg = false;
    if (!num.empty() && num[0] == '-') {
        neg = true;
        num = num.substr(1);
    }
    return std::string(neg ? "-" : "") + "\\tfrac{" + num + "}{" + r.den().to_string() + "}";
}

std::string word_to_latex(const Word &w) {
    if (w.empty())
        return "1";
    std::string out;
    for (size_t i = 0; i < w.size();) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i])
            ++j;
        std::string sym = w[i].is_omega()
                              ? "\\omega_{\\alpha_0\\alpha_{" +
                                    std::to_string(w[i].omega_index()) + "}}"
                              : "\\" + w[i].abelian_name();
        out += sym;
        if (j - i > 1)
            out += "^{" + std::to_string(j - i) + "}";
        i = j;
    }
    return out;
}

} // namespace

std::string trace_polynomial_to_latex(const TracePolynomial &v) {
    if (v.is_zero())
        return "0";
    std::string out;
    for (const auto &tm : v.terms()) {
        Rational c = tm.coeff;
        std::string sign = out.empty() ? "" : " + ";
        if (c.sign() < 0) {
            sign = out.empty() ? "-" : " - ";
            c = -c;
        }
        out += sign;
        if (!(c == Rational(1)))
            out += rational_to_latex(c);
        for (auto &[idx, e] : tm.t) {
            out += "t_{" + std::to_string(idx) + "}";
            if (e > 1)
                out += "^{" + std::to_string(e) + "}";
        }
        out += "\\operatorname{tr}\\left(" + word_to_latex(tm.word) + "\\right)";
        for (unsigned i : tm.dt)
            out += "\\,\\mathrm{d}t_{" + std::to_string(i) + "}";
    }
    return out;
}

std::string lift_tuple_to_latex(const LiftTuple &t) {
    std::string out = "\\left(0";
    for (unsigned p = 1; p <= t.k; ++p) {
        out += ",\\ \\underbrace{" + trace_polynomial_to_latex(t.component(p).value) +
               "}_{p=" + std::to_string(p) + "}";
    }
    for (unsigned p = t.k + 1; p <= 2 * t.k; ++p)
        out += ",\\ 0";
    out += "\\right)";
    return out;
}

} // namespace atiyah
