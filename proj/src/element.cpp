#include "qriemann/element.hpp"

#include <cassert>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace qriemann {

int word_unit_length(const Word& w) {
    int n = 0;
    for (const auto& f : w) n += std::abs(f.exp);
    return n;
}

int word_degree(const Word& w, const std::vector<Generator>& gens) {
    int d = 0;
    for (const auto& f : w) d += gens[f.gen].degree * f.exp;
    return d;
}

void word_push(Word& w, Factor f) {
    while (!w.empty() && w.back().gen == f.gen) {
        f.exp += w.back().exp;
        w.pop_back();
        if (f.exp == 0) return;
    }
    if (f.exp != 0) w.push_back(f);
}

Word word_concat(const Word& a, const Word& b) {
    Word out = a;
    out.reserve(a.size() + b.size());
    for (const auto& f : b) word_push(out, f);
    return out;
}

bool WordLess::operator()(const Word& a, const Word& b) const {
    int la = word_unit_length(a);
    int lb = word_unit_length(b);
    if (la != lb) return la < lb;
    size_t i = 0, j = 0;
    int used_i = 0, used_j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].gen != b[j].gen) return a[i].gen < b[j].gen;
        bool neg_i = a[i].exp < 0;
        bool neg_j = b[j].exp < 0;
        if (neg_i != neg_j) return neg_j; // positive letters first
        int rem_i = std::abs(a[i].exp) - used_i;
        int rem_j = std::abs(b[j].exp) - used_j;
        int step = std::min(rem_i, rem_j);
        used_i += step;
        used_j += step;
        if (used_i == std::abs(a[i].exp)) {
            ++i;
            used_i = 0;
        }
        if (used_j == std::abs(b[j].exp)) {
            ++j;
            used_j = 0;
        }
    }
    return false; // equal unit length and common prefix: words are equal
}

Element Element::scalar(QScalar v) {
    Element e;
    if (!v.is_zero()) e.terms_.emplace(Word{}, std::move(v));
    return e;
}

Element Element::generator(int gen, int exp) {
    Element e;
    if (exp != 0) e.terms_.emplace(Word{{gen, exp}}, QScalar::one());
    else e.terms_.emplace(Word{}, QScalar::one());
    return e;
}

Element Element::monomial(QScalar coeff, Word w) {
    Element e;
    if (!coeff.is_zero()) e.terms_.emplace(std::move(w), std::move(coeff));
    return e;
}

void Element::add_term(const Word& w, const QScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QScalar Element::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? QScalar() : it->second;
}

Element Element::operator-() const {
    Element r = *this;
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
}

Element& Element::operator+=(const Element& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

Element& Element::operator*=(const Element& o) {
    Element r;
    for (const auto& [wa, ca] : terms_)
        for (const auto& [wb, cb] : o.terms_)
            r.add_term(word_concat(wa, wb), ca * cb);
    terms_ = std::move(r.terms_);
    return *this;
}

Element& Element::operator*=(const QScalar& k) {
    if (k.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_) c *= k;
    return *this;
}

Element Element::pow(int e) const {
    if (e < 0) throw std::domain_error("Element::pow: negative exponent");
    Element r = scalar(QScalar::one());
    Element b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Element Element::inv_single(const std::vector<Generator>& gens) const {
    if (terms_.size() != 1)
        throw std::domain_error("inv_single: not a single term");
    const auto& [w, c] = *terms_.begin();
    Word inv;
    inv.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (!gens[it->gen].invertible)
            throw std::domain_error("inv_single: generator " +
                                    gens[it->gen].name + " is not invertible");
        inv.push_back({it->gen, -it->exp});
    }
    return monomial(c.inv(), std::move(inv));
}

namespace {

std::string factor_str(const Factor& f, const Generator& g) {
    if (g.half_exp) {
        if (f.exp % 2 == 0) {
            int e = f.exp / 2;
            if (e == 1) return g.name;
            return g.name + "^" + std::to_string(e);
        }
        return g.name + "^(" + std::to_string(f.exp) + "/2)";
    }
    if (f.exp == 1) return g.name;
    return g.name + "^" + std::to_string(f.exp);
}

} // namespace

std::string Element::to_string(const std::vector<Generator>& gens) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Word& w = it->first;
        const QScalar& c = it->second;
        bool neg = c.leading_negative();
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        QScalar mag = neg ? -c : c;
        std::vector<std::string> toks;
        size_t k = 0;
        while (k < w.size() && gens[w[k].gen].constant) {
            toks.push_back(factor_str(w[k], gens[w[k].gen]));
            ++k;
        }
        if (!mag.is_one()) toks.push_back(mag.to_string(true));
        for (; k < w.size(); ++k)
            toks.push_back(factor_str(w[k], gens[w[k].gen]));
        if (toks.empty()) toks.push_back("1");
        for (size_t t = 0; t < toks.size(); ++t) {
            if (t) out += "*";
            out += toks[t];
        }
    }
    return out;
}

} // namespace qriemann
