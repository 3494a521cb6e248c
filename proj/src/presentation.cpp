#include "qriemann/presentation.hpp"

#include <cassert>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace qriemann {

namespace {

bool sign_matches(SignCond c, int exp) {
    switch (c) {
        case SignCond::Any: return true;
        case SignCond::Pos: return exp > 0;
        case SignCond::Neg: return exp < 0;
    }
    return false;
}

bool sign_overlap(SignCond a, SignCond b) {
    return a == SignCond::Any || b == SignCond::Any || a == b;
}

Word instantiate(const std::vector<TFactor>& tw, int m, int n) {
    Word w;
    for (const auto& tf : tw) {
        int e = tf.cm * m + tf.cn * n + tf.cc;
        if (e != 0) word_push(w, {tf.gen, e});
    }
    return w;
}

Element eval_rhs(const std::vector<RhsTerm>& rhs, int m, int n) {
    Element out;
    for (const auto& t : rhs) out.add_term(instantiate(t.word, m, n), t.coeff.eval(m, n));
    return out;
}

} // namespace

int Presentation::add_generator(Generator g) {
    if (names_.count(g.name))
        throw std::logic_error("duplicate generator name " + g.name);
    int idx = static_cast<int>(gens_.size());
    names_.emplace(g.name, idx);
    gens_.push_back(std::move(g));
    return idx;
}

int Presentation::gen_index(std::string_view name) const {
    auto it = names_.find(name);
    return it == names_.end() ? -1 : it->second;
}

void Presentation::add_pair_rule(PairRule r) {
    auto& bucket = pair_rules_[{r.gl, r.gr}];
    for (const auto& old : bucket)
        if (sign_overlap(old.sl, r.sl) && sign_overlap(old.sr, r.sr))
            throw std::logic_error("ambiguous pair rule for (" +
                                   gens_[r.gl].name + ", " + gens_[r.gr].name + ")");
    bucket.push_back(std::move(r));
}

void Presentation::add_power_rule(PowerRule r) {
    if (r.threshold == 0 || r.step == 0 ||
        (r.threshold > 0) != (r.step > 0))
        throw std::logic_error("malformed power rule");
    auto& bucket = power_rules_[r.gen];
    for (const auto& old : bucket)
        if ((old.threshold > 0) == (r.threshold > 0))
            throw std::logic_error("ambiguous power rule for " + gens_[r.gen].name);
    bucket.push_back(std::move(r));
}

void Presentation::add_swap_rule(int gl, int gr, int cross_spower) {
    PairRule r;
    r.gl = gl;
    r.gr = gr;
    r.kind = MatchKind::Full;
    r.rhs = {{{QScalar::one(), 0, 0, cross_spower},
              {{gr, 0, 1, 0}, {gl, 1, 0, 0}}}};
    add_pair_rule(std::move(r));
}

void Presentation::finalize_constants() {
    int n = static_cast<int>(gens_.size());
    for (int k = 0; k < n; ++k) {
        if (!gens_[k].constant) continue;
        for (int g = k + 1; g < n; ++g)
            if (!pair_rules_.count({g, k})) add_swap_rule(g, k, 0);
    }
}

const PowerRule* Presentation::find_power_rule(const Factor& f) const {
    auto it = power_rules_.find(f.gen);
    if (it == power_rules_.end()) return nullptr;
    for (const auto& r : it->second) {
        if (r.threshold > 0 && f.exp >= r.threshold) return &r;
        if (r.threshold < 0 && f.exp <= r.threshold) return &r;
    }
    return nullptr;
}

const PairRule* Presentation::find_pair_rule(const Factor& l, const Factor& r) const {
    auto it = pair_rules_.find({l.gen, r.gen});
    if (it == pair_rules_.end()) return nullptr;
    for (const auto& rule : it->second)
        if (sign_matches(rule.sl, l.exp) && sign_matches(rule.sr, r.exp))
            return &rule;
    return nullptr;
}

std::optional<Presentation::Redex> Presentation::find_redex(const Word& w) const {
    for (size_t j = 0; j < w.size(); ++j) {
        if (const PowerRule* p = find_power_rule(w[j])) return Redex{j, p, nullptr};
        if (j + 1 < w.size())
            if (const PairRule* r = find_pair_rule(w[j], w[j + 1]))
                return Redex{j, nullptr, r};
    }
    return std::nullopt;
}

bool Presentation::word_is_normal(const Word& w) const {
    return !find_redex(w).has_value();
}

Element Presentation::splice(const Word& w, size_t j, size_t count,
                             const Element& middle) const {
    Element out;
    for (const auto& [mw, mc] : middle.terms()) {
        Word nw(w.begin(), w.begin() + j);
        for (const auto& f : mw) word_push(nw, f);
        for (size_t k = j + count; k < w.size(); ++k) word_push(nw, w[k]);
        out.add_term(nw, mc);
    }
    return out;
}

Element Presentation::apply_power(const Word& w, size_t j, const PowerRule& r) const {
    Element middle =
        Element::monomial(QScalar::one(),
                          w[j].exp == r.step ? Word{} : Word{{w[j].gen, w[j].exp - r.step}}) *
        r.rhs;
    return splice(w, j, 1, middle);
}

Element Presentation::apply_pair(const Word& w, size_t j, const PairRule& r) const {
    const Factor& fl = w[j];
    const Factor& fr = w[j + 1];
    int ul = fl.exp > 0 ? 1 : -1;
    int ur = fr.exp > 0 ? 1 : -1;
    Element middle;
    switch (r.kind) {
        case MatchKind::Full:
            middle = eval_rhs(r.rhs, fl.exp, fr.exp);
            break;
        case MatchKind::UnitLeft:
            middle = Element::monomial(
                         QScalar::one(),
                         fl.exp == ul ? Word{} : Word{{fl.gen, fl.exp - ul}}) *
                     eval_rhs(r.rhs, ul, fr.exp);
            break;
        case MatchKind::UnitRight:
            middle = eval_rhs(r.rhs, fl.exp, ur) *
                     Element::monomial(
                         QScalar::one(),
                         fr.exp == ur ? Word{} : Word{{fr.gen, fr.exp - ur}});
            break;
        case MatchKind::UnitBoth:
            middle = Element::monomial(
                         QScalar::one(),
                         fl.exp == ul ? Word{} : Word{{fl.gen, fl.exp - ul}}) *
                     eval_rhs(r.rhs, ul, ur) *
                     Element::monomial(
                         QScalar::one(),
                         fr.exp == ur ? Word{} : Word{{fr.gen, fr.exp - ur}});
            break;
    }
    return splice(w, j, 2, middle);
}

Element Presentation::normal_form(const Element& e) const {
    Element result;
    std::map<Word, QScalar, WordLess> work(e.terms().begin(), e.terms().end());
    long steps = 0;
    while (!work.empty()) {
        auto node = work.extract(work.begin());
        const Word& w = node.key();
        const QScalar& c = node.mapped();
        if (c.is_zero()) continue;
        auto redex = find_redex(w);
        if (!redex) {
            result.add_term(w, c);
            continue;
        }
        if (++steps > budget_)
            throw std::runtime_error("normal form exceeded step budget at word " +
                                     Element::monomial(QScalar::one(), w).to_string(gens_));
        Element repl = redex->power ? apply_power(w, redex->pos, *redex->power)
                                    : apply_pair(w, redex->pos, *redex->pair);
        for (const auto& [rw, rc] : repl.terms()) {
            QScalar scaled = rc * c;
            auto [it, inserted] = work.try_emplace(rw, scaled);
            if (!inserted) {
                it->second += scaled;
                if (it->second.is_zero()) work.erase(it);
            }
        }
    }
    return result;
}

std::vector<Element> Presentation::one_step_rewrites(const Word& w) const {
    std::vector<Element> out;
    for (size_t j = 0; j < w.size(); ++j) {
        if (const PowerRule* p = find_power_rule(w[j]))
            out.push_back(apply_power(w, j, *p));
        if (j + 1 < w.size())
            if (const PairRule* r = find_pair_rule(w[j], w[j + 1]))
                out.push_back(apply_pair(w, j, *r));
    }
    return out;
}

void Presentation::set_star(int gen, Element image) {
    if (gens_[gen].invertible && image.size() != 1)
        throw std::logic_error("star image of invertible generator " +
                               gens_[gen].name + " must be a single term");
    star_images_[gen] = std::move(image);
}

Element Presentation::star(const Element& e) const {
    Element out;
    for (const auto& [w, c] : e.terms()) {
        Element prod = Element::scalar(c);
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            auto img = star_images_.find(it->gen);
            if (img == star_images_.end())
                throw std::logic_error("no star image for generator " +
                                       gens_[it->gen].name);
            prod *= it->exp >= 0 ? img->second.pow(it->exp)
                                 : img->second.inv_single(gens_).pow(-it->exp);
        }
        out += prod;
    }
    return out;
}

void Presentation::set_d_image(int gen, Element image) {
    d_images_[gen] = std::move(image);
}

void Presentation::set_d_operator(int dz_gen, int del_gen, int dzb_gen, int delb_gen) {
    dz_gen_ = dz_gen;
    del_gen_ = del_gen;
    dzb_gen_ = dzb_gen;
    delb_gen_ = delb_gen;
}

Element Presentation::operator_action(int op, int gen, int exp) const {
    Element x = normal_form(Element::generator(op) * Element::generator(gen, exp));
    Element out;
    for (const auto& [w, c] : x.terms()) {
        bool has_op = false;
        for (const auto& f : w)
            if (f.gen == del_gen_ || f.gen == delb_gen_) {
                has_op = true;
                break;
            }
        if (!has_op) out.add_term(w, c);
    }
    return out;
}

Element Presentation::apply_operator(int op, const Element& e) const {
    Element x = normal_form(Element::generator(op) * e);
    Element out;
    for (const auto& [w, c] : x.terms()) {
        bool has_op = false;
        for (const auto& f : w)
            if (f.gen == del_gen_ || f.gen == delb_gen_) {
                has_op = true;
                break;
            }
        if (!has_op) out.add_term(w, c);
    }
    return out;
}

Element Presentation::d_factor(int gen, int exp) const {
    auto it = d_images_.find(gen);
    if (it != d_images_.end()) {
        const Element& img = it->second;
        if (img.is_zero()) return {};
        if (exp < 0) {
            // d(g^-k) = -g^-k d(g^k) g^-k
            Element neg = Element::generator(gen, exp);
            return -(neg * d_factor(gen, -exp) * neg);
        }
        Element sum;
        for (int i = 0; i < exp; ++i) {
            Element piece = i == 0 ? img : Element::generator(gen, i) * img;
            if (exp - 1 - i > 0) piece *= Element::generator(gen, exp - 1 - i);
            sum += piece;
        }
        return sum;
    }
    if (del_gen_ >= 0) {
        const Generator& g = gens_[gen];
        if (g.constant || gen == dz_gen_ || gen == dzb_gen_) return {};
        if (gen == del_gen_ || gen == delb_gen_)
            throw std::logic_error("differential applied to operator letter " + g.name);
        if (g.degree != 0)
            throw std::logic_error("no differential image for form generator " + g.name);
        Element res = Element::generator(dz_gen_) * operator_action(del_gen_, gen, exp);
        if (delb_gen_ >= 0)
            res += Element::generator(dzb_gen_) * operator_action(delb_gen_, gen, exp);
        return res;
    }
    throw std::logic_error("no differential image for generator " + gens_[gen].name);
}

Element Presentation::d(const Element& e) const {
    Element acc;
    for (const auto& [w, c] : e.terms()) {
        int prefix_deg = 0;
        for (size_t j = 0; j < w.size(); ++j) {
            Element dj = d_factor(w[j].gen, w[j].exp);
            if (!dj.is_zero()) {
                QScalar sc = (prefix_deg % 2 != 0) ? -c : c;
                Element piece =
                    Element::monomial(sc, Word(w.begin(), w.begin() + j));
                piece *= dj;
                if (j + 1 < w.size())
                    piece *= Element::monomial(QScalar::one(),
                                               Word(w.begin() + j + 1, w.end()));
                acc += piece;
            }
            prefix_deg += gens_[w[j].gen].degree * w[j].exp;
        }
    }
    return normal_form(acc);
}

void Presentation::classify_form(int gen, int holomorphic) {
    if (holomorphic > 0) hol_forms_.insert(gen);
    else antihol_forms_.insert(gen);
}

std::pair<int, int> Presentation::word_bidegree(const Word& w) const {
    int p = 0, r = 0;
    for (const auto& f : w) {
        if (hol_forms_.count(f.gen)) p += f.exp;
        else if (antihol_forms_.count(f.gen)) r += f.exp;
    }
    return {p, r};
}

Element Presentation::bidegree_part(const Element& e, int p, int r) const {
    Element out;
    for (const auto& [w, c] : e.terms())
        if (word_bidegree(w) == std::pair{p, r}) out.add_term(w, c);
    return out;
}

Element Presentation::d_hol(const Element& e) const {
    Element out;
    for (const auto& [w, c] : e.terms()) {
        auto [p, r] = word_bidegree(w);
        out += bidegree_part(d(Element::monomial(c, w)), p + 1, r);
    }
    return out;
}

Element Presentation::d_antihol(const Element& e) const {
    Element out;
    for (const auto& [w, c] : e.terms()) {
        auto [p, r] = word_bidegree(w);
        out += bidegree_part(d(Element::monomial(c, w)), p, r + 1);
    }
    return out;
}

std::map<int, Element> graded_components(const Element& e, const Presentation& p) {
    std::map<int, Element> out;
    for (const auto& [w, c] : e.terms())
        out[word_degree(w, p.gens())].add_term(w, c);
    return out;
}

Element substitute(const Element& e, const std::map<int, Element>& images,
                   const Presentation& target) {
    Element out;
    for (const auto& [w, c] : e.terms()) {
        Element term = Element::scalar(c);
        for (const Factor& f : w) {
            auto it = images.find(f.gen);
            if (it == images.end()) {
                term = term * Element::monomial(QScalar::one(), {f});
                continue;
            }
            if (f.exp < 0)
                throw std::domain_error("substitute: negative power of " +
                                        target.gen(f.gen).name);
            for (int k = 0; k < f.exp; ++k) term = term * it->second;
        }
        out += term;
    }
    return target.normal_form(out);
}

ConfluenceReport check_confluence(const Presentation& p, int max_units) {
    ConfluenceReport rep;
    const auto& gens = p.gens();
    int n = static_cast<int>(gens.size());
    auto exps = [&](int g) {
        return gens[g].invertible ? std::vector<int>{-2, -1, 1, 2}
                                  : std::vector<int>{1, 2, 3};
    };
    std::vector<Word> words;
    for (int g1 = 0; g1 < n; ++g1)
        for (int e1 : exps(g1)) {
            if (std::abs(e1) > max_units) continue;
            words.push_back({{g1, e1}});
            for (int g2 = 0; g2 < n; ++g2) {
                if (g2 == g1) continue;
                for (int e2 : exps(g2)) {
                    if (std::abs(e1) + std::abs(e2) > max_units) continue;
                    words.push_back({{g1, e1}, {g2, e2}});
                    for (int g3 = 0; g3 < n; ++g3) {
                        if (g3 == g2) continue;
                        for (int e3 : exps(g3)) {
                            if (std::abs(e1) + std::abs(e2) + std::abs(e3) > max_units)
                                continue;
                            words.push_back({{g1, e1}, {g2, e2}, {g3, e3}});
                        }
                    }
                }
            }
        }
    for (const auto& w : words) {
        auto steps = p.one_step_rewrites(w);
        if (steps.size() < 2) continue;
        ++rep.words_checked;
        Element ref = p.normal_form(steps.front());
        for (size_t i = 1; i < steps.size(); ++i) {
            if (p.normal_form(steps[i]) != ref) {
                rep.violations.push_back(
                    Element::monomial(QScalar::one(), w).to_string(gens));
                break;
            }
        }
    }
    return rep;
}

std::vector<std::string> orientation_warnings(const Presentation& p) {
    std::vector<std::string> out;
    WordLess lt;
    for (const auto& [key, bucket] : p.pair_rules()) {
        for (const auto& rule : bucket) {
            int m = rule.sl == SignCond::Neg ? -1 : 1;
            int n = rule.sr == SignCond::Neg ? -1 : 1;
            Word lhs;
            word_push(lhs, {rule.gl, m});
            word_push(lhs, {rule.gr, n});
            for (const auto& t : rule.rhs) {
                Word w;
                for (const auto& tf : t.word) {
                    int e = tf.cm * m + tf.cn * n + tf.cc;
                    if (e != 0) word_push(w, {tf.gen, e});
                }
                if (!lt(w, lhs)) {
                    out.push_back(p.gens()[rule.gl].name + "," +
                                  p.gens()[rule.gr].name + " does not shrink");
                    break;
                }
            }
        }
    }
    return out;
}

} // namespace qriemann
