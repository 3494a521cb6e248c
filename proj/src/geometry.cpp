#include "qriemann/geometry.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qriemann {

namespace {

Element mono(const Word& w) { return Element::monomial(QScalar::one(), w); }

void check_inverse_pair(const Metric& g, const Presentation& p) {
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b) {
            Element acc;
            for (int c = 0; c < g.n; ++c) acc += g.down[a][c] * g.up[c][b];
            if (a == b) acc -= Element::scalar(QScalar::one());
            if (!p.normal_form(acc).is_zero())
                throw std::domain_error(
                    "metric and declared inverse do not contract to the identity");
        }
}

// Solves M x = b by Gaussian elimination over the scalar field.
std::vector<Element> solve_linear(std::vector<std::vector<QScalar>> M,
                                  std::vector<Element> b) {
    const int n = static_cast<int>(M.size());
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!M[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::logic_error("hodge: singular form-basis change");
        std::swap(M[piv], M[col]);
        std::swap(b[piv], b[col]);
        QScalar inv = M[col][col].inv();
        for (int k = col; k < n; ++k) M[col][k] *= inv;
        b[col] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || M[r][col].is_zero()) continue;
            QScalar f = M[r][col];
            for (int k = col; k < n; ++k) M[r][k] -= f * M[col][k];
            b[r] -= b[col] * f;
        }
    }
    return b;
}

} // namespace

Connection connection_from_metric(const Metric& g, const Presentation& p) {
    check_inverse_pair(g, p);
    Connection w;
    w.omega.assign(g.n, std::vector<Element>(g.n));
    if (g.complex_indices) {
        for (int a = 0; a < g.n; ++a)
            for (int b = 0; b < g.n; ++b) {
                Element acc;
                for (int c = 0; c < g.n; ++c)
                    acc += g.down[a][c] * p.d_hol(g.up[c][b]);
                w.omega[a][b] = p.normal_form(-acc);
            }
        return w;
    }
    // Doubled frame, block diagonal: the barred block repeats the
    // construction with the coordinate labels read the opposite way.
    if (g.n % 2 != 0)
        throw std::domain_error("real-indexed metric needs a doubled frame");
    const int half = g.n / 2;
    for (int a = 0; a < half; ++a)
        for (int b = 0; b < half; ++b) {
            Element hol, anti;
            for (int c = 0; c < half; ++c) {
                hol += g.down[a][c] * p.d_hol(g.up[c][b]);
                anti += g.down[half + a][half + c] * p.d_antihol(g.up[half + c][half + b]);
            }
            w.omega[a][b] = p.normal_form(-hol);
            w.omega[half + a][half + b] = p.normal_form(-anti);
        }
    return w;
}

std::vector<std::vector<Element>>
metricity_residual(const Metric& g, const Connection& w, const Presentation& p) {
    std::vector<std::vector<Element>> res(g.n, std::vector<Element>(g.n));
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b) {
            Element acc = p.d(g.up[a][b]);
            if (g.complex_indices) {
                // d g^{abar b} + (w_c^a)* g^{cbar b} + g^{abar c} w_c^b
                for (int c = 0; c < g.n; ++c) {
                    acc += p.star(w.omega[c][a]) * g.up[c][b];
                    acc += g.up[a][c] * w.omega[c][b];
                }
            } else {
                Element mixed;
                for (int c = 0; c < g.n; ++c) {
                    acc += g.up[a][c] * w.omega[c][b];
                    mixed += g.up[b][c] * w.omega[c][a];
                }
                acc += p.star(mixed);
            }
            res[a][b] = p.normal_form(acc);
        }
    return res;
}

std::vector<std::vector<Element>> curvature(const Connection& w,
                                            const Presentation& p) {
    const int n = static_cast<int>(w.omega.size());
    std::vector<std::vector<Element>> R(n, std::vector<Element>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Element acc = p.d(w.omega[a][b]);
            for (int c = 0; c < n; ++c) acc -= w.omega[a][c] * w.omega[c][b];
            R[a][b] = p.normal_form(acc);
        }
    return R;
}

std::vector<Element> torsion(const Connection& w, const std::vector<Element>& basis,
                             const Presentation& p) {
    const int n = static_cast<int>(basis.size());
    std::vector<Element> T(n);
    for (int a = 0; a < n; ++a) {
        Element acc = p.d(basis[a]);
        for (int b = 0; b < n; ++b) acc -= basis[b] * w.omega[b][a];
        T[a] = p.normal_form(acc);
    }
    return T;
}

std::vector<std::vector<Element>>
bianchi_residual(const Connection& w, const std::vector<std::vector<Element>>& R,
                 const Presentation& p) {
    const int n = static_cast<int>(w.omega.size());
    std::vector<std::vector<Element>> res(n, std::vector<Element>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Element acc = p.d(R[a][b]);
            for (int c = 0; c < n; ++c) {
                acc -= w.omega[a][c] * R[c][b];
                acc += R[a][c] * w.omega[c][b];
            }
            res[a][b] = p.normal_form(acc);
        }
    return res;
}

std::vector<Element> consistency_residual(const std::vector<Element>& T,
                                          const std::vector<std::vector<Element>>& R,
                                          const std::vector<Element>& basis,
                                          const Presentation& p) {
    const int n = static_cast<int>(basis.size());
    std::vector<Element> res(n);
    for (int a = 0; a < n; ++a) {
        Element acc = p.d(T[a]);
        for (int b = 0; b < n; ++b) acc -= basis[b] * R[b][a];
        res[a] = p.normal_form(acc);
    }
    return res;
}

std::vector<Element> lower_index(const std::vector<Element>& v, const Metric& g,
                                 const Presentation& p) {
    std::vector<Element> out(g.n);
    for (int a = 0; a < g.n; ++a) {
        Element acc;
        for (int b = 0; b < g.n; ++b) acc += g.down[a][b] * p.star(v[b]);
        out[a] = p.normal_form(acc);
    }
    return out;
}

std::vector<Element> raise_index(const std::vector<Element>& v, const Metric& g,
                                 const Presentation& p) {
    std::vector<Element> out(g.n);
    for (int a = 0; a < g.n; ++a) {
        Element acc;
        for (int b = 0; b < g.n; ++b) acc += p.star(v[b]) * g.up[b][a];
        out[a] = p.normal_form(acc);
    }
    return out;
}

namespace {

// Extraction of the left cofactor against a fixed tail of unit form
// letters: every term of x must end in exactly `tail`.
Element strip_tail(const Element& x, const Word& tail, const char* what) {
    Element out;
    for (const auto& [w, c] : x.terms()) {
        if (w.size() < tail.size())
            throw std::logic_error(std::string("hodge: ") + what +
                                   " lacks the full top form");
        for (size_t j = 0; j < tail.size(); ++j)
            if (!(w[w.size() - tail.size() + j] == tail[j]))
                throw std::logic_error(std::string("hodge: ") + what +
                                       " lacks the full top form");
        out.add_term(Word(w.begin(), w.end() - tail.size()), c);
    }
    return out;
}

struct PatchData {
    std::vector<int> hol, antihol;   // form generators, ascending
    std::vector<Element> kpow;
    Element mu_inv;
    QScalar sigma_inv;               // reverses the antiholomorphic top
    Word top_hol, top_antihol;
};

Word subset_word(const std::vector<int>& list, unsigned mask) {
    Word w;
    for (size_t i = 0; i < list.size(); ++i)
        if (mask & (1u << i)) word_push(w, {list[i], 1});
    return w;
}

// P with P * (descending antiholomorphic top) = K^(N-r) * wbar.
Element patch_left(const PatchData& d, const Word& wbar, const Presentation& p) {
    const int r = static_cast<int>(wbar.size());
    const int N = static_cast<int>(d.hol.size());
    Element x = p.normal_form(d.kpow[N - r] * mono(wbar));
    return strip_tail(x, d.top_antihol, "left patch factor") * d.sigma_inv;
}

Element patch_right(const PatchData& d, const Word& w, const Presentation& p) {
    Element sw = p.star(mono(w));
    if (sw.size() != 1)
        throw std::logic_error("hodge: form letters need single-letter conjugates");
    return p.star(patch_left(d, sw.terms().begin()->first, p));
}

} // namespace

HodgeStar build_hodge_from_kahler(const Element& K, const Metric& g,
                                  const Presentation& p,
                                  const std::vector<std::vector<Element>>& norms) {
    if (!p.has_d()) throw std::logic_error("hodge: presentation has no differential");
    PatchData d;
    for (int gi : p.hol_form_gens()) d.hol.push_back(gi);
    for (int gi : p.antihol_form_gens()) d.antihol.push_back(gi);
    const int N = static_cast<int>(d.hol.size());
    if (N == 0 || d.antihol.size() != static_cast<size_t>(N))
        throw std::logic_error("hodge: form generators are not paired");

    if (!p.normal_form(p.star(K) - K).is_zero())
        throw std::domain_error("kahler form is not real");
    for (int gi = 0; gi < static_cast<int>(p.gens().size()); ++gi) {
        if (gi == p.del_gen() || gi == p.delb_gen()) continue;
        Element gel = Element::generator(gi);
        if (!p.normal_form(K * gel - gel * K).is_zero())
            throw std::domain_error("kahler form is not central against '" +
                                    p.gen(gi).name + "'");
    }

    HodgeStar h;
    for (int gi = 0; gi < static_cast<int>(p.gens().size()); ++gi) {
        const Generator& gen = p.gen(gi);
        if (gen.degree != 0 || gen.constant) continue;
        if (gi == p.del_gen() || gi == p.delb_gen()) continue;
        Element dg = p.d(Element::generator(gi));
        if (dg.is_zero()) continue;
        bool hol = !p.d_hol(Element::generator(gi)).is_zero();
        bool anti = !p.d_antihol(Element::generator(gi)).is_zero();
        if (anti && !hol) h.antihol_coords.insert(gi);
    }

    for (int gi : d.hol) word_push(d.top_hol, {gi, 1});
    for (int gi : d.antihol) word_push(d.top_antihol, {gi, 1});
    Word desc;
    for (auto it = d.antihol.rbegin(); it != d.antihol.rend(); ++it)
        word_push(desc, {*it, 1});
    Element sig = p.normal_form(mono(desc));
    if (sig.size() != 1 || !(sig.terms().begin()->first == d.top_antihol))
        throw std::logic_error("hodge: antiholomorphic top form does not reverse");
    d.sigma_inv = sig.terms().begin()->second.inv();

    d.kpow.resize(N + 1);
    for (int j = 0; j <= N; ++j) d.kpow[j] = p.normal_form(K.pow(j));

    Element mu = strip_tail(strip_tail(d.kpow[N], d.top_antihol, "volume"),
                            d.top_hol, "volume") *
                 d.sigma_inv;
    if (mu.size() != 1)
        throw std::domain_error("volume function is not a monomial");
    for (int gi : d.hol) {
        Element f = Element::generator(gi);
        if (!p.normal_form(mu * f - f * mu).is_zero())
            throw std::domain_error("volume function is not central against '" +
                                    p.gen(gi).name + "'");
    }
    d.mu_inv = mu.inv_single(p.gens());

    auto norm_at = [&](int pp, int rr) -> Element {
        if (norms.empty()) return Element::scalar(QScalar::one());
        return norms.at(pp).at(rr);
    };

    for (int pp = 0; pp <= N; ++pp)
        for (int rr = 0; rr <= N; ++rr) {
            std::vector<std::pair<unsigned, unsigned>> idx; // (hol mask, antihol mask)
            for (unsigned mt = 0; mt < (1u << N); ++mt) {
                if (__builtin_popcount(mt) != pp) continue;
                for (unsigned ms = 0; ms < (1u << N); ++ms)
                    if (__builtin_popcount(ms) == rr) idx.push_back({mt, ms});
            }
            const int dim = static_cast<int>(idx.size());
            std::vector<Word> canon(dim);
            std::map<Word, int, WordLess> canon_pos;
            for (int k = 0; k < dim; ++k) {
                canon[k] = word_concat(subset_word(d.hol, idx[k].first),
                                       subset_word(d.antihol, idx[k].second));
                canon_pos[canon[k]] = k;
            }
            std::vector<std::vector<QScalar>> M(dim, std::vector<QScalar>(dim));
            std::vector<Element> H(dim);
            for (int j = 0; j < dim; ++j) {
                Word holw = subset_word(d.hol, idx[j].first);
                Word antiw = subset_word(d.antihol, idx[j].second);
                Element patched = patch_left(d, antiw, p) * d.mu_inv *
                                  patch_right(d, holw, p);
                H[j] = p.normal_form(norm_at(pp, rr) * patched);
                Element nfw = p.normal_form(mono(word_concat(antiw, holw)));
                for (const auto& [w2, c2] : nfw.terms()) {
                    auto it = canon_pos.find(w2);
                    if (it == canon_pos.end())
                        throw std::logic_error("hodge: reordered basis word left its bidegree");
                    M[j][it->second] = c2;
                }
            }
            std::vector<Element> x = solve_linear(std::move(M), std::move(H));
            for (int k = 0; k < dim; ++k) h.table[canon[k]] = x[k];
        }
    return h;
}

Element hodge_apply(const HodgeStar& h, const Element& e, const Presentation& p) {
    Element x = p.normal_form(e);
    Element out;
    const auto& gens = p.gens();
    auto expand = [&](const Word& formw) {
        Element nfw = p.normal_form(mono(formw));
        Element r;
        for (const auto& [w2, c2] : nfw.terms()) {
            auto it = h.table.find(w2);
            if (it == h.table.end())
                throw std::logic_error("hodge: no table entry for a form word");
            r += it->second * c2;
        }
        return r;
    };
    for (const auto& [w, c] : x.terms()) {
        size_t fpos = w.size();
        for (size_t j = 0; j < w.size(); ++j)
            if (gens[w[j].gen].degree != 0) {
                fpos = j;
                break;
            }
        for (size_t j = fpos; j < w.size(); ++j)
            if (gens[w[j].gen].degree == 0)
                throw std::logic_error("hodge: function letters right of form letters");
        size_t zpos = fpos;
        for (size_t j = 0; j < fpos; ++j)
            if (h.antihol_coords.count(w[j].gen)) {
                zpos = j;
                break;
            }
        Element left = Element::monomial(c, Word(w.begin(), w.begin() + zpos));
        Word zb(w.begin() + zpos, w.begin() + fpos);
        Word om(w.begin() + fpos, w.end());
        if (zb.empty()) {
            out += left * expand(om);
            continue;
        }
        // Transport the function block that starts at the first
        // conjugate coordinate to the right of the form part: under
        // star the block travels leftward, the reduction direction.
        Element moved = p.star(p.normal_form(p.star(mono(word_concat(zb, om)))));
        for (const auto& [w2, c2] : moved.terms()) {
            size_t split = 0;
            for (size_t j = 0; j < w2.size(); ++j)
                if (gens[w2[j].gen].degree != 0) split = j + 1;
            for (size_t j = 0; j < split; ++j)
                if (gens[w2[j].gen].degree == 0)
                    throw std::logic_error("hodge: transport interleaved a function");
            out += left * expand(Word(w2.begin(), w2.begin() + split)) *
                   Element::monomial(c2, Word(w2.begin() + split, w2.end()));
        }
    }
    return p.normal_form(out);
}

Element scalar_curvature(const std::vector<std::vector<Element>>& R,
                         const HodgeStar& h, const std::vector<Element>& basis,
                         const Metric& g, int dim, const Presentation& p) {
    std::vector<Element> low = lower_index(basis, g, p);
    Element acc;
    for (size_t a = 0; a < basis.size(); ++a)
        for (size_t b = 0; b < basis.size(); ++b)
            acc += basis[a] * hodge_apply(h, R[a][b], p) * low[b];
    Element s = hodge_apply(h, acc, p);
    if (dim % 2 == 0) s = -s;
    return p.normal_form(s);
}

std::vector<std::vector<Element>> ricci(const std::vector<std::vector<Element>>& R,
                                        const HodgeStar& h,
                                        const std::vector<Element>& basis,
                                        const Metric& g, const Presentation& p,
                                        RicciVariant variant) {
    const int n = static_cast<int>(basis.size());
    std::vector<Element> low = lower_index(basis, g, p);
    std::vector<std::vector<Element>> out(n, std::vector<Element>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Element acc;
            for (int c = 0; c < n; ++c) {
                if (variant == RicciVariant::Left)
                    acc += hodge_apply(h, R[a][c], p) * low[c] * basis[b];
                else
                    acc += low[a] * basis[c] * hodge_apply(h, R[c][b], p);
            }
            out[a][b] = hodge_apply(h, acc, p);
        }
    return out;
}

Element codifferential(const Element& a, const HodgeStar& h, const Presentation& p) {
    return p.normal_form(-hodge_apply(h, p.d(hodge_apply(h, a, p)), p));
}

Element laplacian(const Element& f, const HodgeStar& h, const Presentation& p,
                  const QScalar& normalization) {
    auto dd = [&](const Element& x) { return p.d(x) + codifferential(x, h, p); };
    return p.normal_form(dd(dd(f)) * (-normalization));
}

Element kahler_potential_residual(const Element& K, const Element& scale,
                                  int rho_gen, int n_trunc,
                                  const Presentation& p) {
    Element v;
    for (int n = 1; n <= n_trunc; ++n)
        v += Element::generator(rho_gen, -n) * q_int(2 * n, true).inv();
    v = scale * v;
    return p.normal_form(p.d_hol(p.d_antihol(v)) - K);
}

} // namespace qriemann
