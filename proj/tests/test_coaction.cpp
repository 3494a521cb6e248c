#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qriemann/spaces.hpp"

#include <map>
#include <string>

using namespace qriemann;

namespace {

QScalar qp(int e) { return QScalar::q_power(e); }
QScalar one() { return QScalar::one(); }

// Denominator factors of the coordinate images, indexed by the power of
// q riding on the coordinate: D_k = q^-k c z + d and E_k = a - q^k b zb.
Element dfac(const Suq2Coaction& x, int k) {
    Element cz = Element::generator(x.g_c) * Element::generator(x.g_z);
    return x.pres.normal_form(qp(-k) * cz + Element::generator(x.g_d));
}

Element efac(const Suq2Coaction& x, int k) {
    Element bzb = Element::generator(x.g_b) * Element::generator(x.g_zb);
    return x.pres.normal_form(Element::generator(x.g_a) - qp(k) * bzb);
}

} // namespace

TEST_CASE("transformation algebra is confluent and star-consistent") {
    Suq2Coaction x = adjoin_suq2_coaction(sq2(Sq2Variant::Complex));
    const Presentation& p = x.pres;

    ConfluenceReport rep = check_confluence(p, 4);
    CAPTURE(rep.violations.empty() ? "" : rep.violations.front());
    CHECK(rep.violations.empty());
    CHECK(rep.words_checked > 500);

    for (const auto& [key, rules] : p.pair_rules()) {
        for (const PairRule& r : rules) {
            for (int m : {1, -1}) {
                if (m < 0 && !p.gen(r.gl).invertible) continue;
                if ((r.sl == SignCond::Pos && m < 0) || (r.sl == SignCond::Neg && m > 0))
                    continue;
                for (int k : {1, -1}) {
                    if (k < 0 && !p.gen(r.gr).invertible) continue;
                    if ((r.sr == SignCond::Pos && k < 0) ||
                        (r.sr == SignCond::Neg && k > 0))
                        continue;
                    Element lhs = Element::generator(r.gl, m) * Element::generator(r.gr, k);
                    Element rhs = p.normal_form(lhs);
                    Element diff = p.normal_form(p.star(lhs)) - p.normal_form(p.star(rhs));
                    CAPTURE(p.gen(r.gl).name);
                    CAPTURE(p.gen(r.gr).name);
                    CHECK(p.normal_form(diff).is_zero());
                }
            }
        }
    }
}

TEST_CASE("matrix relations and the unit determinant reduce by the rules") {
    Suq2Coaction x = adjoin_suq2_coaction(sq2(Sq2Variant::Complex));
    const Presentation& p = x.pres;
    auto nf = [&](const Element& e) { return p.normal_form(e); };
    Element a = Element::generator(x.g_a), b = Element::generator(x.g_b),
            c = Element::generator(x.g_c), d = Element::generator(x.g_d);

    CHECK(nf(a * b - qp(1) * (b * a)).is_zero());
    CHECK(nf(a * c - qp(1) * (c * a)).is_zero());
    CHECK(nf(b * d - qp(1) * (d * b)).is_zero());
    CHECK(nf(c * d - qp(1) * (d * c)).is_zero());
    CHECK(nf(b * c - c * b).is_zero());
    CHECK(nf(a * d - d * a - qs_lambda() * (b * c)).is_zero());
    // both orderings of the diagonal contract through the determinant
    CHECK(nf(a * d - qp(1) * (b * c) - Element::scalar(one())).is_zero());
    CHECK(nf(d * a - qp(-1) * (b * c) - Element::scalar(one())).is_zero());

    // matrix entries commute with every sphere letter
    for (int g : {x.g_rho, x.g_z, x.g_zb, x.g_dz, x.g_dzb})
        for (int t : {x.g_a, x.g_b, x.g_c, x.g_d}) {
            Element gg = Element::generator(g), tt = Element::generator(t);
            CHECK(nf(gg * tt - tt * gg).is_zero());
        }
}

TEST_CASE("sphere-built matrix satisfies the matrix relations and is unitary") {
    Suq2Coaction x = adjoin_suq2_coaction(sq2(Sq2Variant::Complex));
    const Presentation& p = x.pres;
    auto nf = [&](const Element& e) { return p.normal_form(e); };
    auto sub = [&](const Element& e) { return substitute(e, x.sphere_matrix, p); };
    Element a = Element::generator(x.g_a), b = Element::generator(x.g_b),
            c = Element::generator(x.g_c), d = Element::generator(x.g_d);

    const Element rels[] = {a * b - qp(1) * (b * a),
                            a * c - qp(1) * (c * a),
                            b * d - qp(1) * (d * b),
                            c * d - qp(1) * (d * c),
                            b * c - c * b,
                            a * d - d * a - qs_lambda() * (b * c),
                            a * d - qp(1) * (b * c) - Element::scalar(one())};
    for (const Element& r : rels) {
        CAPTURE(r.to_string(p.gens()));
        CHECK(sub(r).is_zero());
    }

    const Element am = x.sphere_matrix.at(x.g_a), bm = x.sphere_matrix.at(x.g_b),
                  cm = x.sphere_matrix.at(x.g_c), dm = x.sphere_matrix.at(x.g_d);
    CHECK(nf(p.star(am) * am + p.star(cm) * cm) == Element::scalar(one()));
    CHECK(nf(p.star(bm) * bm + p.star(dm) * dm) == Element::scalar(one()));
    CHECK(nf(p.star(am) * bm + p.star(cm) * dm).is_zero());
    CHECK(nf(p.star(bm) * am + p.star(dm) * cm).is_zero());
}

TEST_CASE("coordinate images are exchanged by the involution") {
    Suq2Coaction x = adjoin_suq2_coaction(sq2(Sq2Variant::Complex));
    const Presentation& p = x.pres;
    auto nf = [&](const Element& e) { return p.normal_form(e); };
    Element c = Element::generator(x.g_c), d = Element::generator(x.g_d),
            zb = Element::generator(x.g_zb);

    // star of z's numerator and denominator gives zb's transformation in
    // left-denominator form: zb' = (a - q^-1 b zb)^-1 (d zb - q c)
    const CoactionImage& imz = x.images.at("z");
    Element numl = nf(p.star(imz.num));
    Element denl = nf(p.star(imz.den.front()));
    CHECK(numl == nf(d * zb - qp(1) * c));
    CHECK(denl == efac(x, -1));

    // that left form agrees with the stored right-denominator image:
    // E_-1 (d zb - c) = q (q^-1 d zb - c) E_0
    const CoactionImage& imzb = x.images.at("zb");
    Element lhs = nf(efac(x, -1) * imzb.num);
    Element rhs = nf(qp(1) * (nf(qp(-1) * (d * zb) - c) * imzb.den.front()));
    CHECK(lhs == rhs);
    CHECK(nf(qp(1) * (nf(qp(-1) * (d * zb) - c))) == numl);
}

TEST_CASE("transformed coordinates preserve the defining sphere relation") {
    Suq2Coaction x = adjoin_suq2_coaction(sq2(Sq2Variant::Complex));
    const Presentation& p = x.pres;
    auto nf = [&](const Element& e) { return p.normal_form(e); };

    // zb'z' = rho' - 1 with rho' = E_-1^-1 rho D_0^-1 clears to
    // E_-1 D_0 + (d zb - q c)(a z + b) = rho
    Element numl = nf(Element::generator(x.g_d) * Element::generator(x.g_zb) -
                      qp(1) * Element::generator(x.g_c));
    Element m = nf(efac(x, -1) * dfac(x, 0) + numl * x.images.at("z").num);
    CHECK(m == Element::generator(x.g_rho, 2));
}

TEST_CASE("kahler form is invariant under the transformation") {
    Suq2Coaction x = adjoin_suq2_coaction(sq2(Sq2Variant::Complex));
    const Presentation& p = x.pres;
    auto nf = [&](const Element& e) { return p.normal_form(e); };
    Element rhoinv = Element::generator(x.g_rho, -2);

    // K' = rho'^-2 dz' dzb' with rho'^-1 = D_0 rho^-1 E_-1,
    // dz' = dz D_1^-1 D_0^-1 and dzb' = dzb E_1^-1 E_0^-1.  Pulling the
    // denominators through dz dzb shifts every index by two (f dz = dz f'
    // with z -> q^-2 z, zb -> q^2 zb), so K' = K collapses to the
    // polynomial identity below once both sides are cleared against
    // dz dzb D_3^-1 D_2^-1 E_1^-1 E_0^-1.
    Element lhs = nf(dfac(x, 4) * rhoinv * efac(x, 3) * dfac(x, 4) * rhoinv * efac(x, 3));
    Element rhs = nf(rhoinv * rhoinv * efac(x, 0) * efac(x, 1) * dfac(x, 2) * dfac(x, 3));
    CHECK(lhs == rhs);

    // the denominator factors themselves pull through the top form
    Element top = nf(Element::generator(x.g_dz) * Element::generator(x.g_dzb));
    CHECK(nf(dfac(x, 0) * top) == nf(top * dfac(x, 4)));
    CHECK(nf(efac(x, -1) * top) == nf(top * efac(x, 3)));
}

TEST_CASE("unit matrix acts as the identity transformation") {
    Suq2Coaction x = adjoin_suq2_coaction(sq2(Sq2Variant::Complex));
    const Presentation& p = x.pres;
    std::map<int, Element> unit = {{x.g_a, Element::scalar(one())},
                                   {x.g_b, Element()},
                                   {x.g_c, Element()},
                                   {x.g_d, Element::scalar(one())}};
    for (const std::string& key : {"z", "zb", "dz", "dzb"}) {
        const CoactionImage& im = x.images.at(key);
        CAPTURE(key);
        CHECK(substitute(im.num, unit, p) == Element::generator(p.gen_index(key)));
        for (const Element& den : im.den)
            CHECK(substitute(den, unit, p) == Element::scalar(one()));
    }
}

TEST_CASE("coaction extension rejects other presets") {
    CHECK_THROWS_AS(adjoin_suq2_coaction(cpqn(2)), std::domain_error);
}
