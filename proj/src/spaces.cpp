#include "qriemann/spaces.hpp"

#include <stdexcept>

namespace qriemann {

namespace {

QScalar one() { return QScalar::one(); }
QScalar qp(int e) { return QScalar::q_power(e); }

Word mkword(std::initializer_list<Factor> fs) {
    Word out;
    for (const Factor& f : fs) word_push(out, f);
    return out;
}

Element mono(QScalar c, std::initializer_list<Factor> fs) {
    return Element::monomial(std::move(c), mkword(fs));
}

} // namespace

SpacePreset sq2(Sq2Variant variant) {
    SpacePreset s;
    s.name = "sq2";
    Presentation& p = s.pres;

    const int c = p.add_generator({"c", 0, true, true});
    const int i = p.add_generator({"i", 0, true, true});
    const int rho = p.add_generator({"rho", 0, true});
    const int z = p.add_generator({"z"});
    const int zb = p.add_generator({"zb"});
    const int dz = p.add_generator({"dz", 1});
    const int dzb = p.add_generator({"dzb", 1});
    const int del = p.add_generator({"del"});
    const int delb = p.add_generator({"delb"});
    s.g_c = c;
    s.g_i = i;
    s.g_rho = rho;
    s.g_z = {z};
    s.g_zb = {zb};
    s.g_dz = {dz};
    s.g_dzb = {dzb};
    s.g_del = del;
    s.g_delb = delb;

    // coordinate sector
    p.add_swap_rule(z, rho, -4);
    p.add_swap_rule(zb, rho, +4);
    p.add_pair_rule({zb, z, MatchKind::UnitBoth, SignCond::Any, SignCond::Any,
                     {{TMono{one()}, {{rho, 0, 0, 1}}}, {TMono{-one()}, {}}}});
    p.add_pair_rule({z, zb, MatchKind::UnitBoth, SignCond::Any, SignCond::Any,
                     {{TMono{qp(-2)}, {{rho, 0, 0, 1}}}, {TMono{-one()}, {}}}});

    // one-forms over the coordinates
    p.add_swap_rule(dz, z, +4);
    p.add_swap_rule(dz, zb, -4);
    p.add_swap_rule(dz, rho, 0);
    p.add_swap_rule(dzb, z, +4);
    p.add_swap_rule(dzb, zb, -4);
    p.add_swap_rule(dzb, rho, 0);
    p.add_pair_rule({dzb, dz, MatchKind::UnitBoth, SignCond::Any, SignCond::Any,
                     {{TMono{-qp(2)}, {{dz, 0, 0, 1}, {dzb, 0, 0, 1}}}}});
    p.add_power_rule({dz, 2, 2, {}});
    p.add_power_rule({dzb, 2, 2, {}});

    // imaginary unit
    p.add_power_rule({i, 2, 2, Element::scalar(-one())});
    p.add_power_rule({i, -1, -2, Element::scalar(-one())});

    // derivation letters; the rho rules carry the q-integer tails
    const QScalar a0 = (qp(-2) - one()).inv();
    const QScalar b0 = (qp(2) - one()).inv();
    const QScalar ql = qp(1) * qs_lambda().inv();
    p.add_pair_rule({del, z, MatchKind::UnitLeft, SignCond::Any, SignCond::Any,
                     {{TMono{a0, 0, -4, 0}, {{z, 0, 1, -1}}},
                      {TMono{-a0}, {{z, 0, 1, -1}}},
                      {TMono{one(), 0, -4, 0}, {{z, 0, 1, 0}, {del, 0, 0, 1}}}}});
    p.add_pair_rule({del, zb, MatchKind::UnitLeft, SignCond::Any, SignCond::Any,
                     {{TMono{one(), 0, 4, 0}, {{zb, 0, 1, 0}, {del, 0, 0, 1}}}}});
    p.add_pair_rule({del, rho, MatchKind::UnitLeft, SignCond::Any, SignCond::Any,
                     {{TMono{one()}, {{rho, 0, 1, 0}, {del, 0, 0, 1}}},
                      {TMono{ql, 0, 4, 0}, {{rho, 0, 1, -1}, {zb, 0, 0, 1}}},
                      {TMono{-ql}, {{rho, 0, 1, -1}, {zb, 0, 0, 1}}}}});
    p.add_pair_rule({delb, z, MatchKind::UnitLeft, SignCond::Any, SignCond::Any,
                     {{TMono{one(), 0, -4, 0}, {{z, 0, 1, 0}, {delb, 0, 0, 1}}}}});
    p.add_pair_rule({delb, zb, MatchKind::UnitLeft, SignCond::Any, SignCond::Any,
                     {{TMono{b0, 0, 4, 0}, {{zb, 0, 1, -1}}},
                      {TMono{-b0}, {{zb, 0, 1, -1}}},
                      {TMono{one(), 0, 4, 0}, {{zb, 0, 1, 0}, {delb, 0, 0, 1}}}}});
    p.add_pair_rule({delb, rho, MatchKind::UnitLeft, SignCond::Any, SignCond::Any,
                     {{TMono{one()}, {{rho, 0, 1, 0}, {delb, 0, 0, 1}}},
                      {TMono{-ql, 0, -4, 0}, {{rho, 0, 1, -1}, {z, 0, 0, 1}}},
                      {TMono{ql}, {{rho, 0, 1, -1}, {z, 0, 0, 1}}}}});
    p.add_pair_rule({delb, del, MatchKind::UnitBoth, SignCond::Any, SignCond::Any,
                     {{TMono{qp(2)}, {{del, 0, 0, 1}, {delb, 0, 0, 1}}}}});
    p.finalize_constants();

    p.set_star(c, Element::generator(c));
    p.set_star(i, mono(-one(), {{i, 1}}));
    p.set_star(rho, Element::generator(rho));
    p.set_star(z, Element::generator(zb));
    p.set_star(zb, Element::generator(z));
    p.set_star(dz, Element::generator(dzb));
    p.set_star(dzb, Element::generator(dz));
    p.set_star(del, mono(-qp(-2), {{rho, 2}, {delb, 1}, {rho, -2}}));
    p.set_star(delb, mono(-qp(2), {{rho, 2}, {del, 1}, {rho, -2}}));

    p.set_d_operator(dz, del, dzb, delb);
    p.classify_form(dz, +1);
    p.classify_form(dzb, -1);

    const Element g_up = mono(qp(2), {{c, 1}, {rho, 2}});
    const Element g_down = mono(qp(-2), {{c, -1}, {rho, -2}});
    s.hodge_metric = {1, true, {{g_up}}, {{g_down}}};
    s.kahler = p.normal_form(Element::generator(dz) * g_down * Element::generator(dzb));
    s.kpot_scale = mono(qp(-4), {{c, -1}});
    s.dimension = 2;

    const QScalar one_p_q2 = one() + qp(2);
    const Element iu = Element::generator(i);
    if (variant == Sq2Variant::Complex) {
        s.metric = s.hodge_metric;
        s.basis = {Element::generator(dz)};
        s.hodge_norms = {{qp(2) * iu, -iu}, {iu, iu}};
        s.expected["connection_0_0"] =
            mono(-one_p_q2, {{rho, -1}, {zb, 1}, {dz, 1}});
        s.expected["curvature_0_0"] =
            mono(qp(4) * one_p_q2, {{rho, -2}, {dz, 1}, {dzb, 1}});
        s.expected["scalar_curvature"] = mono(qp(2) * one_p_q2, {{c, 1}});
        s.expected["ricci_0_0"] = mono(qp(4) * one_p_q2, {{c, 1}});
    } else {
        const QScalar r = (one() + qp(-2)).inv();
        const Element ru = mono(r, {{c, 1}, {rho, 2}});
        const Element rd = mono(r.inv(), {{c, -1}, {rho, -2}});
        s.metric = {2, false, {{ru, {}}, {{}, ru}}, {{rd, {}}, {{}, rd}}};
        s.basis = {Element::generator(dz), Element::generator(dzb)};
        const QScalar half = QScalar::rational(1, 2);
        s.hodge_norms = {{QScalar::integer(2) * qp(2) * iu, -iu}, {iu, half * iu}};
        s.expected["connection_0_0"] =
            mono(-one_p_q2, {{rho, -1}, {zb, 1}, {dz, 1}});
        s.expected["connection_1_1"] =
            mono(-one_p_q2, {{rho, -1}, {z, 1}, {dzb, 1}});
        s.expected["curvature_0_0"] =
            mono(qp(4) * one_p_q2, {{rho, -2}, {dz, 1}, {dzb, 1}});
        s.expected["curvature_1_1"] = mono(-one_p_q2, {{rho, -2}, {dz, 1}, {dzb, 1}});
        const QScalar quarter = QScalar::rational(1, 4);
        s.expected["scalar_curvature"] =
            mono(quarter * one_p_q2.pow(3), {{c, 1}});
        s.expected["ricci_0_0"] = mono(quarter * qp(4) * one_p_q2.pow(2), {{c, 1}});
        s.expected["ricci_1_1"] = mono(quarter * qp(-2) * one_p_q2.pow(2), {{c, 1}});
    }
    return s;
}

Suq2Coaction adjoin_suq2_coaction(const SpacePreset& sphere) {
    if (sphere.name != "sq2")
        throw std::domain_error("coaction extension expects the sphere preset");
    Suq2Coaction x;
    Presentation& p = x.pres;

    // b, c sort first so a and d are always adjacent when they meet:
    // the determinant contraction below must never see them separated
    const int tb = p.add_generator({"b"});
    const int tc = p.add_generator({"c"});
    const int ta = p.add_generator({"a"});
    const int td = p.add_generator({"d"});
    const int rho = p.add_generator({"rho", 0, true, false, true});
    const int z = p.add_generator({"z"});
    const int zb = p.add_generator({"zb"});
    const int dz = p.add_generator({"dz", 1});
    const int dzb = p.add_generator({"dzb", 1});
    x.g_a = ta;
    x.g_b = tb;
    x.g_c = tc;
    x.g_d = td;
    x.g_rho = rho;
    x.g_z = z;
    x.g_zb = zb;
    x.g_dz = dz;
    x.g_dzb = dzb;

    // exchange relations; both diagonal products contract through the
    // unit determinant, so canonical words never hold a and d together
    p.add_swap_rule(ta, tb, +2);
    p.add_swap_rule(ta, tc, +2);
    p.add_swap_rule(tc, tb, 0);
    p.add_swap_rule(td, tb, -2);
    p.add_swap_rule(td, tc, -2);
    p.add_pair_rule({ta, td, MatchKind::UnitBoth, SignCond::Any, SignCond::Any,
                     {{TMono{one()}, {}},
                      {TMono{qp(1)}, {{tb, 0, 0, 1}, {tc, 0, 0, 1}}}}});
    p.add_pair_rule({td, ta, MatchKind::UnitBoth, SignCond::Any, SignCond::Any,
                     {{TMono{one()}, {}},
                      {TMono{qp(-1)}, {{tb, 0, 0, 1}, {tc, 0, 0, 1}}}}});

    // sphere sector as in the base preset, with rho in half units
    p.add_swap_rule(z, rho, -2);
    p.add_swap_rule(zb, rho, +2);
    p.add_pair_rule({zb, z, MatchKind::UnitBoth, SignCond::Any, SignCond::Any,
                     {{TMono{one()}, {{rho, 0, 0, 2}}}, {TMono{-one()}, {}}}});
    p.add_pair_rule({z, zb, MatchKind::UnitBoth, SignCond::Any, SignCond::Any,
                     {{TMono{qp(-2)}, {{rho, 0, 0, 2}}}, {TMono{-one()}, {}}}});
    p.add_swap_rule(dz, z, +4);
    p.add_swap_rule(dz, zb, -4);
    p.add_swap_rule(dz, rho, 0);
    p.add_swap_rule(dzb, z, +4);
    p.add_swap_rule(dzb, zb, -4);
    p.add_swap_rule(dzb, rho, 0);
    p.add_pair_rule({dzb, dz, MatchKind::UnitBoth, SignCond::Any, SignCond::Any,
                     {{TMono{-qp(2)}, {{dz, 0, 0, 1}, {dzb, 0, 0, 1}}}}});
    p.add_power_rule({dz, 2, 2, {}});
    p.add_power_rule({dzb, 2, 2, {}});

    // the matrix entries commute with the whole coordinate sector
    for (int g : {rho, z, zb, dz, dzb})
        for (int t : {ta, tb, tc, td}) p.add_swap_rule(g, t, 0);
    p.finalize_constants();

    p.set_star(rho, Element::generator(rho));
    p.set_star(z, Element::generator(zb));
    p.set_star(zb, Element::generator(z));
    p.set_star(dz, Element::generator(dzb));
    p.set_star(dzb, Element::generator(dz));
    p.set_star(ta, Element::generator(td));
    p.set_star(td, Element::generator(ta));
    p.set_star(tb, mono(-qp(1), {{tc, 1}}));
    p.set_star(tc, mono(-qp(-1), {{tb, 1}}));
    p.classify_form(dz, +1);
    p.classify_form(dzb, -1);

    auto G = [](int g) { return Element::generator(g); };
    const Element den_z = p.normal_form(G(tc) * G(z) + G(td));
    const Element den_z_q = p.normal_form(qp(-1) * (G(tc) * G(z)) + G(td));
    const Element den_zb = p.normal_form(G(ta) - G(tb) * G(zb));
    const Element den_zb_q = p.normal_form(G(ta) - qp(1) * (G(tb) * G(zb)));
    x.images["z"] = {p.normal_form(G(ta) * G(z) + G(tb)), {den_z}};
    x.images["zb"] = {p.normal_form(G(td) * G(zb) - G(tc)), {den_zb}};
    x.images["dz"] = {G(dz), {den_z_q, den_z}};
    x.images["dzb"] = {G(dzb), {den_zb_q, den_zb}};

    const Element rom = mono(one(), {{rho, -1}}); // half unit: rho^-1/2
    x.sphere_matrix[ta] = p.normal_form(G(z) * rom);
    x.sphere_matrix[tb] = p.normal_form(-qp(1) * rom);
    x.sphere_matrix[tc] = rom;
    x.sphere_matrix[td] = p.normal_form(rom * G(zb));
    return x;
}

QScalar rhat_entry(int a, int b, int c, int d) {
    if (a == b) return (c == a && d == a) ? QScalar::q_power(1) : QScalar();
    if (c == b && d == a) return QScalar::one();
    if (c == a && d == b && a < b) return qs_lambda();
    return {};
}

SpacePreset cpqn(int n) {
    if (n < 1) throw std::domain_error("cpqn: need at least one coordinate");
    SpacePreset s;
    s.name = "cpq" + std::to_string(n);
    Presentation& p = s.pres;
    p.set_step_budget(50000000);

    const int i = p.add_generator({"i", 0, true, true});
    const int rho = p.add_generator({"rho", 0, true});
    std::vector<int> z(n), zb(n), dz(n), dzb(n);
    for (int a = 0; a < n; ++a) z[a] = p.add_generator({"z" + std::to_string(a + 1)});
    for (int a = 0; a < n; ++a) zb[a] = p.add_generator({"zb" + std::to_string(a + 1)});
    for (int a = 0; a < n; ++a) dz[a] = p.add_generator({"dz" + std::to_string(a + 1), 1});
    for (int a = 0; a < n; ++a) dzb[a] = p.add_generator({"dzb" + std::to_string(a + 1), 1});
    s.g_i = i;
    s.g_rho = rho;
    s.g_z = z;
    s.g_zb = zb;
    s.g_dz = dz;
    s.g_dzb = dzb;

    const QScalar lam = qs_lambda();

    // coordinate sector: the braiding solved for descending products
    for (int a = 0; a < n; ++a) {
        p.add_swap_rule(z[a], rho, +4);
        p.add_swap_rule(zb[a], rho, -4);
        for (int b = 0; b < a; ++b) {
            p.add_swap_rule(z[a], z[b], -2);
            p.add_swap_rule(zb[a], zb[b], +2);
        }
        for (int b = 0; b < n; ++b)
            if (b != a && b != n - 1) p.add_swap_rule(zb[a], z[b], -2);
    }
    // the top coordinate walks right past lower conjugates, so the
    // contraction pair below always becomes adjacent
    for (int d = 0; d < n - 1; ++d) p.add_swap_rule(z[n - 1], zb[d], +2);
    // diagonal contractions; the top pair is eliminated in favor of rho
    for (int a = 0; a < n; ++a) {
        std::vector<RhsTerm> rhs;
        if (a == n - 1) {
            rhs.push_back({TMono{qp(-2)}, {{rho, 0, 0, 1}}});
            rhs.push_back({TMono{-one()}, {}});
            for (int d = 0; d < n - 1; ++d)
                rhs.push_back({TMono{-one()}, {{z[d], 0, 0, 1}, {zb[d], 0, 0, 1}}});
        } else {
            rhs.push_back({TMono{qp(-2)}, {{z[a], 0, 0, 1}, {zb[a], 0, 0, 1}}});
            rhs.push_back({TMono{-qp(-1) * lam}, {}});
            for (int d = 0; d < a; ++d)
                rhs.push_back({TMono{-qp(-1) * lam}, {{z[d], 0, 0, 1}, {zb[d], 0, 0, 1}}});
        }
        p.add_pair_rule({zb[a], z[a], MatchKind::UnitBoth, SignCond::Any, SignCond::Any, rhs});
    }
    {
        std::vector<RhsTerm> rhs;
        rhs.push_back({TMono{one()}, {{rho, 0, 0, 1}}});
        rhs.push_back({TMono{-one()}, {}});
        for (int d = 0; d < n - 1; ++d)
            rhs.push_back({TMono{-one()}, {{z[d], 0, 0, 1}, {zb[d], 0, 0, 1}}});
        p.add_pair_rule({z[n - 1], zb[n - 1], MatchKind::UnitBoth, SignCond::Any,
                         SignCond::Any, rhs});
    }

    // one-forms against the coordinates: rho commutes with every form
    for (int a = 0; a < n; ++a) {
        p.add_swap_rule(dz[a], rho, 0);
        p.add_swap_rule(dzb[a], rho, 0);
        p.add_swap_rule(dz[a], z[a], -4);
        p.add_swap_rule(dzb[a], zb[a], +4);
        for (int b = a + 1; b < n; ++b) {
            p.add_swap_rule(dz[a], z[b], -2);
            p.add_swap_rule(dzb[a], zb[b], +2);
        }
        for (int b = 0; b < n; ++b) {
            if (b == a) continue;
            p.add_swap_rule(dz[a], zb[b], +2);
            p.add_swap_rule(dzb[a], z[b], -2);
        }
    }
    // triangular tails: a one-form passing a lower coordinate of its
    // own kind leaves a two-term correction, geometric in the power
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < a; ++b) {
            p.add_pair_rule(
                {dz[a], z[b], MatchKind::UnitLeft, SignCond::Any, SignCond::Any,
                 {{TMono{one(), 0, -2, 0}, {{z[b], 0, 1, 0}, {dz[a], 0, 0, 1}}},
                  {TMono{-qp(1), 0, -2, 0},
                   {{z[b], 0, 1, -1}, {z[a], 0, 0, 1}, {dz[b], 0, 0, 1}}},
                  {TMono{qp(1), 0, -6, 0},
                   {{z[b], 0, 1, -1}, {z[a], 0, 0, 1}, {dz[b], 0, 0, 1}}}}});
            p.add_pair_rule(
                {dzb[a], zb[b], MatchKind::UnitLeft, SignCond::Any, SignCond::Any,
                 {{TMono{one(), 0, 2, 0}, {{zb[b], 0, 1, 0}, {dzb[a], 0, 0, 1}}},
                  {TMono{qp(-1), 0, 6, 0},
                   {{zb[b], 0, 1, -1}, {zb[a], 0, 0, 1}, {dzb[b], 0, 0, 1}}},
                  {TMono{-qp(-1), 0, 2, 0},
                   {{zb[b], 0, 1, -1}, {zb[a], 0, 0, 1}, {dzb[b], 0, 0, 1}}}}});
        }
        // crossing the conjugate diagonal collects every earlier pair
        std::vector<RhsTerm> rhs;
        rhs.push_back({TMono{one(), 0, 4, 0}, {{zb[a], 0, 1, 0}, {dz[a], 0, 0, 1}}});
        for (int d = 0; d < a; ++d) {
            rhs.push_back({TMono{qp(2 * (a - d) - 1), 0, 6, 0},
                           {{zb[d], 0, 0, 1}, {zb[a], 0, 1, -1}, {dz[d], 0, 0, 1}}});
            rhs.push_back({TMono{-qp(2 * (a - d) - 1), 0, 2, 0},
                           {{zb[d], 0, 0, 1}, {zb[a], 0, 1, -1}, {dz[d], 0, 0, 1}}});
        }
        p.add_pair_rule(
            {dz[a], zb[a], MatchKind::UnitLeft, SignCond::Any, SignCond::Any, rhs});
        rhs.clear();
        rhs.push_back({TMono{one(), 0, -4, 0}, {{z[a], 0, 1, 0}, {dzb[a], 0, 0, 1}}});
        for (int d = 0; d < a; ++d) {
            rhs.push_back({TMono{-qp(1), 0, -2, 0},
                           {{z[d], 0, 0, 1}, {z[a], 0, 1, -1}, {dzb[d], 0, 0, 1}}});
            rhs.push_back({TMono{qp(1), 0, -6, 0},
                           {{z[d], 0, 0, 1}, {z[a], 0, 1, -1}, {dzb[d], 0, 0, 1}}});
        }
        p.add_pair_rule(
            {dzb[a], z[a], MatchKind::UnitLeft, SignCond::Any, SignCond::Any, rhs});
    }

    // wedge sector
    for (int a = 0; a < n; ++a) {
        p.add_power_rule({dz[a], 2, 2, {}});
        p.add_power_rule({dzb[a], 2, 2, {}});
        for (int b = 0; b < a; ++b) {
            p.add_pair_rule({dz[a], dz[b], MatchKind::UnitBoth, SignCond::Any,
                             SignCond::Any,
                             {{TMono{-qp(1)}, {{dz[b], 0, 0, 1}, {dz[a], 0, 0, 1}}}}});
            p.add_pair_rule(
                {dzb[a], dzb[b], MatchKind::UnitBoth, SignCond::Any, SignCond::Any,
                 {{TMono{-qp(-1)}, {{dzb[b], 0, 0, 1}, {dzb[a], 0, 0, 1}}}}});
        }
        for (int b = 0; b < n; ++b)
            if (b != a)
                p.add_pair_rule(
                    {dzb[a], dz[b], MatchKind::UnitBoth, SignCond::Any, SignCond::Any,
                     {{TMono{-qp(-1)}, {{dz[b], 0, 0, 1}, {dzb[a], 0, 0, 1}}}}});
        std::vector<RhsTerm> rhs;
        rhs.push_back({TMono{-qp(-2)}, {{dz[a], 0, 0, 1}, {dzb[a], 0, 0, 1}}});
        for (int d = 0; d < a; ++d)
            rhs.push_back({TMono{qp(-1) * lam}, {{dz[d], 0, 0, 1}, {dzb[d], 0, 0, 1}}});
        p.add_pair_rule(
            {dzb[a], dz[a], MatchKind::UnitBoth, SignCond::Any, SignCond::Any, rhs});
    }

    // imaginary unit
    p.add_power_rule({i, 2, 2, Element::scalar(-one())});
    p.add_power_rule({i, -1, -2, Element::scalar(-one())});
    p.finalize_constants();

    p.set_star(i, mono(-one(), {{i, 1}}));
    p.set_star(rho, Element::generator(rho));
    for (int a = 0; a < n; ++a) {
        p.set_star(z[a], Element::generator(zb[a]));
        p.set_star(zb[a], Element::generator(z[a]));
        p.set_star(dz[a], Element::generator(dzb[a]));
        p.set_star(dzb[a], Element::generator(dz[a]));
    }

    p.set_d_image(i, {});
    for (int a = 0; a < n; ++a) {
        p.set_d_image(z[a], Element::generator(dz[a]));
        p.set_d_image(zb[a], Element::generator(dzb[a]));
        p.set_d_image(dz[a], {});
        p.set_d_image(dzb[a], {});
        p.classify_form(dz[a], +1);
        p.classify_form(dzb[a], -1);
    }
    Element drho;
    for (int a = 0; a < n; ++a)
        drho += Element::generator(dz[a]) * Element::generator(zb[a]) +
                Element::generator(z[a]) * Element::generator(dzb[a]);
    p.set_d_image(rho, p.normal_form(drho));

    // deformed Fubini-Study metric and its Kahler form
    Metric g;
    g.n = n;
    g.complex_indices = true;
    g.up.assign(n, std::vector<Element>(n));
    g.down.assign(n, std::vector<Element>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const Element pair =
                Element::generator(zb[a]) * Element::generator(z[b]);
            Element upc = pair;
            Element downc = -(qp(2) * pair);
            if (a == b) {
                upc += Element::scalar(one());
                downc += Element::generator(rho);
            }
            g.up[a][b] = p.normal_form(mono(qp(1), {{rho, 1}}) * upc);
            g.down[a][b] = p.normal_form(mono(qp(-1), {{rho, -2}}) * downc);
        }
    s.metric = g;
    s.hodge_metric = g;
    Element kah;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            kah += Element::generator(dz[a]) * g.down[a][b] *
                   Element::generator(dzb[b]);
    s.kahler = p.normal_form(kah);
    for (int a = 0; a < n; ++a) s.basis.push_back(Element::generator(dz[a]));
    s.dimension = 2 * n;

    // closed-form connection and curvature: one coefficient tensor
    // q^-2 delta_ac delta_bd + q^(2(n-d)) delta_ab delta_cd contracted
    // against zb^c rho^-1 dz^d and q (g_ce dzb^e) dz^d respectively
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Element om = mono(qp(-2), {{zb[a], 1}, {rho, -1}, {dz[b], 1}});
            Element cu;
            for (int e = 0; e < n; ++e)
                cu += qp(-1) * g.down[a][e] *
                      mono(one(), {{dzb[e], 1}, {dz[b], 1}});
            if (a == b)
                for (int d = 0; d < n; ++d) {
                    om += mono(qp(2 * (n - d - 1)),
                               {{zb[d], 1}, {rho, -1}, {dz[d], 1}});
                    for (int e = 0; e < n; ++e)
                        cu += qp(2 * (n - d) - 1) * g.down[d][e] *
                              mono(one(), {{dzb[e], 1}, {dz[d], 1}});
                }
            const std::string suffix =
                "_" + std::to_string(a) + "_" + std::to_string(b);
            s.expected["connection" + suffix] = p.normal_form(-om);
            s.expected["curvature" + suffix] = p.normal_form(-cu);
        }

    // quarter-turn normalization per bidegree
    const Element iu = Element::generator(i);
    s.hodge_norms.assign(n + 1, std::vector<Element>(n + 1));
    for (int pp = 0; pp <= n; ++pp)
        for (int rr = 0; rr <= n; ++rr) {
            switch (((pp - rr) % 4 + 4) % 4) {
            case 0: s.hodge_norms[pp][rr] = Element::scalar(one()); break;
            case 1: s.hodge_norms[pp][rr] = iu; break;
            case 2: s.hodge_norms[pp][rr] = Element::scalar(-one()); break;
            case 3: s.hodge_norms[pp][rr] = -iu; break;
            }
        }
    return s;
}

SpacePreset two_sheeted() {
    SpacePreset s;
    s.name = "two-sheeted";
    Presentation& p = s.pres;
    const int e = p.add_generator({"e"});
    const int de = p.add_generator({"de", 1});
    p.add_power_rule({e, 2, 2, Element::scalar(one())});
    p.add_power_rule({de, 2, 2, {}});
    p.add_pair_rule({de, e, MatchKind::UnitBoth, SignCond::Any, SignCond::Any,
                     {{TMono{-one()}, {{e, 0, 0, 1}, {de, 0, 0, 1}}}}});
    p.set_star(e, Element::generator(e));
    p.set_star(de, Element::generator(de));
    p.set_d_image(e, Element::generator(de));
    p.set_d_image(de, {});
    s.metric.n = 0;
    s.dimension = 0;
    return s;
}

std::pair<QScalar, QScalar> z2_integrate(const Element& alpha, const SpacePreset& s) {
    const Presentation& p = s.pres;
    const int e = p.gen_index("e");
    const int de = p.gen_index("de");
    const Word w_de = {{de, 1}};
    const Word w_ede = {{e, 1}, {de, 1}};
    QScalar a, b;
    const Element reduced = p.normal_form(alpha);
    for (const auto& [w, coeff] : reduced.terms()) {
        if (w == w_de) a += coeff;
        else if (w == w_ede) b -= coeff; // de*e*b = -b*e*de
        else throw std::domain_error("not a one-form of the shape de*(a + b*e)");
    }
    return {a, b};
}

} // namespace qriemann
