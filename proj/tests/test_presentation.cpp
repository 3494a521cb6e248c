#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qriemann/presentation.hpp"

#include <random>
#include <stdexcept>

using namespace qriemann;

namespace {

Element g(int gen, int exp = 1) { return Element::generator(gen, exp); }
Element sc(QScalar v) { return Element::scalar(std::move(v)); }
QScalar qp(int e) { return QScalar::q_power(e); }

// Two generators x, y with y x = q x y.
Presentation q_plane() {
    Presentation p;
    p.add_generator({"x"});
    p.add_generator({"y"});
    p.add_swap_rule(1, 0, 2); // y^m x^n -> q^{mn} x^n y^m
    return p;
}

// Weyl pair: b a = a b + 1.
Presentation weyl() {
    Presentation p;
    p.add_generator({"a"});
    p.add_generator({"b"});
    PairRule r;
    r.gl = 1;
    r.gr = 0;
    r.kind = MatchKind::UnitBoth;
    r.rhs = {{{QScalar::one()}, {{0, 0, 0, 1}, {1, 0, 0, 1}}},
             {{QScalar::one()}, {}}};
    p.add_pair_rule(std::move(r));
    return p;
}

// One function x, one form dx, one operator letter D realizing
// d = dx D with D x^n = [n]_{1/q} x^{n-1} + q^{-2n} x^n D and the
// compatible bimodule rule dx x^n = q^{2n} x^n dx.
Presentation line_calculus() {
    Presentation p;
    p.add_generator({"x"});
    p.add_generator({"dx", 1});
    p.add_generator({"D"});
    p.add_swap_rule(1, 0, 4);                       // dx x^n -> q^{2n} x^n dx
    p.add_power_rule({1, 2, 2, Element()});         // dx^2 -> 0
    QScalar a0 = (qp(-2) - QScalar::one()).inv();   // 1/(q^-2 - 1)
    PairRule dr;
    dr.gl = 2;
    dr.gr = 0;
    dr.kind = MatchKind::UnitLeft;
    dr.sl = SignCond::Pos;
    dr.rhs = {{{a0, 0, -4, 0}, {{0, 0, 1, -1}}},
              {{-a0}, {{0, 0, 1, -1}}},
              {{QScalar::one(), 0, -4, 0}, {{0, 0, 1, 0}, {2, 0, 0, 1}}}};
    p.add_pair_rule(std::move(dr));
    p.set_d_operator(1, 2, -1, -1);
    p.classify_form(1, +1);
    return p;
}

// Sign-graded pair e, de with e^2 = 1 and de e = -e de.
Presentation sheet() {
    Presentation p;
    p.add_generator({"e"});
    p.add_generator({"de", 1});
    p.add_power_rule({0, 2, 2, sc(QScalar::one())});
    p.add_power_rule({1, 2, 2, Element()});
    PairRule r;
    r.gl = 1;
    r.gr = 0;
    r.kind = MatchKind::UnitBoth;
    r.rhs = {{{-QScalar::one()}, {{0, 0, 0, 1}, {1, 0, 0, 1}}}};
    p.add_pair_rule(std::move(r));
    p.set_d_image(0, g(1));
    p.set_d_image(1, Element());
    p.set_star(0, g(0));
    p.set_star(1, g(1));
    return p;
}

} // namespace

TEST_CASE("full swap rule handles powers and inverses") {
    Presentation p = q_plane();
    CHECK(p.normal_form(g(1) * g(0)) == QScalar::q_power(1) * (g(0) * g(1)));
    CHECK(p.normal_form(g(1, 2) * g(0)) == qp(2) * (g(0) * g(1, 2)));
    CHECK(p.normal_form(g(1, 3) * g(0, 2)) == qp(6) * (g(0, 2) * g(1, 3)));
    CHECK(p.word_is_normal(Word{{0, 2}, {1, 1}}));
    CHECK(!p.word_is_normal(Word{{1, 1}, {0, 2}}));
    // already sorted words are untouched
    Element sorted = g(0, 2) * g(1, 5);
    CHECK(p.normal_form(sorted) == sorted);
}

TEST_CASE("contact rule reproduces the Weyl ladder") {
    Presentation p = weyl();
    // b a^n = a^n b + n a^(n-1)
    for (int n = 1; n <= 5; ++n) {
        Element nf = p.normal_form(g(1) * g(0, n));
        Element expect = g(0, n) * g(1) +
                         QScalar::integer(n) * (n == 1 ? sc(QScalar::one()) : g(0, n - 1));
        CHECK(nf == expect);
    }
    // b^2 a = a b^2 + 2 b
    CHECK(p.normal_form(g(1, 2) * g(0)) ==
          g(0) * g(1, 2) + QScalar::integer(2) * g(1));
}

TEST_CASE("power rules") {
    Presentation p;
    p.add_generator({"e"});
    p.add_generator({"t", 0, true});
    p.add_power_rule({0, 2, 2, sc(QScalar::one())});   // e^2 -> 1
    p.add_power_rule({1, 2, 2, sc(-QScalar::one())});  // t^2 -> -1
    p.add_power_rule({1, -1, -2, sc(-QScalar::one())}); // t^-1 -> -t
    CHECK(p.normal_form(g(0, 2)) == sc(QScalar::one()));
    CHECK(p.normal_form(g(0, 5)) == g(0));
    CHECK(p.normal_form(g(1, 2)) == sc(-QScalar::one()));
    CHECK(p.normal_form(g(1, 3)) == -g(1));
    CHECK(p.normal_form(g(1, 4)) == sc(QScalar::one()));
    CHECK(p.normal_form(g(1, -1)) == -g(1));
    CHECK(p.normal_form(g(1, -3)) == g(1));
    CHECK(p.normal_form(g(1, -1) * g(1)) == sc(QScalar::one()));
}

TEST_CASE("central constants sort to the left") {
    Presentation p;
    p.add_generator({"c", 0, true, true});
    p.add_generator({"i", 0, true, true});
    p.add_generator({"z"});
    p.add_power_rule({1, 2, 2, sc(-QScalar::one())});
    p.add_power_rule({1, -1, -2, sc(-QScalar::one())});
    p.finalize_constants();
    CHECK(p.normal_form(g(2) * g(0, 2)) == g(0, 2) * g(2));
    CHECK(p.normal_form(g(2) * g(1) * g(1)) == -g(2));
    CHECK(p.normal_form(g(1) * g(0)) == g(0) * g(1));
    CHECK(p.normal_form(g(2) * g(1) * g(0, -1) * g(1)) == -g(0, -1) * g(2));
    CHECK(p.print(p.normal_form(g(2) * g(1, 2))) == "-z");
}

TEST_CASE("sign-dependent rule dispatch") {
    Presentation p;
    p.add_generator({"r", 0, true});
    p.add_generator({"u", 0, true});
    PairRule pos;
    pos.gl = 0;
    pos.gr = 1;
    pos.kind = MatchKind::Full;
    pos.sl = SignCond::Any;
    pos.sr = SignCond::Pos;
    pos.rhs = {{{QScalar::integer(3)}, {{1, 0, 1, 0}, {0, 1, 0, 0}}}};
    p.add_pair_rule(pos);
    PairRule neg = pos;
    neg.sr = SignCond::Neg;
    neg.rhs = {{{QScalar::integer(2)}, {{1, 0, 1, 0}, {0, 1, 0, 0}}}};
    p.add_pair_rule(neg);
    CHECK(p.normal_form(g(0) * g(1)) == QScalar::integer(3) * (g(1) * g(0)));
    CHECK(p.normal_form(g(0) * g(1, -1)) == QScalar::integer(2) * (g(1, -1) * g(0)));
    PairRule clash = pos;
    clash.sr = SignCond::Any;
    CHECK_THROWS_AS(p.add_pair_rule(clash), std::logic_error);
}

TEST_CASE("step budget aborts cyclic systems") {
    Presentation p;
    p.add_generator({"a"});
    p.add_generator({"b"});
    p.add_swap_rule(0, 1, 0);
    p.add_swap_rule(1, 0, 0);
    p.set_step_budget(100);
    CHECK_THROWS_AS(p.normal_form(g(0) * g(1)), std::runtime_error);
}

TEST_CASE("star is an antimultiplicative involution") {
    Presentation p;
    p.add_generator({"i", 0, true, true});
    p.add_generator({"rho", 0, true});
    p.add_generator({"z"});
    p.add_generator({"zb"});
    p.set_star(0, -g(0));
    p.set_star(1, g(1));
    p.set_star(2, g(3));
    p.set_star(3, g(2));
    CHECK(p.star(g(2)) == g(3));
    CHECK(p.star(qp(2) * g(2) * g(3)) == qp(2) * (g(2) * g(3)));
    CHECK(p.star(g(1, -2) * g(2)) == g(3) * g(1, -2));
    CHECK(p.star(g(0)) == -g(0));
    CHECK(p.star(g(0, -1)) == -g(0, -1));
    std::mt19937 rng(551);
    std::uniform_int_distribution<int> gen(0, 3);
    std::uniform_int_distribution<int> len(0, 4);
    for (int t = 0; t < 100; ++t) {
        Word w;
        int m = len(rng);
        for (int k = 0; k < m; ++k) {
            int gi = gen(rng);
            int e = (gi <= 1) ? (rng() % 2 ? 1 : -1) : 1;
            word_push(w, {gi, e});
        }
        Element a = Element::monomial(qp(static_cast<int>(rng() % 5) - 2), w);
        Element b = Element::monomial(QScalar::one() + qp(1), Word{{2, 1}});
        CHECK(p.star(p.star(a)) == a);
        CHECK(p.star(a * b) == p.star(b) * p.star(a));
    }
}

TEST_CASE("derivation from operator letters") {
    Presentation p = line_calculus();
    Element x = g(0), dx = g(1);
    CHECK(p.d(x) == dx);
    CHECK(p.d(x.pow(2)) == (QScalar::one() + qp(2)) * (x * dx));
    // [3]_q = 1 + q^2 + q^4 appears after commuting dx through
    CHECK(p.d(x.pow(3)) ==
          (QScalar::one() + qp(2) + qp(4)) * (x.pow(2) * dx));
    // graded Leibniz across a split of the same word
    for (int n = 2; n <= 5; ++n) {
        Element lhs = p.d(g(0, n));
        Element rhs = p.normal_form(p.d(g(0)) * g(0, n - 1) + g(0) * p.d(g(0, n - 1)));
        CHECK(lhs == rhs);
    }
    // d^2 = 0 thanks to dx^2 -> 0
    for (int n = 1; n <= 4; ++n) CHECK(p.d(p.d(g(0, n))).is_zero());
    CHECK(p.d(sc(qp(3))).is_zero());
    // holomorphic part is everything here
    CHECK(p.d_hol(x.pow(2)) == p.d(x.pow(2)));
    CHECK(p.d_antihol(x.pow(2)).is_zero());
}

TEST_CASE("derivation from explicit images") {
    Presentation p = sheet();
    Element e = g(0), de = g(1);
    CHECK(p.d(e) == de);
    CHECK(p.d(e * e).is_zero());       // matches d(1) = 0
    CHECK(p.d(e.pow(3)) == de);        // e^3 reduces to e
    CHECK(p.d(p.d(e)).is_zero());
    CHECK(p.d(e * de).is_zero());      // de e de = -e de de = 0
    CHECK(p.normal_form(de * e) == -(e * de));
    CHECK(p.normal_form(de * e * de).is_zero());
    CHECK(p.star(p.star(e * de)) == e * de);
}

TEST_CASE("confluence checker") {
    CHECK(check_confluence(q_plane()).violations.empty());
    CHECK(check_confluence(weyl()).violations.empty());
    CHECK(check_confluence(line_calculus()).violations.empty());
    CHECK(check_confluence(sheet()).violations.empty());
    CHECK(check_confluence(sheet()).words_checked > 0);

    // deliberately broken: f g = 2 g f conflicts with f^2 = 1
    Presentation bad;
    bad.add_generator({"f"});
    bad.add_generator({"g"});
    bad.add_power_rule({0, 2, 2, sc(QScalar::one())});
    PairRule r;
    r.gl = 0;
    r.gr = 1;
    r.kind = MatchKind::Full;
    r.rhs = {{{QScalar::integer(2)}, {{1, 0, 1, 0}, {0, 1, 0, 0}}}};
    bad.add_pair_rule(std::move(r));
    CHECK(!check_confluence(bad).violations.empty());
}

TEST_CASE("orientation advisory") {
    CHECK(orientation_warnings(q_plane()).empty());
    CHECK(orientation_warnings(weyl()).empty());
    Presentation grow;
    grow.add_generator({"a"});
    grow.add_generator({"b"});
    PairRule r;
    r.gl = 0;
    r.gr = 1;
    r.kind = MatchKind::UnitBoth;
    r.rhs = {{{QScalar::one()}, {{1, 0, 0, 1}, {0, 0, 0, 2}}}}; // a b -> b a^2
    grow.add_pair_rule(std::move(r));
    CHECK(orientation_warnings(grow).size() == 1);
}
