#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qriemann/element.hpp"

#include <random>
#include <stdexcept>

using namespace qriemann;

namespace {

enum Gen { C, I, RHO, Z, ZB, DZ, DZB, SIG };

const std::vector<Generator> kGens = {
    {"c", 0, true, true, false},
    {"i", 0, true, true, false},
    {"rho", 0, true, false, false},
    {"z", 0, false, false, false},
    {"zb", 0, false, false, false},
    {"dz", 1, false, false, false},
    {"dzb", 1, false, false, false},
    {"sig", 0, true, false, true},
};

Element g(int gen, int exp = 1) { return Element::generator(gen, exp); }

Element random_element(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 3);
    std::uniform_int_distribution<int> nfact(0, 3);
    std::uniform_int_distribution<int> gen(0, 7);
    std::uniform_int_distribution<int> ex(-2, 2);
    std::uniform_int_distribution<int> co(-4, 4);
    Element e;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Word w;
        int m = nfact(rng);
        for (int f = 0; f < m; ++f) {
            int x = ex(rng);
            if (x == 0) continue;
            w = word_concat(w, Word{{gen(rng), x}});
        }
        e.add_term(w, QScalar::integer(co(rng)) * QScalar::q_power(ex(rng)));
    }
    return e;
}

} // namespace

TEST_CASE("word concatenation merges and cancels") {
    Word a = {{Z, 1}, {RHO, 2}};
    Word b = {{RHO, -2}, {Z, 1}};
    CHECK(word_concat(a, b) == Word{{Z, 2}});
    CHECK(word_concat(Word{{RHO, 1}}, Word{{RHO, -1}}) == Word{});
    CHECK(word_concat(Word{}, a) == a);
    CHECK(word_concat(a, Word{}) == a);
    // cascade through several cancellations
    Word c1 = {{Z, 1}, {RHO, 1}, {ZB, 1}};
    Word c2 = {{ZB, -1}, {RHO, -1}, {Z, 1}};
    CHECK(word_concat(c1, c2) == Word{{Z, 2}});
}

TEST_CASE("unit length and degree") {
    Word w = {{RHO, -2}, {DZ, 1}, {Z, 3}};
    CHECK(word_unit_length(w) == 6);
    CHECK(word_degree(w, kGens) == 1);
    CHECK(word_degree(Word{{DZ, 1}, {DZB, 1}}, kGens) == 2);
    CHECK(word_degree(Word{}, kGens) == 0);
}

TEST_CASE("word order is graded") {
    WordLess lt;
    CHECK(lt(Word{}, Word{{Z, 1}}));
    CHECK(lt(Word{{Z, 1}}, Word{{Z, 2}}));
    CHECK(lt(Word{{Z, 1}}, Word{{DZ, 1}}));      // smaller generator index first
    CHECK(lt(Word{{RHO, 1}}, Word{{RHO, -1}}));  // positive exponent first
    CHECK(lt(Word{{RHO, -1}}, Word{{Z, 2}}));    // length decides before letters
    CHECK(!lt(Word{{Z, 1}}, Word{{Z, 1}}));
    // prefix expansion: z*zb vs z^2 compares second letter
    CHECK(lt(Word{{Z, 2}}, Word{{Z, 1}, {ZB, 1}}));
}

TEST_CASE("arithmetic basics") {
    Element zero;
    CHECK(zero.is_zero());
    CHECK(g(Z) + g(Z) == QScalar::integer(2) * g(Z));
    CHECK((g(Z) - g(Z)).is_zero());
    CHECK(g(Z) * Element::scalar(QScalar()) == Element());
    CHECK(g(RHO) * g(RHO, -1) == Element::scalar(QScalar::one()));
    CHECK(g(Z) * g(ZB) != g(ZB) * g(Z)); // free algebra is noncommutative
    Element p = g(Z) + Element::scalar(QScalar::one());
    CHECK(p.pow(0) == Element::scalar(QScalar::one()));
    CHECK(p.pow(3) == p * p * p);
    CHECK(p.pow(3).coeff(Word{{Z, 2}}) == QScalar::integer(3));
    CHECK_THROWS_AS(p.pow(-1), std::domain_error);
}

TEST_CASE("ring axioms on random elements") {
    std::mt19937 rng(4091);
    for (int trial = 0; trial < 150; ++trial) {
        Element a = random_element(rng);
        Element b = random_element(rng);
        Element c = random_element(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("single-term inverse") {
    Element m = Element::monomial(QScalar::q_power(2),
                                  Word{{RHO, 2}, {C, -1}});
    Element inv = m.inv_single(kGens);
    CHECK(inv == Element::monomial(QScalar::q_power(-2), Word{{C, 1}, {RHO, -2}}));
    CHECK(m * inv == Element::scalar(QScalar::one()));
    CHECK_THROWS_AS(g(Z).inv_single(kGens), std::domain_error);
    Element sum = g(RHO) + Element::scalar(QScalar::one());
    CHECK_THROWS_AS(sum.inv_single(kGens), std::domain_error);
}

TEST_CASE("printing") {
    CHECK(Element().to_string(kGens) == "0");
    CHECK(Element::scalar(QScalar::one()).to_string(kGens) == "1");
    CHECK(Element::scalar(QScalar::integer(-1)).to_string(kGens) == "-1");
    CHECK(g(Z).to_string(kGens) == "z");
    CHECK((-g(Z)).to_string(kGens) == "-z");
    CHECK((g(RHO) - Element::scalar(QScalar::one())).to_string(kGens) == "rho - 1");
    Element tower = Element::scalar(QScalar::one()) + g(Z) + g(Z, 2);
    CHECK(tower.to_string(kGens) == "z^2 + z + 1");
    Element omega = Element::monomial(
        -QScalar::q_power(2) * (QScalar::one() + QScalar::q_power(2)),
        Word{{DZ, 1}, {RHO, -1}, {ZB, 1}});
    CHECK(omega.to_string(kGens) == "-q^2*(1+q^2)*dz*rho^-1*zb");
    // central constants come before the numeric coefficient
    Element curv = Element::monomial(
        QScalar::q_power(2) * (QScalar::one() + QScalar::q_power(2)),
        Word{{C, 1}});
    CHECK(curv.to_string(kGens) == "c*q^2*(1+q^2)");
    Element halves = Element::monomial(QScalar::one(), Word{{SIG, 1}}) +
                     Element::monomial(QScalar::one(), Word{{SIG, 3}});
    CHECK(halves.to_string(kGens) == "sig^(3/2) + sig^(1/2)");
    CHECK(Element::generator(SIG, 2).to_string(kGens) == "sig");
    CHECK(Element::generator(SIG, -2).to_string(kGens) == "sig^-1");
    CHECK(Element::generator(SIG, -1).to_string(kGens) == "sig^(-1/2)");
    // descending word order: zb has the larger generator index
    Element mixedsign = g(Z) - g(ZB);
    CHECK(mixedsign.to_string(kGens) == "-zb + z");
}
