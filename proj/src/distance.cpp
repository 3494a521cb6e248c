#include "qriemann/distance.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace qriemann {

namespace {

QScalar one() { return QScalar::one(); }
QScalar qp(int e) { return QScalar::q_power(e); }

// a_n at a fixed q0, in the overflow-free form
//     a_n = -b_n (q0^-2 - 1) t/(1 - t),   t = q0^(2n+1),
// with b_n = (2n)!/(2^n n!)^2 carried through b_n/b_(n-1) = (2n-1)/(2n).
struct CoeffStream {
    double q0, lam2, b = 1, t;

    explicit CoeffStream(double q) : q0(q), lam2(1 / (q * q) - 1), t(q) {}

    double current() const { return -b * lam2 * t / (1 - t); }
    void advance(int n) {
        b *= (2.0 * n - 1) / (2.0 * n);
        t *= q0 * q0;
    }
};

struct Eval {
    double value;
    double tail;
};

// Sum of the series at rho with a geometric bound on the dropped
// tail: |term ratio| <= q0^2 x / (1 - t_next).
Eval evaluate(const DistanceSeries& s, double rho) {
    if (std::isinf(rho)) return {0.0, 0.0};
    if (!(rho >= 1))
        throw std::domain_error("series_value: rho below the spectrum");
    const double x = 1 / rho;
    CoeffStream cs(s.q0);
    double sum = 0, xp = 1, last = 0;
    for (int n = 0; n < s.n_terms; ++n) {
        if (n > 0) cs.advance(n);
        last = cs.current() * xp;
        sum += last;
        xp *= x;
    }
    const double scale = std::sqrt(s.prefactor_sq.eval_float(s.q0) * x);
    const double r = s.q0 * s.q0 * x / (1 - cs.t * s.q0 * s.q0);
    const double tail = r < 1 ? std::fabs(last) * r / (1 - r)
                              : std::numeric_limits<double>::infinity();
    return {scale * sum, scale * tail};
}

} // namespace

DistanceSeries solve_distance_series(double q0, const QScalar& c, int n_terms) {
    if (!(q0 > 0 && q0 < 1))
        throw std::domain_error("solve_distance_series: need 0 < q < 1");
    if (n_terms < 1)
        throw std::domain_error("solve_distance_series: need n_terms >= 1");
    DistanceSeries s;
    s.q0 = q0;
    s.c = c.eval_float(q0);
    if (!(s.c > 0))
        throw std::domain_error("solve_distance_series: need c > 0");
    s.n_terms = n_terms;
    s.prefactor_sq = (one() + qp(-2)) / (QScalar::integer(2) * c);
    const int window = std::min(n_terms, 64);
    Int bnum = 1, bden = 1;
    for (int n = 0; n < window; ++n) {
        if (n > 0) {
            bnum *= 2 * n - 1;
            bden *= 2 * n;
        }
        s.coeff.push_back(-(QScalar::rational(bnum, bden) / q_int(2 * n + 1, true)));
    }
    return s;
}

double series_value(const DistanceSeries& s, double rho) {
    return evaluate(s, rho).value;
}

double distance_states(int m, int n, const DistanceSeries& s, double tol) {
    if (m < n || n < 0)
        throw std::domain_error("distance_states: need m >= n >= 0");
    const Eval em = evaluate(s, std::pow(s.q0, -2.0 * m));
    const Eval en = evaluate(s, std::pow(s.q0, -2.0 * n));
    const double tail = em.tail + en.tail;
    if (!(tail <= tol))
        throw std::runtime_error("distance_states: truncation tail ~" +
                                 std::to_string(tail) +
                                 " exceeds tolerance; increase n_terms");
    return em.value - en.value;
}

double df_norm_sq(const DistanceSeries& s, int k) {
    if (k < 0) throw std::domain_error("df_norm_sq: need k >= 0");
    const double q2 = s.q0 * s.q0;
    const double lam = s.q0 - 1 / s.q0;
    const double factor = q2 * s.c / ((1 + 1 / q2) * lam * lam);
    const auto channel = [&](double sigma) {
        const double dF = series_value(s, q2 * sigma) - series_value(s, sigma);
        return (sigma - 1) * dF * dF;
    };
    // On |0> the z channel is annihilated; its weight (sigma - 1)
    // vanishes there anyway, so skip it rather than evaluate F below 1.
    double w = channel(std::pow(s.q0, -2.0 * (k + 1)));
    if (k > 0) w += channel(std::pow(s.q0, -2.0 * k));
    return factor * w;
}

TwoPointFrame braided_two_point() {
    TwoPointFrame f;
    Presentation& p = f.pres;
    f.g_rho = p.add_generator({"rho", 0, true});
    f.g_z = p.add_generator({"z"});
    f.g_zb = p.add_generator({"zb"});
    f.g_rho2 = p.add_generator({"rho'", 0, true});
    f.g_z2 = p.add_generator({"z'"});
    f.g_zb2 = p.add_generator({"zb'"});

    const int sector[2][3] = {{f.g_rho, f.g_z, f.g_zb},
                              {f.g_rho2, f.g_z2, f.g_zb2}};
    for (const auto& s : sector) {
        const int rho = s[0], z = s[1], zb = s[2];
        p.add_swap_rule(z, rho, -4);
        p.add_swap_rule(zb, rho, +4);
        p.add_pair_rule({zb, z, MatchKind::UnitBoth, SignCond::Any, SignCond::Any,
                         {{TMono{one()}, {{rho, 0, 0, 1}}}, {TMono{-one()}, {}}}});
        p.add_pair_rule({z, zb, MatchKind::UnitBoth, SignCond::Any, SignCond::Any,
                         {{TMono{qp(-2)}, {{rho, 0, 0, 1}}}, {TMono{-one()}, {}}}});
    }

    // The only mixed-sector rules.  Their star images reduce back to
    // each other, so the involution below is consistent.
    p.add_pair_rule({f.g_z2, f.g_z, MatchKind::UnitBoth, SignCond::Any,
                     SignCond::Any,
                     {{TMono{qp(-2)}, {{f.g_z, 0, 0, 1}, {f.g_z2, 0, 0, 1}}},
                      {TMono{qp(-1) * qs_lambda()}, {{f.g_z2, 0, 0, 2}}}}});
    p.add_pair_rule({f.g_zb2, f.g_zb, MatchKind::UnitBoth, SignCond::Any,
                     SignCond::Any,
                     {{TMono{qp(2)}, {{f.g_zb, 0, 0, 1}, {f.g_zb2, 0, 0, 1}}},
                      {TMono{-qp(1) * qs_lambda()}, {{f.g_zb2, 0, 0, 2}}}}});
    p.finalize_constants();

    p.set_star(f.g_rho, Element::generator(f.g_rho));
    p.set_star(f.g_z, Element::generator(f.g_zb));
    p.set_star(f.g_zb, Element::generator(f.g_z));
    p.set_star(f.g_rho2, Element::generator(f.g_rho2));
    p.set_star(f.g_z2, Element::generator(f.g_zb2));
    p.set_star(f.g_zb2, Element::generator(f.g_z2));
    return f;
}

CoactionImage rho_doubleprime(const TwoPointFrame& f) {
    const auto gen = [](int g) { return Element::generator(g); };
    CoactionImage out;
    out.num = f.pres.normal_form(gen(f.g_rho) * gen(f.g_rho2));
    out.den = {f.pres.normal_form(gen(f.g_z) - gen(f.g_z2)),
               f.pres.normal_form(gen(f.g_zb) - gen(f.g_zb2))};
    return out;
}

} // namespace qriemann
