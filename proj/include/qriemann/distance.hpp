#pragma once

#include "qriemann/spaces.hpp"

#include <vector>

namespace qriemann {

// Solution of the sphere's spectral-distance problem: the function
// F(rho) with |dF|^2 = 1, fixed up to additions that are invisible on
// the spectrum {q^-2k}.
//
//     F(rho) = sqrt((1+q^-2)/(2c)) * sum_n a_n rho^(-n-1/2),
//     a_n    = -(2n)!/((2^n n!)^2 [n+1/2]),
//
// with the bracket [n+1/2] = (q^-(2n+1) - 1)/(q^-2 - 1).  For q < 1
// the a_n are negative, F climbs from -pi/2-like values to F(inf) = 0
// and state distances F(q^-2m) - F(q^-2n), m >= n, are nonnegative.
// Coefficients are exact in s; summation is floating point with a
// geometric tail bound.
struct DistanceSeries {
    QScalar prefactor_sq;       // (1 + q^-2)/(2c), the square of the prefactor
    std::vector<QScalar> coeff; // exact leading window of a_n
    int n_terms = 0;            // numeric summation length, >= coeff.size()
    double q0 = 0;
    double c = 0;
};

// Needs 0 < q0 < 1, c > 0 at q0, n_terms >= 1.  The exact window
// holds min(n_terms, 64) coefficients; numeric evaluation recurses
// through all n_terms.
DistanceSeries solve_distance_series(double q0, const QScalar& c, int n_terms);

// F at rho >= 1; +infinity gives 0 exactly.
double series_value(const DistanceSeries& s, double rho);

// F(q^-2m) - F(q^-2n) for m >= n >= 0.  Throws std::runtime_error
// with the bound estimate when the truncation tail exceeds tol.
double distance_states(int m, int n, const DistanceSeries& s, double tol = 1e-8);

// Eigenvalue of |dF|^2 on |k>: computed from the two-sided difference
// form, 1 for interior k and 1/2 at k = 0 where z kills the state.
double df_norm_sq(const DistanceSeries& s, int k);

// Two independent points on one sphere.  Only the braiding
//     z' z = q^-2 z z' + q^-1 lambda z'^2
// and its involution image relate the two coordinate sectors; other
// mixed words are canonical as written.
struct TwoPointFrame {
    Presentation pres;
    int g_rho = -1, g_z = -1, g_zb = -1;
    int g_rho2 = -1, g_z2 = -1, g_zb2 = -1;
};
TwoPointFrame braided_two_point();

// rho'' = rho rho' (z - z')^-1 (zb - zb')^-1 as a numerator with
// ordered right-denominator factors; |F(rho'')| is the distance
// between the two generic points.
CoactionImage rho_doubleprime(const TwoPointFrame& f);

} // namespace qriemann
