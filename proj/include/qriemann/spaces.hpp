#pragma once

#include "qriemann/geometry.hpp"
#include "qriemann/presentation.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qriemann {

// A fully wired quantum space: presentation plus the geometric data
// the paper-level computations need, and the expected closed forms
// the acceptance checks compare against.
struct SpacePreset {
    std::string name;
    Presentation pres;

    Metric metric;        // drives the connection (variant-dependent)
    Metric hodge_metric;  // always the mixed-index metric entering K
    std::vector<Element> basis;
    Element kahler;
    std::vector<std::vector<Element>> hodge_norms;
    int dimension = 2; // real dimension, sign of the curvature scalar
    Element kpot_scale;   // zero when no potential series is wired

    std::map<std::string, Element> expected;

    // generator handles; -1 or empty when the space lacks them
    int g_c = -1, g_i = -1, g_rho = -1;
    std::vector<int> g_z, g_zb, g_dz, g_dzb;
    int g_del = -1, g_delb = -1;
};

// The standard Podles-sphere calculus with central scale c.  Complex
// treats dz alone as the frame; Riemannian doubles it to {dz, dzbar}
// with the rescaled diagonal metric.
enum class Sq2Variant { Complex, Riemannian };
SpacePreset sq2(Sq2Variant variant);

// Deformed projective space on n coordinates with the Fubini-Study
// metric; rho = 1 + sum_a z^a zb^a is kept atomic and the top
// coordinate pair contracts to it.
SpacePreset cpqn(int n);

// Braiding coefficient behind the cpqn coordinate relations: q on a
// coinciding index pair, a plain swap otherwise, and the lambda
// correction on ordered pairs.  The tests pin the convention through
// the Hecke and braid identities instead of a matrix literal.
QScalar rhat_entry(int a, int b, int c, int d);

// A coordinate image under the Moebius coaction: num times the right
// inverses of the den factors, in order.
struct CoactionImage {
    Element num;
    std::vector<Element> den;
};

// The sphere with a left translation matrix (a, b; c, d) adjoined:
// entries commute with the coordinate sector, obey the exchange
// relations ab = q ba, ac = q ca, bd = q db, cd = q dc, bc = cb,
// ad - da = (q - 1/q) bc with unit quantum determinant ad - q bc = 1,
// and act by z -> (az+b)(cz+d)^-1.  rho carries half powers here so
// sphere_matrix can hold the unitary built from the sphere itself,
//   (z rho^-1/2, -q rho^-1/2; rho^-1/2, rho^-1/2 zb).
// The derivation letters and the scale work in integer rho powers
// only, so they stay behind in the base preset.
struct Suq2Coaction {
    Presentation pres;
    int g_a = -1, g_b = -1, g_c = -1, g_d = -1;
    int g_rho = -1, g_z = -1, g_zb = -1, g_dz = -1, g_dzb = -1;
    std::map<std::string, CoactionImage> images; // keys z, zb, dz, dzb
    std::map<int, Element> sphere_matrix;        // keyed by g_a..g_d
};
Suq2Coaction adjoin_suq2_coaction(const SpacePreset& sphere);

// Two points and the universal calculus on them.
SpacePreset two_sheeted();

// Coefficients (a, b) of a one-form written as de*(a + b*e); throws
// on anything of other degree.
std::pair<QScalar, QScalar> z2_integrate(const Element& alpha, const SpacePreset& s);

} // namespace qriemann
