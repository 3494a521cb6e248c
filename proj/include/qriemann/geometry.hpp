#pragma once

#include "qriemann/presentation.hpp"

#include <map>
#include <set>
#include <vector>

namespace qriemann {

// Frame metric.  With complex_indices the matrices carry one barred
// and one unbarred label: up[a][b] = g^{a-bar b} (first index barred),
// down[a][b] = g_{a b-bar}, both n x n over the holomorphic labels.
// Without it the labels run over the doubled frame and up/down are
// plain g^{ab}, g_{ab}.
struct Metric {
    int n = 1;
    bool complex_indices = true;
    std::vector<std::vector<Element>> up, down;
};

struct Connection {
    std::vector<std::vector<Element>> omega; // omega[a][b] = w_a^b
};

// Hodge star: a table on normally ordered form-letter words, extended
// to arbitrary elements as a bimodule map.  Holomorphic coordinates
// and neutral functions pass through on the left, antiholomorphic
// coordinates on the right.
struct HodgeStar {
    std::map<Word, Element, WordLess> table;
    std::set<int> antihol_coords;
};

struct GeometryResult {
    Connection connection;
    std::vector<std::vector<Element>> curvature;
    std::vector<Element> torsion;
    Element scalar;
    std::vector<std::vector<Element>> ricci;
};

// w_a^b = -g_{a cbar} d_hol(g^{cbar b}).  Real-indexed metrics must be
// block diagonal over the doubled frame; the barred block solves its
// metricity condition with the roles of the two differentials swapped.
Connection connection_from_metric(const Metric& g, const Presentation& p);

// dg^{ab} + w^{ab} + (w^{ba})* with w^{ab} = g^{ac} w_c^b; zero iff
// the connection is metric.
std::vector<std::vector<Element>>
metricity_residual(const Metric& g, const Connection& w, const Presentation& p);

// R_a^b = d w_a^b - w_a^c w_c^b.
std::vector<std::vector<Element>> curvature(const Connection& w,
                                            const Presentation& p);

// T^a = d xi^a - xi^b w_b^a.
std::vector<Element> torsion(const Connection& w,
                             const std::vector<Element>& basis,
                             const Presentation& p);

// dR_a^b - w_a^c R_c^b + R_a^c w_c^b.
std::vector<std::vector<Element>>
bianchi_residual(const Connection& w,
                 const std::vector<std::vector<Element>>& R,
                 const Presentation& p);

// dT^a - xi^b R_b^a.
std::vector<Element> consistency_residual(const std::vector<Element>& T,
                                          const std::vector<std::vector<Element>>& R,
                                          const std::vector<Element>& basis,
                                          const Presentation& p);

// alpha_a = g_{ab} (alpha^b)*  and  alpha^a = (alpha_b)* g^{ba}.
std::vector<Element> lower_index(const std::vector<Element>& v, const Metric& g,
                                 const Presentation& p);
std::vector<Element> raise_index(const std::vector<Element>& v, const Metric& g,
                                 const Presentation& p);

// Builds the star table from a real central Kaehler form K = dz^a
// g_{a bbar} dzbar^bbar: the purely holomorphic and antiholomorphic
// images are right/left multiplication by powers of K, mixed basis
// monomials patch the two halves around the inverse volume function,
// and norms[p][r] rescales each bidegree.  Throws when K fails the
// reality or centrality precondition, naming the violating generator.
HodgeStar build_hodge_from_kahler(const Element& K, const Metric& g,
                                  const Presentation& p,
                                  const std::vector<std::vector<Element>>& norms = {});

Element hodge_apply(const HodgeStar& h, const Element& e, const Presentation& p);

// (-1)^(dim+1) * star(xi^a (star R_a^b) xi_b).
Element scalar_curvature(const std::vector<std::vector<Element>>& R,
                         const HodgeStar& h, const std::vector<Element>& basis,
                         const Metric& g, int dim, const Presentation& p);

// Left: star((star R_a^c) xi_c xi^b).  Right: star(xi_a xi^c (star R_c^b)).
// The two are inequivalent; callers pick.
enum class RicciVariant { Left, Right };

std::vector<std::vector<Element>> ricci(const std::vector<std::vector<Element>>& R,
                                        const HodgeStar& h,
                                        const std::vector<Element>& basis,
                                        const Metric& g, const Presentation& p,
                                        RicciVariant variant);

// delta(alpha) = -star(d(star(alpha))).
Element codifferential(const Element& a, const HodgeStar& h, const Presentation& p);

// -normalization * (d + delta)^2 f.
Element laplacian(const Element& f, const HodgeStar& h, const Presentation& p,
                  const QScalar& normalization);

// delta(deltabar(V)) - K for the truncated potential
// V = scale * sum_{n=1..n_trunc} rho^-n / [n]_(1/q); the residual is
// the telescoping tail.
Element kahler_potential_residual(const Element& K, const Element& scale,
                                  int rho_gen, int n_trunc,
                                  const Presentation& p);

} // namespace qriemann
