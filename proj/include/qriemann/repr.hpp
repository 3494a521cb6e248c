#pragma once

#include "qriemann/distance.hpp"

#include <Eigen/Dense>

#include <complex>
#include <utility>
#include <vector>

namespace qriemann {

// Finite window of the irreducible representation on |0>, ..., |K_max>:
//   z|k>  = e^{i theta} (q^-2k - 1)^(1/2) |k-1>,
//   zb|k> = e^{-i theta} (q^-2(k+1) - 1)^(1/2) |k+1>,
//   rho   = diag(q^-2k).
// 1 + zb z = rho holds on every level; relations that raise past the
// window (z zb at k = K_max) break only there.
struct TruncatedRep {
    int K_max = 0;
    double q0 = 0, c0 = 0, theta = 0;
    Eigen::MatrixXcd z, zb, rho;
};

// Needs 0 < q0 < 1, c0 > 0, K_max >= 2.
TruncatedRep build_rep(double q0, double c0, double theta, int K_max);

// Doubled-space operator a (x) m, with the cotangent slot m acting on
// two stacked copies of the state space.
Eigen::MatrixXcd tensor_form(const Eigen::MatrixXcd& a, const Eigen::Matrix2cd& m);

// pi(dz) = sqrt(c(1+q^2)) rho (x) tau and its conjugate.
Eigen::MatrixXcd represent_dz(const TruncatedRep& rep);
Eigen::MatrixXcd represent_dzb(const TruncatedRep& rep);

// Dirac operator D = k_d (i, zb; -z, -i) with k_d = q lambda^-1
// sqrt(c(1+q^2)), chosen so [D, z] = pi(dz); |D|^-2 comes from the
// eigendecomposition of D^dagger D, which is k_d^2 diag(rho, q^-2 rho)
// except for the truncation-corrupted top entry of the second block.
struct DiracRep {
    int K_max = 0;
    double k_d = 0;
    Eigen::MatrixXcd dirac, dsq_inv;
    Eigen::Matrix2cd tau, tau_dag, iota, grading;
};

// Throws std::runtime_error when D^dagger D is singular on the window.
DiracRep build_dirac(const TruncatedRep& rep);

// Max entry residuals split by whether the entry touches the top level
// K_max; the boundary number is the truncation artifact.  Entries are
// normalized as |difference| / (1 + |target|) since the raw matrix
// elements grow like q^-2k up the window.
struct ResidualReport {
    double interior = 0;
    double boundary = 0;
};

// [D, z] against pi(dz) and [D, zb] against pi(dzb).
ResidualReport check_commutator_realization(const TruncatedRep& rep,
                                            const DiracRep& dirac);

// Per-level 2x2 trace of gamma (iota-block) |D|^-2: the integrand of
// an auxiliary field a (x) iota at level k is a_kk times this, and it
// cancels exactly (q - q^-1 q^2 = 0) wherever |D|^-2 follows the exact
// pattern, i.e. everywhere but the top level.
ResidualReport aux_vtrace(const DiracRep& dirac);

// Tr(gamma alpha |D|^-2) over the doubled window.
std::complex<double> trace_integrate(const DiracRep& dirac,
                                     const Eigen::MatrixXcd& two_form);

// <k| f(rho) |k> = f(q^-2k), for f a Laurent polynomial given as
// (power, coefficient) pairs or for the distance series.  Needs
// 0 <= k <= K_max.
double state_expectation(const TruncatedRep& rep,
                         const std::vector<std::pair<int, double>>& rho_powers, int k);
double state_expectation(const TruncatedRep& rep, const DistanceSeries& s, int k);

struct SanityReport {
    int trials = 0;
    int violations = 0;    // pairs where the diff beat the distance + tolerance
    double max_ratio = 0;  // sup of |<m|f|m> - <n|f|n>| / distance(m, n)
    double tolerance = 0;
};

// Samples random polynomials f in rho^-1 of the given degree, rescales
// each so the gradient norm |df|^2 stays <= 1 across the window, and
// confirms no expectation gap beats the distance.  The metric scale
// comes from the series; the representation provides the state grid.
SanityReport distance_sanity_search(const DistanceSeries& s, const TruncatedRep& rep,
                                    int trials, int degree_bound,
                                    double tolerance = 1e-9, unsigned seed = 12345);

} // namespace qriemann
