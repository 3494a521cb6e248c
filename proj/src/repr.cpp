#include "qriemann/repr.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace qriemann {

namespace {

using cplx = std::complex<double>;

double spectrum(double q0, int k) { return std::pow(q0, -2 * k); }

} // namespace

TruncatedRep build_rep(double q0, double c0, double theta, int K_max) {
    if (!(q0 > 0.0 && q0 < 1.0))
        throw std::domain_error("build_rep: q must lie in (0, 1)");
    if (!(c0 > 0.0))
        throw std::domain_error("build_rep: c must be positive");
    if (K_max < 2)
        throw std::domain_error("build_rep: window needs K_max >= 2");

    const int n = K_max + 1;
    TruncatedRep rep{K_max, q0, c0, theta,
                     Eigen::MatrixXcd::Zero(n, n),
                     Eigen::MatrixXcd::Zero(n, n),
                     Eigen::MatrixXcd::Zero(n, n)};
    const cplx phase{std::cos(theta), std::sin(theta)};
    for (int k = 0; k < n; ++k) {
        rep.rho(k, k) = spectrum(q0, k);
        if (k >= 1)
            rep.z(k - 1, k) = phase * std::sqrt(spectrum(q0, k) - 1.0);
        if (k + 1 < n)
            rep.zb(k + 1, k) = std::conj(phase) * std::sqrt(spectrum(q0, k + 1) - 1.0);
    }
    return rep;
}

Eigen::MatrixXcd tensor_form(const Eigen::MatrixXcd& a, const Eigen::Matrix2cd& m) {
    const auto n = a.rows();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
    for (int v = 0; v < 2; ++v)
        for (int w = 0; w < 2; ++w)
            out.block(v * n, w * n, n, n) = m(v, w) * a;
    return out;
}

namespace {

Eigen::Matrix2cd tau_matrix() {
    Eigen::Matrix2cd t = Eigen::Matrix2cd::Zero();
    t(0, 1) = 1.0;
    return t;
}

double one_form_scale(const TruncatedRep& rep) {
    return std::sqrt(rep.c0 * (1.0 + rep.q0 * rep.q0));
}

} // namespace

Eigen::MatrixXcd represent_dz(const TruncatedRep& rep) {
    return one_form_scale(rep) * tensor_form(rep.rho, tau_matrix());
}

Eigen::MatrixXcd represent_dzb(const TruncatedRep& rep) {
    return one_form_scale(rep) * tensor_form(rep.rho, tau_matrix().adjoint());
}

DiracRep build_dirac(const TruncatedRep& rep) {
    const int n = rep.K_max + 1;
    const double lam = rep.q0 - 1.0 / rep.q0;
    DiracRep d;
    d.K_max = rep.K_max;
    d.k_d = rep.q0 / lam * one_form_scale(rep);

    const cplx i{0.0, 1.0};
    d.dirac = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
    d.dirac.block(0, 0, n, n) = i * Eigen::MatrixXcd::Identity(n, n);
    d.dirac.block(0, n, n, n) = rep.zb;
    d.dirac.block(n, 0, n, n) = -rep.z;
    d.dirac.block(n, n, n, n) = -i * Eigen::MatrixXcd::Identity(n, n);
    d.dirac *= d.k_d;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(d.dirac.adjoint() * d.dirac);
    const auto& ev = es.eigenvalues();
    if (ev.minCoeff() <= 1e-12 * ev.maxCoeff())
        throw std::runtime_error("build_dirac: Dirac operator singular on this window");
    d.dsq_inv = es.eigenvectors() * ev.cwiseInverse().asDiagonal() *
                es.eigenvectors().adjoint();

    d.tau = tau_matrix();
    d.tau_dag = d.tau.adjoint();
    d.iota = Eigen::Matrix2cd::Zero();
    d.iota(0, 0) = rep.q0;
    d.iota(1, 1) = 1.0 / rep.q0;
    d.grading = Eigen::Matrix2cd::Zero();
    d.grading(0, 0) = 1.0;
    d.grading(1, 1) = -1.0;
    return d;
}

namespace {

// Entry (r, c) of a doubled-space matrix touches the boundary when
// either state index equals K_max.
ResidualReport split_residual(const Eigen::MatrixXcd& got,
                              const Eigen::MatrixXcd& target, int K_max) {
    const int n = K_max + 1;
    ResidualReport rep;
    for (int r = 0; r < got.rows(); ++r)
        for (int c = 0; c < got.cols(); ++c) {
            const double a =
                std::abs(got(r, c) - target(r, c)) / (1.0 + std::abs(target(r, c)));
            if (r % n == K_max || c % n == K_max)
                rep.boundary = std::max(rep.boundary, a);
            else
                rep.interior = std::max(rep.interior, a);
        }
    return rep;
}

ResidualReport merge(const ResidualReport& a, const ResidualReport& b) {
    return {std::max(a.interior, b.interior), std::max(a.boundary, b.boundary)};
}

} // namespace

ResidualReport check_commutator_realization(const TruncatedRep& rep,
                                            const DiracRep& dirac) {
    const Eigen::Matrix2cd id2 = Eigen::Matrix2cd::Identity();
    const Eigen::MatrixXcd zf = tensor_form(rep.z, id2);
    const Eigen::MatrixXcd zbf = tensor_form(rep.zb, id2);
    const auto comm = [&](const Eigen::MatrixXcd& a) {
        return dirac.dirac * a - a * dirac.dirac;
    };
    return merge(split_residual(comm(zf), represent_dz(rep), rep.K_max),
                 split_residual(comm(zbf), represent_dzb(rep), rep.K_max));
}

ResidualReport aux_vtrace(const DiracRep& dirac) {
    const int n = dirac.K_max + 1;
    ResidualReport out;
    for (int k = 0; k < n; ++k) {
        cplx t = 0;
        for (int v = 0; v < 2; ++v)
            t += dirac.grading(v, v) * dirac.iota(v, v) *
                 dirac.dsq_inv(v * n + k, v * n + k);
        const double a = std::abs(t);
        if (k == dirac.K_max)
            out.boundary = std::max(out.boundary, a);
        else
            out.interior = std::max(out.interior, a);
    }
    return out;
}

std::complex<double> trace_integrate(const DiracRep& dirac,
                                     const Eigen::MatrixXcd& two_form) {
    const int n = dirac.K_max + 1;
    if (two_form.rows() != 2 * n || two_form.cols() != 2 * n)
        throw std::domain_error("trace_integrate: form does not match the window");
    const Eigen::MatrixXcd g =
        tensor_form(Eigen::MatrixXcd::Identity(n, n), dirac.grading);
    return (g * two_form * dirac.dsq_inv).trace();
}

namespace {

double poly_in_rho_inv(const std::vector<double>& coeff, double q0, int k) {
    // Horner in the variable q^2k = 1/sigma.
    const double x = std::pow(q0, 2 * k);
    double acc = 0;
    for (auto it = coeff.rbegin(); it != coeff.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

void check_level(const TruncatedRep& rep, int k) {
    if (k < 0 || k > rep.K_max)
        throw std::domain_error("state_expectation: level outside the window");
}

} // namespace

double state_expectation(const TruncatedRep& rep,
                         const std::vector<std::pair<int, double>>& rho_powers, int k) {
    check_level(rep, k);
    double acc = 0;
    for (const auto& [p, c] : rho_powers)
        acc += c * std::pow(rep.q0, -2.0 * p * k);
    return acc;
}

double state_expectation(const TruncatedRep& rep, const DistanceSeries& s, int k) {
    check_level(rep, k);
    return series_value(s, spectrum(s.q0, k));
}

SanityReport distance_sanity_search(const DistanceSeries& s, const TruncatedRep& rep,
                                    int trials, int degree_bound,
                                    double tolerance, unsigned seed) {
    if (trials < 1 || degree_bound < 0)
        throw std::domain_error("distance_sanity_search: bad trial parameters");
    const int n = rep.K_max + 1;
    const double q0 = s.q0;
    const double lam = q0 - 1.0 / q0;
    const double r = 1.0 / (1.0 + 1.0 / (q0 * q0));
    const double factor = q0 * q0 * s.c * r / (lam * lam);

    std::vector<double> dist(n);
    for (int k = 0; k < n; ++k)
        dist[k] = series_value(s, spectrum(q0, k));

    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    SanityReport report;
    report.trials = trials;
    report.tolerance = tolerance;

    std::vector<double> coeff(static_cast<size_t>(degree_bound) + 1);
    std::vector<double> fval(n);
    for (int t = 0; t < trials; ++t) {
        for (auto& c : coeff)
            c = unit(rng);
        for (int k = 0; k < n; ++k)
            fval[k] = poly_in_rho_inv(coeff, q0, k);

        // |df|^2 eigenvalue on |k>: each hopping channel contributes
        // (sigma - 1)(f(q^2 sigma) - f(sigma))^2 at its upper endpoint.
        const auto channel = [&](int level) {
            const double sig = spectrum(q0, level);
            const double diff = fval[level - 1] - fval[level];
            return (sig - 1.0) * diff * diff;
        };
        double vmax = 0;
        for (int k = 0; k < n; ++k) {
            double v = k + 1 < n ? channel(k + 1) : 0.0;
            if (k > 0)
                v += channel(k);
            vmax = std::max(vmax, factor * v);
        }
        const double scale = vmax > 1e-300 ? 1.0 / std::sqrt(vmax) : 1.0;

        for (int m = 1; m < n; ++m)
            for (int nn = 0; nn < m; ++nn) {
                const double gap = scale * std::abs(fval[m] - fval[nn]);
                const double d = dist[nn] - dist[m];
                report.max_ratio = std::max(report.max_ratio, gap / d);
                if (gap > d + tolerance)
                    ++report.violations;
            }
    }
    return report;
}

} // namespace qriemann
