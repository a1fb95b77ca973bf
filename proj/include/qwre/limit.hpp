#pragma once

#include <vector>

#include "qwre/environment.hpp"
#include "qwre/evolve.hpp"
#include "qwre/matrix2.hpp"

namespace qwre {

/// Density of X_n/n as n -> infinity: (1 - mean_sin * x) f_K(x) on the open
/// interval (-1/sqrt2, 1/sqrt2).
struct LimitDensity {
    double mean_sin = 0.0;

    double operator()(double x) const;
    static constexpr double support_radius() { return 0.70710678118654752440; }
};

/// f_K(x) = 1 / (pi (1-x^2) sqrt(1-2x^2)) on (-1/sqrt2, 1/sqrt2), else 0.
double f_k(double x);

/// Limit density for one fixed environment; depends only on omega_0.
LimitDensity quenched_limit_density(double omega0);

/// Limit density averaged over the environment measure at the origin;
/// symmetric measures recover f_K exactly.
LimitDensity annealed_limit_density(const PhaseMeasure& measure);

/// Integral of the density over [u, v] (clipped to the support), absolute
/// error ~1e-10. The endpoint singularities are removed exactly by the
/// substitution x = sin(t)/sqrt2 before quadrature.
double limit_probability(const LimitDensity& density, double u, double v);

struct Moments {
    double mean = 0.0;
    double variance = 0.0;
};

/// Closed-form mean and variance of the limit density:
///   mean = -mean_sin (2-sqrt2)/2,
///   var  = (2-sqrt2)/2 [1 - (2-sqrt2)/2 mean_sin^2].
/// Both are recomputed by quadrature and cross-asserted within 1e-8.
Moments limit_moments(const LimitDensity& density);

/// Integral of e^{i xi x} against the density; 1 at xi = 0.
cplx limit_characteristic(const LimitDensity& density, double xi);

/// Finite-n convergence diagnostics against the limit law.
struct ConvergenceReport {
    std::vector<int> n_values;
    std::vector<double> ks_distances;
    std::vector<double> empirical_means;
    std::vector<double> empirical_variances;
};

/// For each n: evolve, rescale to X_n/n, and compare with the limit CDF in
/// Kolmogorov distance (evaluated at every atom, attaining the sup), plus
/// the empirical mean and variance of X_n/n.
ConvergenceReport convergence_report(const Environment& env, const std::vector<int>& n_values,
                                     const ChiralityVector& qubit);
ConvergenceReport convergence_report(double omega0, const std::vector<int>& n_values,
                                     const ChiralityVector& qubit);

/// Kolmogorov distance between a discrete law (already rescaled) and the
/// limit CDF.
double kolmogorov_distance(const Distribution& dist, const LimitDensity& density);

}  // namespace qwre
