#include "qwre/limit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qwre/quadrature.hpp"

namespace qwre {

namespace {

constexpr double kSupport = 0.70710678118654752440;  // 1/sqrt2
constexpr double kHalfPi = 1.57079632679489661923;

// t-parametrization x = sin(t)/sqrt2 removes the edge singularity exactly:
// density(x) dx = (1 - s sin(t)/sqrt2) * sqrt2 / (pi (2 - sin^2 t)) dt.
double t_of_x(double x) {
    const double clamped = std::clamp(x, -kSupport, kSupport);
    return std::asin(std::clamp(clamped * M_SQRT2, -1.0, 1.0));
}

double weight_t(double t) {
    const double st = std::sin(t);
    return M_SQRT2 / (M_PI * (2.0 - st * st));
}

}  // namespace

double f_k(double x) {
    if (!(std::abs(x) < kSupport)) return 0.0;
    return 1.0 / (M_PI * (1.0 - x * x) * std::sqrt(1.0 - 2.0 * x * x));
}

double LimitDensity::operator()(double x) const { return (1.0 - mean_sin * x) * f_k(x); }

LimitDensity quenched_limit_density(double omega0) {
    if (!std::isfinite(omega0)) {
        throw std::invalid_argument("quenched_limit_density: omega0 must be finite");
    }
    return LimitDensity{std::sin(omega0)};
}

LimitDensity annealed_limit_density(const PhaseMeasure& measure) {
    return LimitDensity{measure_mean_sin(measure)};
}

double limit_probability(const LimitDensity& density, double u, double v) {
    if (std::isnan(u) || std::isnan(v) || u > v) {
        throw std::invalid_argument("limit_probability: need u <= v");
    }
    const double ta = t_of_x(u);
    const double tb = t_of_x(v);
    if (ta >= tb) return 0.0;
    const double s = density.mean_sin;
    return integrate(
        [s](double t) { return (1.0 - s * std::sin(t) * M_SQRT1_2) * weight_t(t); }, ta, tb,
        1e-12);
}

Moments limit_moments(const LimitDensity& density) {
    const double c = 0.5 * (2.0 - M_SQRT2);
    const double s = density.mean_sin;
    Moments closed{-s * c, c * (1.0 - c * s * s)};

    const auto x_of_t = [](double t) { return std::sin(t) * M_SQRT1_2; };
    const auto dens_t = [&](double t) {
        return (1.0 - s * x_of_t(t)) * weight_t(t);
    };
    const double m1 =
        integrate([&](double t) { return x_of_t(t) * dens_t(t); }, -kHalfPi, kHalfPi, 1e-12);
    const double m2 = integrate([&](double t) { return x_of_t(t) * x_of_t(t) * dens_t(t); },
                                -kHalfPi, kHalfPi, 1e-12);
    const double qvar = m2 - m1 * m1;
    if (std::abs(m1 - closed.mean) > 1e-8 || std::abs(qvar - closed.variance) > 1e-8) {
        throw std::logic_error("limit_moments: closed form and quadrature disagree");
    }
    return closed;
}

cplx limit_characteristic(const LimitDensity& density, double xi) {
    if (xi == 0.0) return {1.0, 0.0};
    const double s = density.mean_sin;
    return integrate(
        [&](double t) {
            const double x = std::sin(t) * M_SQRT1_2;
            return std::polar(1.0, xi * x) * ((1.0 - s * x) * weight_t(t));
        },
        -kHalfPi, kHalfPi, 1e-12);
}

double kolmogorov_distance(const Distribution& dist, const LimitDensity& density) {
    const double n = dist.time > 0 ? static_cast<double>(dist.time) : 1.0;
    double ks = 0.0;
    double cum_emp = 0.0;
    double cum_lim = 0.0;
    double prev_atom = -1.0;  // below the support; limit_probability clips
    for (const auto& [x, p] : dist.mass) {
        const double atom = static_cast<double>(x) / n;
        cum_lim += limit_probability(density, prev_atom, atom);
        ks = std::max(ks, std::abs(cum_lim - cum_emp));  // just below the atom
        cum_emp += p;
        ks = std::max(ks, std::abs(cum_lim - cum_emp));  // at the atom
        prev_atom = atom;
    }
    return ks;
}

ConvergenceReport convergence_report(const Environment& env, const std::vector<int>& n_values,
                                     const ChiralityVector& qubit) {
    if (n_values.empty()) {
        throw std::invalid_argument("convergence_report: n_values must be non-empty");
    }
    for (std::size_t i = 0; i < n_values.size(); ++i) {
        if (n_values[i] <= 0 || (i > 0 && n_values[i] <= n_values[i - 1])) {
            throw std::invalid_argument("convergence_report: n_values must be positive ascending");
        }
    }
    const LimitDensity density = quenched_limit_density(env.phase(0));
    ConvergenceReport report;
    report.n_values = n_values;
    for (const int n : n_values) {
        const Distribution dist = evolve_to(qubit, env, n);
        double mean = 0.0, second = 0.0;
        for (const auto& [x, p] : dist.mass) {
            const double r = static_cast<double>(x) / n;
            mean += p * r;
            second += p * r * r;
        }
        report.ks_distances.push_back(kolmogorov_distance(dist, density));
        report.empirical_means.push_back(mean);
        report.empirical_variances.push_back(second - mean * mean);
    }
    return report;
}

ConvergenceReport convergence_report(double omega0, const std::vector<int>& n_values,
                                     const ChiralityVector& qubit) {
    return convergence_report(Environment(omega0), n_values, qubit);
}

}  // namespace qwre
