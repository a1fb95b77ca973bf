#include "qwre/annealed.hpp"

#include <cmath>
#include <stdexcept>

#include "qwre/closedform.hpp"

namespace qwre {

namespace {

Distribution weighted_average(const std::vector<std::pair<double, double>>& atoms, int n,
                              const ChiralityVector& qubit) {
    Distribution out;
    out.time = n;
    for (const auto& [omega, weight] : atoms) {
        const Distribution quenched = evolve_to(qubit, Environment(omega), n);
        for (const auto& [x, p] : quenched.mass) out.mass[x] += weight * p;
    }
    return out;
}

}  // namespace

Distribution annealed_distribution_exact(const PhaseMeasure& measure, int n,
                                         const ChiralityVector& qubit) {
    if (n < 0) throw std::invalid_argument("annealed_distribution_exact: n must be >= 0");
    switch (measure.kind()) {
        case PhaseMeasure::Kind::Delta:
            return evolve_to(qubit, Environment(measure.value()), n);
        case PhaseMeasure::Kind::TwoPoint:
            return weighted_average({{measure.theta(), 0.5}, {-measure.theta(), 0.5}}, n, qubit);
        case PhaseMeasure::Kind::Discrete: {
            std::vector<std::pair<double, double>> atoms;
            for (std::size_t i = 0; i < measure.values().size(); ++i) {
                atoms.emplace_back(measure.values()[i], measure.weights()[i]);
            }
            return weighted_average(atoms, n, qubit);
        }
        case PhaseMeasure::Kind::Uniform: {
            // The law depends on the environment only through sin(omega_0),
            // linearly; averaging swaps sin(omega_0) for its mean.
            const Distribution hadamard = evolve_to(qubit, Environment(0.0), n);
            if (n == 0) return hadamard;
            const double mean_sin = measure_mean_sin(measure);
            Distribution out;
            out.time = n;
            for (int l = 0; l <= n; ++l) {
                const HadamardAmplitudes amps = hadamard_amplitudes(l, n - l);
                const int x = n - 2 * l;
                out.mass[x] = hadamard.at(x) +
                              0.5 * (amps.p_h * amps.p_h - amps.q_h * amps.q_h) * mean_sin;
            }
            return out;
        }
    }
    throw std::invalid_argument("annealed_distribution_exact: unhandled measure kind");
}

McDistribution annealed_distribution_mc(const EnvironmentSpec& spec, int n, int samples,
                                        std::uint64_t seed, const ChiralityVector& qubit) {
    if (n < 0) throw std::invalid_argument("annealed_distribution_mc: n must be >= 0");
    if (samples <= 1) throw std::invalid_argument("annealed_distribution_mc: need samples > 1");
    std::map<int, double> sum, sum_sq;
    for (int i = 0; i < samples; ++i) {
        const Environment env = sample_environment(spec, n, seed + static_cast<std::uint64_t>(i));
        const Distribution quenched = evolve_to(qubit, env, n);
        for (const auto& [x, p] : quenched.mass) {
            sum[x] += p;
            sum_sq[x] += p * p;
        }
    }
    McDistribution result;
    result.samples = samples;
    result.mean.time = n;
    for (const auto& [x, total] : sum) {
        const double mean = total / samples;
        result.mean.mass[x] = mean;
        const double var = std::max(0.0, sum_sq[x] / samples - mean * mean);
        result.std_error[x] = std::sqrt(var / (samples - 1));
    }
    return result;
}

}  // namespace qwre
