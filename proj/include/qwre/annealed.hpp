#pragma once

#include <cstdint>
#include <map>

#include "qwre/environment.hpp"
#include "qwre/evolve.hpp"

namespace qwre {

/// Environment-averaged law of X_n. Atomic measures average the quenched
/// laws over the atoms; the continuous kinds shift the zero-phase law by
/// E(sin omega_0), which is exact but capped by the amplitude formulas.
Distribution annealed_distribution_exact(const PhaseMeasure& measure, int n,
                                         const ChiralityVector& qubit);

/// Monte Carlo estimate with per-position standard errors.
struct McDistribution {
    Distribution mean;
    std::map<int, double> std_error;
    int samples = 0;
};

McDistribution annealed_distribution_mc(const EnvironmentSpec& spec, int n, int samples,
                                        std::uint64_t seed, const ChiralityVector& qubit);

}  // namespace qwre
