#include "qwre/environment.hpp"

#include <cmath>
#include <stdexcept>

#include "qwre/errors.hpp"

namespace qwre {

Environment::Environment(double default_phase) : default_phase_(default_phase) {
    if (!std::isfinite(default_phase)) {
        throw std::invalid_argument("Environment: default phase must be finite");
    }
}

void Environment::set_phase(int x, double omega) {
    if (!std::isfinite(omega)) {
        throw std::invalid_argument("Environment::set_phase: phase must be finite");
    }
    phases_[x] = omega;
}

PhaseMeasure PhaseMeasure::delta(double a) {
    if (!std::isfinite(a)) throw config_error("delta measure: atom must be finite");
    return PhaseMeasure(Kind::Delta, a, a);
}

PhaseMeasure PhaseMeasure::uniform(double lo, double hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi)) {
        throw config_error("uniform measure: bounds must be finite");
    }
    if (lo > hi) throw config_error("uniform measure: lo must not exceed hi");
    return PhaseMeasure(Kind::Uniform, lo, hi);
}

PhaseMeasure PhaseMeasure::two_point(double theta) {
    if (!std::isfinite(theta)) throw config_error("two_point measure: theta must be finite");
    return PhaseMeasure(Kind::TwoPoint, theta, 0.0);
}

PhaseMeasure PhaseMeasure::discrete(std::vector<double> values, std::vector<double> weights) {
    if (values.empty() || values.size() != weights.size()) {
        throw config_error("discrete measure: values and weights must be non-empty and aligned");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) throw config_error("discrete measure: non-finite value");
        if (!(weights[i] >= 0.0)) throw config_error("discrete measure: negative weight");
        total += weights[i];
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw config_error("discrete measure: weights must sum to 1");
    }
    PhaseMeasure m(Kind::Discrete, 0.0, 0.0);
    m.values_ = std::move(values);
    m.weights_ = std::move(weights);
    return m;
}

double measure_mean_sin(const PhaseMeasure& measure) {
    switch (measure.kind()) {
        case PhaseMeasure::Kind::Delta:
            return std::sin(measure.value());
        case PhaseMeasure::Kind::Uniform: {
            const double lo = measure.lo(), hi = measure.hi();
            if (lo == hi) return std::sin(lo);  // zero width degenerates to a point mass
            return (std::cos(lo) - std::cos(hi)) / (hi - lo);
        }
        case PhaseMeasure::Kind::TwoPoint:
            return 0.0;
        case PhaseMeasure::Kind::Discrete: {
            double mean = 0.0;
            for (std::size_t i = 0; i < measure.values().size(); ++i) {
                mean += measure.weights()[i] * std::sin(measure.values()[i]);
            }
            return mean;
        }
    }
    return 0.0;
}

bool is_symmetric(const PhaseMeasure& measure) {
    switch (measure.kind()) {
        case PhaseMeasure::Kind::Delta:
            return measure.value() == 0.0;
        case PhaseMeasure::Kind::Uniform:
            return measure.lo() == -measure.hi();
        case PhaseMeasure::Kind::TwoPoint:
            return true;
        case PhaseMeasure::Kind::Discrete: {
            const auto& vals = measure.values();
            const auto& wts = measure.weights();
            for (std::size_t i = 0; i < vals.size(); ++i) {
                double mirrored = 0.0;
                for (std::size_t j = 0; j < vals.size(); ++j) {
                    if (vals[j] == -vals[i]) mirrored += wts[j];
                }
                double same = 0.0;
                for (std::size_t j = 0; j < vals.size(); ++j) {
                    if (vals[j] == vals[i]) same += wts[j];
                }
                if (std::abs(mirrored - same) > 1e-12) return false;
            }
            return true;
        }
    }
    return false;
}

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Counter-based per-site stream: draws depend only on (seed, x, counter).
struct SiteStream {
    std::uint64_t key;
    std::uint64_t ctr = 0;

    SiteStream(std::uint64_t seed, int x)
        : key(splitmix64(splitmix64(seed) ^
                         (static_cast<std::uint64_t>(static_cast<std::int64_t>(x)) *
                          0x9E3779B97F4A7C15ull))) {}

    std::uint64_t next_u64() { return splitmix64(key + ++ctr); }
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
};

double sample_phase(const PhaseMeasure& m, SiteStream& stream) {
    switch (m.kind()) {
        case PhaseMeasure::Kind::Delta:
            return m.value();
        case PhaseMeasure::Kind::Uniform:
            return m.lo() + (m.hi() - m.lo()) * stream.next_unit();
        case PhaseMeasure::Kind::TwoPoint:
            return (stream.next_u64() & 1u) ? m.theta() : -m.theta();
        case PhaseMeasure::Kind::Discrete: {
            const double u = stream.next_unit();
            double cum = 0.0;
            for (std::size_t i = 0; i < m.values().size(); ++i) {
                cum += m.weights()[i];
                if (u < cum) return m.values()[i];
            }
            return m.values().back();
        }
    }
    return 0.0;
}

}  // namespace

Environment sample_environment(const EnvironmentSpec& spec, int extent, std::uint64_t seed) {
    if (extent < 0) throw std::invalid_argument("sample_environment: extent must be >= 0");
    // Sites past the extent are unreachable in `extent` steps; they read the
    // default measure's atom when it has one, otherwise 0.
    const double fallback = spec.default_measure.kind() == PhaseMeasure::Kind::Delta
                                ? spec.default_measure.value()
                                : 0.0;
    Environment env(fallback);
    for (int x = -extent; x <= extent; ++x) {
        SiteStream stream(seed, x);
        env.set_phase(x, sample_phase(spec.measure_at(x), stream));
    }
    return env;
}

}  // namespace qwre
