#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

namespace qwre {

/// Phase assignment omega_x for every lattice site. Lookup is total:
/// sites without an explicit entry read the default phase.
class Environment {
  public:
    Environment() = default;
    explicit Environment(double default_phase);

    double phase(int x) const {
        auto it = phases_.find(x);
        return it == phases_.end() ? default_phase_ : it->second;
    }
    void set_phase(int x, double omega);
    double default_phase() const { return default_phase_; }
    const std::unordered_map<int, double>& explicit_phases() const { return phases_; }

  private:
    std::unordered_map<int, double> phases_;
    double default_phase_ = 0.0;
};

/// Single-site phase distribution. Only measures with exactly computable
/// E(sin omega) are provided.
class PhaseMeasure {
  public:
    enum class Kind { Delta, Uniform, TwoPoint, Discrete };

    static PhaseMeasure delta(double a);
    static PhaseMeasure uniform(double lo, double hi);
    /// +theta / -theta with probability 1/2 each.
    static PhaseMeasure two_point(double theta);
    static PhaseMeasure discrete(std::vector<double> values, std::vector<double> weights);

    Kind kind() const { return kind_; }
    double value() const { return pa_; }  // Delta atom
    double lo() const { return pa_; }     // Uniform bounds
    double hi() const { return pb_; }
    double theta() const { return pa_; }  // TwoPoint parameter
    const std::vector<double>& values() const { return values_; }
    const std::vector<double>& weights() const { return weights_; }

  private:
    PhaseMeasure(Kind k, double pa, double pb) : kind_(k), pa_(pa), pb_(pb) {}
    Kind kind_;
    double pa_ = 0.0, pb_ = 0.0;
    std::vector<double> values_, weights_;
};

/// E(sin omega_0) under the measure; exact for every built-in kind.
double measure_mean_sin(const PhaseMeasure& measure);

/// True iff the measure is invariant under omega -> -omega.
bool is_symmetric(const PhaseMeasure& measure);

/// Product measure: independent per-site measures with a shared default.
struct EnvironmentSpec {
    PhaseMeasure default_measure = PhaseMeasure::delta(0.0);
    std::map<int, PhaseMeasure> per_site;

    const PhaseMeasure& measure_at(int x) const {
        auto it = per_site.find(x);
        return it == per_site.end() ? default_measure : it->second;
    }
};

/// Draws phases independently for all |x| <= extent. Deterministic in
/// (spec, seed); the stream for site x depends only on (seed, x), so
/// extending the window or editing one site never disturbs the others.
Environment sample_environment(const EnvironmentSpec& spec, int extent, std::uint64_t seed);

}  // namespace qwre
