#pragma once

#include <map>
#include <vector>

#include "qwre/coin.hpp"
#include "qwre/environment.hpp"
#include "qwre/matrix2.hpp"

namespace qwre {

/// Walker state at a fixed time: chirality amplitudes over the reachable
/// parity class. Positions x with x != time (mod 2) hold exactly zero.
class WalkState {
  public:
    WalkState(int time, std::vector<ChiralityVector> packed);

    int time() const { return time_; }
    /// Amplitude at position x; exact zero off-parity or outside [-n, n].
    ChiralityVector amplitude(int x) const;
    double norm_sq() const;

    /// Reachable positions in ascending order: -n, -n+2, ..., n.
    const std::vector<ChiralityVector>& packed() const { return packed_; }

  private:
    int time_ = 0;
    std::vector<ChiralityVector> packed_;  // index k <-> position -time + 2k
};

/// Position law at a fixed time; keys cover the whole parity class -n..n.
struct Distribution {
    int time = 0;
    std::map<int, double> mass;

    double at(int x) const {
        auto it = mass.find(x);
        return it == mass.end() ? 0.0 : it->second;
    }
    double total() const;
};

/// The symmetric initial qubit (1/sqrt2, i/sqrt2): the zero-phase walk
/// started from it has a distribution symmetric about the origin.
ChiralityVector symmetric_initial_qubit();

/// State at time 0: all mass at the origin with the given chirality.
/// The qubit must be normalized to 1e-12.
WalkState initial_state(const ChiralityVector& qubit);

/// One update: the coin acts at the walker's current site, then the walker
/// moves; psi'(x) = P_{x+1} psi(x+1) + Q_{x-1} psi(x-1).
WalkState step(const WalkState& state, const Environment& env);

/// mass(x) = |left_x|^2 + |right_x|^2 over the parity class.
Distribution distribution(const WalkState& state);

/// n steps from the given qubit at the origin; O(n^2) arithmetic total.
/// Norm drift is monitored (not corrected) and must stay below 1e-9.
Distribution evolve_to(const ChiralityVector& qubit, const Environment& env, int n);

/// E(e^{i xi X_n / n}) for the distribution's own n (n = 0 contributes 1).
cplx characteristic_function(const Distribution& dist, double xi);

}  // namespace qwre
