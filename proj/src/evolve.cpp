#include "qwre/evolve.hpp"

#include <cmath>
#include <stdexcept>

namespace qwre {

WalkState::WalkState(int time, std::vector<ChiralityVector> packed)
    : time_(time), packed_(std::move(packed)) {
    if (time < 0 || packed_.size() != static_cast<std::size_t>(time) + 1) {
        throw std::invalid_argument("WalkState: packed storage must hold time+1 entries");
    }
}

ChiralityVector WalkState::amplitude(int x) const {
    if (x < -time_ || x > time_ || (x - time_) % 2 != 0) return {};
    return packed_[static_cast<std::size_t>((x + time_) / 2)];
}

double WalkState::norm_sq() const {
    double total = 0.0;
    for (const auto& amp : packed_) total += amp.norm_sq();
    return total;
}

double Distribution::total() const {
    double sum = 0.0;
    for (const auto& [x, p] : mass) sum += p;
    return sum;
}

ChiralityVector symmetric_initial_qubit() {
    return {cplx{M_SQRT1_2, 0.0}, cplx{0.0, M_SQRT1_2}};
}

WalkState initial_state(const ChiralityVector& qubit) {
    if (std::abs(qubit.norm_sq() - 1.0) > 1e-12) {
        throw std::invalid_argument("initial_state: qubit must be normalized");
    }
    return WalkState(0, {qubit});
}

WalkState step(const WalkState& state, const Environment& env) {
    const int n = state.time();
    std::vector<ChiralityVector> next(static_cast<std::size_t>(n) + 2);
    // Coin at the walker's site, then move: P scatters left, Q scatters right.
    for (int k = 0; k <= n; ++k) {
        const ChiralityVector& amp = state.packed()[static_cast<std::size_t>(k)];
        const int x = -n + 2 * k;
        const Coin coin = coin_from_phase(env.phase(x));
        // New packed index of position x-1 at time n+1 is k; of x+1 is k+1.
        next[static_cast<std::size_t>(k)].left += coin.a * amp.left + coin.b * amp.right;
        next[static_cast<std::size_t>(k) + 1].right += coin.c * amp.left + coin.d * amp.right;
    }
    return WalkState(n + 1, std::move(next));
}

Distribution distribution(const WalkState& state) {
    Distribution dist;
    dist.time = state.time();
    const int n = state.time();
    for (int k = 0; k <= n; ++k) {
        dist.mass[-n + 2 * k] = state.packed()[static_cast<std::size_t>(k)].norm_sq();
    }
    return dist;
}

Distribution evolve_to(const ChiralityVector& qubit, const Environment& env, int n) {
    if (n < 0) throw std::invalid_argument("evolve_to: n must be >= 0");
    WalkState state = initial_state(qubit);
    for (int t = 0; t < n; ++t) state = step(state, env);
    const double drift = std::abs(state.norm_sq() - 1.0);
    if (drift > 1e-9) {
        throw std::logic_error("evolve_to: norm drift exceeded 1e-9");
    }
    return distribution(state);
}

cplx characteristic_function(const Distribution& dist, double xi) {
    if (dist.time == 0) return {1.0, 0.0};
    cplx sum{};
    for (const auto& [x, p] : dist.mass) {
        sum += p * std::polar(1.0, xi * static_cast<double>(x) / dist.time);
    }
    return sum;
}

}  // namespace qwre
