#include "qwre/closedform.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qwre/binomial.hpp"
#include "qwre/errors.hpp"

namespace qwre {

namespace {

std::uint64_t binom(int n, int k) { return binomial(n, k); }

double inv_sqrt2_pow(int e) {
    double r = std::ldexp(1.0, -(e / 2));
    if (e % 2 != 0) r *= M_SQRT1_2;
    return r;
}

// Sum of omega_j over the inclusive site range [a..b] (either direction).
double phase_sum(const Environment& env, int a, int b) {
    const int lo = std::min(a, b), hi = std::max(a, b);
    double sum = 0.0;
    for (int j = lo; j <= hi; ++j) sum += env.phase(j);
    return sum;
}

cplx unit_phase(double angle) { return std::polar(1.0, angle); }

// The alternating amplitude sums are integers; they are accumulated in
// 128-bit arithmetic so the heavy cancellation at large n costs no
// precision. Double accumulation loses ~7 digits by n = 60.
using int128 = __int128;

double signed_sum_p(int l, int m) {
    int128 acc = 0;
    const int upper = std::min(l - 1, m);
    for (int g = 1; g <= upper; ++g) {
        const int128 term = static_cast<int128>(binom(l - 1, g)) * binom(m - 1, g - 1);
        acc += ((m - g) % 2 == 0) ? term : -term;
    }
    return static_cast<double>(acc);
}

double signed_sum_q(int l, int m) {
    int128 acc = 0;
    const int upper = std::min(l, m - 1);
    for (int g = 1; g <= upper; ++g) {
        const int128 term = static_cast<int128>(binom(l - 1, g - 1)) * binom(m - 1, g);
        acc += ((m - g - 1) % 2 == 0) ? term : -term;
    }
    return static_cast<double>(acc);
}

double signed_sum_rs(int l, int m) {
    int128 acc = 0;
    const int upper = std::min(l, m);
    for (int g = 1; g <= upper; ++g) {
        const int128 term = static_cast<int128>(binom(l - 1, g - 1)) * binom(m - 1, g - 1);
        acc += ((m - g) % 2 == 0) ? term : -term;
    }
    return static_cast<double>(acc);
}

}  // namespace

HadamardAmplitudes hadamard_amplitudes(int l, int m, int cap) {
    if (l < 0 || m < 0) throw std::invalid_argument("hadamard_amplitudes: negative step count");
    const int n = l + m;
    if (n == 0) throw std::invalid_argument("hadamard_amplitudes: l+m must be >= 1");
    if (n > cap || n > kBinomialMaxRow) {
        throw resource_limit_error("hadamard_amplitudes: l+m exceeds the precision cap");
    }
    const double scale = inv_sqrt2_pow(n - 1);
    HadamardAmplitudes amps;
    if (m == 0) {
        amps.p_h = scale;
        return amps;
    }
    if (l == 0) {
        amps.q_h = (n - 1) % 2 == 0 ? scale : -scale;
        return amps;
    }
    amps.p_h = scale * signed_sum_p(l, m);
    amps.q_h = scale * signed_sum_q(l, m);
    amps.r_h = scale * signed_sum_rs(l, m);
    amps.s_h = amps.r_h;
    return amps;
}

PhaseFactors phase_factors(int l, int m, const Environment& env) {
    if (l < 0 || m < 0) throw std::invalid_argument("phase_factors: negative step count");
    const int n = l + m;
    if (n == 0) throw std::invalid_argument("phase_factors: l+m must be >= 1");
    PhaseFactors th;
    if (l == 0) {
        // q is the only live amplitude; its phase is the all-right product.
        th.theta_q = unit_phase(n >= 2 ? -phase_sum(env, 1, n - 1) : 0.0);
        return th;
    }
    if (m == 0) {
        // Sign follows the product-table reduction of the all-left word
        // (and the generic l-1 > m branch), e^{+i(omega_{-1}+...)}.
        th.theta_p = unit_phase(n >= 2 ? phase_sum(env, -(n - 1), -1) : 0.0);
        return th;
    }
    if (l - 1 > m) {
        th.theta_p = unit_phase(phase_sum(env, -(l - m - 1), -1));
    } else if (l - 1 < m) {
        th.theta_p = unit_phase(-phase_sum(env, 0, m - l));
    }
    if (l > m - 1) {
        th.theta_q = unit_phase(phase_sum(env, -(l - m), 0));
    } else if (l < m - 1) {
        th.theta_q = unit_phase(-phase_sum(env, 1, m - l - 1));
    }
    if (l > m) {
        th.theta_r = unit_phase(phase_sum(env, -(l - m - 1), 0));
        th.theta_s = unit_phase(phase_sum(env, -(l - m), -1));
    } else if (l < m) {
        th.theta_r = unit_phase(-phase_sum(env, 1, m - l));
        th.theta_s = unit_phase(-phase_sum(env, 0, m - l - 1));
    }
    return th;
}

PqrsCoefficients xi_coefficients_closed(int l, int m, const Environment& env, int cap) {
    const HadamardAmplitudes amps = hadamard_amplitudes(l, m, cap);
    const PhaseFactors th = phase_factors(l, m, env);
    return PqrsCoefficients{th.theta_p * amps.p_h, th.theta_q * amps.q_h,
                            th.theta_r * amps.r_h, th.theta_s * amps.s_h};
}

namespace {

// P^{0,mu}_d(0) and P^{1,mu}_d(0) as exact integer sums over a power-of-two
// denominator; valid while every binomial stays inside the table.
bool jacobi_exact_in_range(int d, int nu, int mu) {
    return d + nu + mu + d + 1 <= kBinomialMaxRow;
}

double jacobi_at_zero_exact(int d, int nu, int mu) {
    int128 acc = 0;
    if (nu == 0) {
        for (int k = 0; k <= d; ++k) {
            const int128 term = static_cast<int128>(binom(d, k)) * binom(d + mu + k, k)
                                << (d - k);
            acc += (k % 2 == 0) ? term : -term;
        }
        return static_cast<double>(acc) * std::ldexp(1.0, -d);
    }
    // nu == 1
    for (int k = 0; k <= d; ++k) {
        const int128 term = static_cast<int128>(binom(d, k)) * binom(d + mu + 1 + k, k + 1)
                            << (d - k);
        acc += (k % 2 == 0) ? term : -term;
    }
    return static_cast<double>(acc) * (d + 1) / (static_cast<double>(d + mu + 1) * std::ldexp(1.0, d));
}

bool is_nonneg_int(double v) { return v >= 0.0 && v == std::floor(v); }

}  // namespace

double jacobi_p(int n, double nu, double mu, double x) {
    if (n < 0) throw std::invalid_argument("jacobi_p: degree must be >= 0");
    if (!(nu > -1.0) || !(mu > -1.0)) {
        throw std::invalid_argument("jacobi_p: parameters must exceed -1");
    }
    if (!std::isfinite(x)) throw std::invalid_argument("jacobi_p: x must be finite");
    if (n == 0) return 1.0;

    if (x == 0.0 && is_nonneg_int(nu) && is_nonneg_int(mu) && (nu == 0.0 || nu == 1.0) &&
        jacobi_exact_in_range(n, static_cast<int>(nu), static_cast<int>(mu))) {
        return jacobi_at_zero_exact(n, static_cast<int>(nu), static_cast<int>(mu));
    }
    if (x < 0.0) {
        // Reflect to keep the series argument (1-x)/2 at most 1/2; the
        // alternating sum cancels badly as x approaches -1 otherwise.
        const double reflected = jacobi_p(n, mu, nu, -x);
        return n % 2 == 0 ? reflected : -reflected;
    }

    // Terminating 2F1(-n, n+nu+mu+1; nu+1; (1-x)/2), accumulated in double.
    double prefactor;
    if (is_nonneg_int(nu)) {
        prefactor = 1.0;  // C(n+nu, n) as an exact product
        for (int j = 1; j <= static_cast<int>(nu); ++j) {
            prefactor *= static_cast<double>(n + j) / j;
        }
    } else {
        prefactor = std::exp(std::lgamma(n + nu + 1.0) - std::lgamma(n + 1.0) -
                             std::lgamma(nu + 1.0));
    }
    const double z = 0.5 * (1.0 - x);
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < n; ++k) {
        term *= (static_cast<double>(k - n) * (n + nu + mu + 1.0 + k)) /
                ((nu + 1.0 + k) * (k + 1.0)) * z;
        sum += term;
    }
    return prefactor * sum;
}

std::pair<double, double> amplitudes_via_jacobi(int l, int n) {
    if (n <= 0 || l < 1 || l > n / 2) {
        throw std::invalid_argument("amplitudes_via_jacobi: need 1 <= l <= n/2");
    }
    const double p0 = jacobi_p(l - 1, 0.0, n - 2 * l, 0.0);
    const double p1 = jacobi_p(l - 1, 1.0, n - 2 * l, 0.0);
    const double sign = (n - l) % 2 == 0 ? 1.0 : -1.0;
    const double scale = inv_sqrt2_pow(n - 2 * l + 1) * sign;
    const double p_h = scale * (p0 - p1);
    const double q_h = scale * (static_cast<double>(n - l) / l * p1 - p0);
    return {p_h, q_h};
}

Distribution quenched_distribution_reduced(int n, double omega0, const Distribution& hadamard_dist) {
    if (n <= 0) throw std::invalid_argument("quenched_distribution_reduced: n must be positive");
    if (hadamard_dist.time != n) {
        throw std::invalid_argument("quenched_distribution_reduced: base distribution time mismatch");
    }
    const double s = std::sin(omega0);
    Distribution dist;
    dist.time = n;
    for (int l = 0; l <= n; ++l) {
        const int m = n - l;
        const int x = m - l;
        const HadamardAmplitudes amps = hadamard_amplitudes(l, m);
        double mass = hadamard_dist.at(x) +
                      0.5 * (amps.p_h * amps.p_h - amps.q_h * amps.q_h) * s;
        if (mass < -1e-10) {
            throw std::logic_error("quenched_distribution_reduced: negative mass; formula misapplied");
        }
        dist.mass[x] = std::max(mass, 0.0);
    }
    if (std::abs(dist.total() - 1.0) > 1e-10) {
        throw std::logic_error("quenched_distribution_reduced: total mass drifted from 1");
    }
    return dist;
}

double w2_vanishes_check(int l, int m, const Environment& env) {
    const HadamardAmplitudes amps = hadamard_amplitudes(l, m);
    const PhaseFactors th = phase_factors(l, m, env);
    const cplx g = 1.0 + unit_phase(2.0 * env.phase(0));
    const double w2 =
        -0.5 * amps.r_h *
        (amps.p_h * std::imag(g * th.theta_p * std::conj(th.theta_r)) +
         amps.q_h * std::imag(g * th.theta_s * std::conj(th.theta_q)));
    return std::abs(w2);
}

}  // namespace qwre
