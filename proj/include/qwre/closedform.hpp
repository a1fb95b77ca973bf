#pragma once

#include "qwre/environment.hpp"
#include "qwre/evolve.hpp"
#include "qwre/pathsum.hpp"

namespace qwre {

/// Environment-free amplitude magnitudes p/q/r/s of the zero-phase walk.
/// r_h == s_h always (they share one defining sum).
struct HadamardAmplitudes {
    double p_h = 0.0, q_h = 0.0, r_h = 0.0, s_h = 0.0;
};

/// Unit-modulus environment phases multiplying the Hadamard amplitudes.
struct PhaseFactors {
    cplx theta_p{1.0}, theta_q{1.0}, theta_r{1.0}, theta_s{1.0};
};

inline constexpr int kAmplitudeCap = 64;

/// Alternating binomial sums for the zero-phase amplitudes, evaluated
/// exactly in 128-bit integers and scaled by (1/sqrt2)^{n-1} once.
/// Boundary rows: (n,0) gives p only, (0,n) gives q only.
HadamardAmplitudes hadamard_amplitudes(int l, int m, int cap = kAmplitudeCap);

/// The four phase factors, split on l vs m with the boundary rows l^m = 0
/// taking precedence. theta_p at (n,0) carries e^{+i(omega_{-1}+...)}, the
/// sign produced by the product-table reduction of the single all-left path.
PhaseFactors phase_factors(int l, int m, const Environment& env);

/// Componentwise product theta * amplitude: the closed form of Xi_n(l,m).
PqrsCoefficients xi_coefficients_closed(int l, int m, const Environment& env,
                                        int cap = kAmplitudeCap);

/// Jacobi polynomial P^{nu,mu}_n(x) via the terminating hypergeometric sum.
/// Integer nu, mu at x = 0 are evaluated in exact integer arithmetic;
/// everything else falls back to double accumulation.
double jacobi_p(int n, double nu, double mu, double x);

/// p_h and q_h at (l, n-l) through the Jacobi forms, for 1 <= l <= n/2.
std::pair<double, double> amplitudes_via_jacobi(int l, int n);

/// Quenched law from the zero-phase law: each point moves by
/// (p_h^2 - q_h^2)/2 * sin(omega0). hadamard_dist must be the zero-phase
/// distribution at the same n, started from the symmetric initial qubit.
Distribution quenched_distribution_reduced(int n, double omega0, const Distribution& hadamard_dist);

/// |W_2|: the residual cross term of the quenched correction, identically
/// zero for every (l, m) and environment. Returned for numerical audit.
double w2_vanishes_check(int l, int m, const Environment& env);

}  // namespace qwre
